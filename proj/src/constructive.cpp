// Copyright 2026 The revsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "revsynth/constructive.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "revsynth/gf2.hpp"
#include "revsynth/rewrite.hpp"

namespace revsynth {

namespace {

Index bit(int w) { return Index{1} << w; }

Index mask_of(const std::vector<int>& wires) {
  Index m = 0;
  for (int w : wires) m |= bit(w);
  return m;
}

// Multi-controlled NOT of `target` on `controls`, using the wires in `spare`
// as borrowed workspace whose values are restored.
void emit_mct(const std::vector<int>& controls, int target,
              const std::vector<int>& spare, std::vector<Gate>& out) {
  const std::size_t k = controls.size();
  if (k <= 2) {
    out.push_back(Gate::inverter(bit(target), mask_of(controls)));
    return;
  }
  if (spare.size() >= k - 2) {
    // V-chain: a[j] ^= c[j+1] a[j-1], a[0] ^= c[0] c[1], 4(k - 2) gates.
    const auto& c = controls;
    const auto& a = spare;
    std::vector<Gate> down;
    for (std::size_t i = k - 2; i >= 2; --i) {
      down.push_back(Gate::toffoli(c[i], a[i - 2], a[i - 1]));
    }
    const Gate base = Gate::toffoli(c[0], c[1], a[0]);
    const Gate top = Gate::toffoli(c[k - 1], a[k - 3], target);
    for (int round = 0; round < 2; ++round) {
      out.push_back(top);
      out.insert(out.end(), down.begin(), down.end());
      out.push_back(base);
      out.insert(out.end(), down.rbegin(), down.rend());
    }
    return;
  }
  if (spare.empty()) {
    throw std::logic_error("multi-controlled gate needs a borrowed wire");
  }
  // One borrowed wire b: split the controls into halves C1 and C2 and apply
  // C1 -> b, C2 + b -> t twice each.
  const int b = spare.front();
  const std::size_t k1 = (k + 1) / 2;
  std::vector<int> c1(controls.begin(), controls.begin() + k1);
  std::vector<int> c2(controls.begin() + k1, controls.end());
  std::vector<int> all = controls;
  all.push_back(target);
  all.insert(all.end(), spare.begin(), spare.end());
  auto others = [&](const std::vector<int>& used, int t) {
    std::vector<int> rest;
    for (int w : all) {
      if (w != t && std::find(used.begin(), used.end(), w) == used.end()) {
        rest.push_back(w);
      }
    }
    std::sort(rest.begin(), rest.end());
    return rest;
  };
  std::vector<int> c2b = c2;
  c2b.push_back(b);
  for (int round = 0; round < 2; ++round) {
    emit_mct(c1, b, others(c1, b), out);
    emit_mct(c2b, target, others(c2b, target), out);
  }
}

// The 24 T-constructible permutations on 3 wires with shortest circuits.
const std::map<std::vector<Index>, std::vector<Gate>>& width3_t_table() {
  static const auto table = [] {
    std::map<std::vector<Index>, std::vector<Gate>> t;
    const std::array<Gate, 3> gates = {Gate::toffoli(1, 2, 0),
                                       Gate::toffoli(0, 2, 1),
                                       Gate::toffoli(0, 1, 2)};
    Permutation id = Permutation::identity(3);
    std::vector<Index> start(id.images().begin(), id.images().end());
    t.emplace(start, std::vector<Gate>{});
    std::queue<std::vector<Index>> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      std::vector<Index> cur = frontier.front();
      frontier.pop();
      for (const Gate& g : gates) {
        std::vector<Index> next(cur.size());
        for (std::size_t x = 0; x < cur.size(); ++x) next[x] = g.apply(cur[x]);
        if (t.count(next)) continue;
        std::vector<Gate> circ = t.at(cur);
        circ.push_back(g);
        t.emplace(next, std::move(circ));
        frontier.push(std::move(next));
      }
    }
    return t;
  }();
  return table;
}

bool fixes_zero_and_basis(const Permutation& p) {
  if (p(0) != 0) return false;
  for (int i = 0; i < p.width(); ++i) {
    if (p(bit(i)) != bit(i)) return false;
  }
  return true;
}

// Five stage conjugator for one fixed labeling.
class Conjugator {
 public:
  Conjugator(std::array<Index, 4> v, int n)
      : v_(v), n_(n), m_(n - 1), top_(bit(n - 1)) {}

  std::vector<Gate> build() {
    const Index M = top_;
    // a -> M + 4
    {
      auto [p, q] = lowest_two(v_[0]);
      steer(0, M + 4, p, q, M + 4);
    }
    // b -> M + 1, fixing M + 4
    {
      const Index x = v_[1];
      int p = lowest(x & ~(bit(2) | M));
      int q = lowest(x & ~bit(p));
      steer(1, M + 1, p, q, M + 1);
    }
    // c -> M + 2, fixing M + 4 and M + 1
    {
      const Index x = v_[2];
      int p = lowest(x & ~(M + 4));
      int q = lowest(x & ~(M + 1));
      if (p == q) q = lowest(x & ~bit(p));
      steer(2, M + 2, p, q, M + 2);
    }
    // d -> M + 7, fixing M + 1, M + 2 and M + 4
    {
      const Index x = v_[3];
      const Index low = x & ~M;
      if (std::popcount(low) >= 2) {
        auto [p, q] = lowest_two(low);
        steer(3, M + 7, p, q, 3);
      } else {
        steer(3, M + 7, m_, lowest(low), 3);
      }
    }
    emit(Gate::inverter(4, M + 1));
    emit(Gate::inverter(4, M + 2));
    for (int j = 3; j < m_; ++j) emit(Gate::inverter(bit(j), M + 4));
    const Index full = (Index{1} << n_) - 1;
    if (v_[0] != full - 3 || v_[1] != full - 2 || v_[2] != full - 1 ||
        v_[3] != full) {
      throw std::logic_error("conjugator construction missed its targets");
    }
    return gates_;
  }

 private:
  static int lowest(Index x) {
    if (x == 0) throw std::logic_error("conjugator: no qualifying bit");
    return std::countr_zero(x);
  }

  static std::pair<int, int> lowest_two(Index x) {
    int p = lowest(x);
    int q = lowest(x & ~bit(p));
    return {p, q};
  }

  void emit(const Gate& g) {
    gates_.push_back(g);
    for (Index& x : v_) x = g.apply(x);
  }

  // Sets the missing bits of `goal` in v_[idx] under controls p, q, then
  // clears the surplus bits under the two-bit mask `clear`.
  void steer(int idx, Index goal, int p, int q, Index clear) {
    for (Index need = goal & ~v_[idx]; need != 0; need &= need - 1) {
      emit(Gate::inverter(bit(std::countr_zero(need)), bit(p) | bit(q)));
    }
    for (Index extra = v_[idx] & ~goal; extra != 0; extra &= extra - 1) {
      emit(Gate::inverter(bit(std::countr_zero(extra)), clear));
    }
  }

  std::array<Index, 4> v_;
  int n_;
  int m_;
  Index top_;
  std::vector<Gate> gates_;
};

void check_pair_indices(Index a, Index b, Index c, Index d, int n) {
  const std::array<Index, 4> v = {a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i) {
    if ((v[i] >> n) != 0) {
      throw InvalidInput("index " + std::to_string(v[i]) +
                         " out of range for " + std::to_string(n) + " wires");
    }
    if (is_zero_or_basis(v[i])) {
      throw NotTConstructible("index " + std::to_string(v[i]) +
                              " is 0 or a power of two");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (v[i] == v[j]) throw InvalidInput("pair indices are not distinct");
    }
  }
}

}  // namespace

Circuit StagedCircuit::flatten() const {
  Circuit out(width);
  for (const Stage& s : stages) out.append(s.circuit);
  return out;
}

const Stage* StagedCircuit::find(std::string_view label) const {
  for (const Stage& s : stages) {
    if (s.label == label) return &s;
  }
  return nullptr;
}

int StagedCircuit::count(char family) const {
  int total = 0;
  for (const Stage& s : stages) {
    if (!s.label.empty() && s.label[0] == family) {
      total += s.circuit.gate_count();
    }
  }
  return total;
}

bool StagedCircuit::pure() const {
  for (const Stage& s : stages) {
    if (s.label.empty()) return false;
    for (const Gate& g : s.circuit.gates) {
      if (g.family() != s.label[0]) return false;
    }
  }
  return true;
}

std::string format_staged(const StagedCircuit& s) {
  std::string out = "wires " + std::to_string(s.width) + '\n';
  if (!s.method.empty()) out += "# method " + s.method + '\n';
  for (const Stage& st : s.stages) {
    out += "# stage " + st.label + '\n';
    for (const Gate& g : st.circuit.gates) out += format_gate(g) + '\n';
  }
  return out;
}

StagedCircuit parse_staged(std::string_view text) {
  const Circuit all = parse_circuit(text);
  StagedCircuit out;
  out.width = all.width;
  std::istringstream in{std::string(text)};
  std::string line;
  std::string chunk;
  std::string label;
  bool open = false;
  auto close = [&] {
    if (open) {
      Circuit c = parse_circuit("wires " + std::to_string(out.width) + '\n' +
                                chunk);
      out.stages.push_back({label, std::move(c)});
    }
    chunk.clear();
  };
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string first, second, third;
    fields >> first >> second >> third;
    if (first == "#" && second == "stage") {
      close();
      if (third.empty()) throw InvalidInput("stage marker without a label");
      label = third;
      open = true;
    } else if (first == "#" && second == "method") {
      out.method = third;
    } else if (first == "wires" || first.empty() || first[0] == '#') {
      continue;
    } else {
      if (!open) throw InvalidInput("gate before the first stage marker");
      chunk += line + '\n';
    }
  }
  close();
  return out;
}

Circuit synth_n(const Permutation& p) {
  const Index i = p(0);
  for (Index x = 0; x < p.size(); ++x) {
    if (p(x) != (x ^ i)) {
      throw NotNConstructible("permutation is not x -> x XOR " +
                              std::to_string(i));
    }
  }
  Circuit out(p.width());
  for (Index rest = i; rest != 0; rest &= rest - 1) {
    out.gates.push_back(Gate::not_gate(std::countr_zero(rest)));
  }
  return out;
}

Circuit expand_kappa0(int n) {
  if (n < 4 || n > kMaxWidth) {
    throw InvalidInput("expand_kappa0: width " + std::to_string(n) +
                       " outside 4.." + std::to_string(kMaxWidth));
  }
  std::vector<int> controls;
  for (int w = 2; w < n; ++w) controls.push_back(w);
  Circuit out(n);
  emit_mct(controls, 0, {1}, out.gates);
  return out;
}

Circuit synth_conjugator(Index a, Index b, Index c, Index d, int n) {
  if (n <= 3 || n > kMaxWidth) {
    throw InvalidInput("synth_conjugator: width must be 4.." +
                       std::to_string(kMaxWidth));
  }
  check_pair_indices(a, b, c, d, n);
  const Index full = (Index{1} << n) - 1;
  auto as_set = [](Index x, Index y) {
    return std::pair<Index, Index>(std::min(x, y), std::max(x, y));
  };
  const auto lo = as_set(full - 3, full - 2), hi = as_set(full - 1, full);
  const auto ab = as_set(a, b), cd = as_set(c, d);
  if ((ab == lo && cd == hi) || (ab == hi && cd == lo)) return Circuit(n);

  const std::array<std::array<Index, 4>, 8> labelings = {{
      {a, b, c, d}, {b, a, c, d}, {a, b, d, c}, {b, a, d, c},
      {c, d, a, b}, {d, c, a, b}, {c, d, b, a}, {d, c, b, a},
  }};
  std::vector<Gate> best;
  bool have = false;
  for (const auto& v : labelings) {
    std::vector<Gate> g = Conjugator(v, n).build();
    if (!have || g.size() < best.size()) {
      best = std::move(g);
      have = true;
    }
  }
  return Circuit(n, std::move(best));
}

Circuit synth_pair(const TranspositionPair& tp, int n) {
  if (n < 3 || n > kMaxWidth) {
    throw InvalidInput("synth_pair: width must be 3.." +
                       std::to_string(kMaxWidth));
  }
  check_pair_indices(tp.a, tp.b, tp.c, tp.d, n);
  if (n == 3) {
    Permutation p = tp.to_permutation(3);
    const auto& table = width3_t_table();
    std::vector<Index> key(p.images().begin(), p.images().end());
    return Circuit(3, table.at(key));
  }
  Circuit conj = synth_conjugator(tp.a, tp.b, tp.c, tp.d, n);
  Circuit out = conj;
  out.append(expand_kappa0(n));
  out.append(conj.inverse());
  return out;
}

Circuit synth_t(const Permutation& p) {
  const int n = p.width();
  if (!fixes_zero_and_basis(p)) {
    throw NotTConstructible(
        "a T circuit must fix 0 and every power of two");
  }
  if (n <= 2) return Circuit(n);
  if (n == 3) {
    std::vector<Index> key(p.images().begin(), p.images().end());
    return Circuit(3, width3_t_table().at(key));
  }
  if (parity(p) == Parity::Odd) {
    throw NotTConstructible("a T circuit on more than 3 wires is even");
  }
  Circuit out(n);
  for (const TranspositionPair& tp : decompose_pairs(p)) {
    out.append(synth_pair(tp, n));
  }
  return cancel_adjacent(out);
}

StagedCircuit synth_tct(const Permutation& p) {
  const int n = p.width();
  if (p(0) != 0) throw NotConstructible("T|C|T requires p(0) = 0");
  if (n > 3 && parity(p) == Parity::Odd) {
    throw NotConstructible("T|C|T requires an even permutation beyond 3 wires");
  }
  StagedCircuit out;
  out.width = n;
  if (n <= 2) {
    // Every zero-fixing permutation on at most 2 wires is linear.
    out.method = "linear";
    out.stages = {{"T1", Circuit(n)},
                  {"C", synth_linear(matrix_of_perm(p))},
                  {"T2", Circuit(n)}};
    return out;
  }

  std::vector<Index> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = p(bit(i));

  Permutation pi_t = Permutation::identity(n);
  if (gf2_rank(images) < n) {
    std::vector<int> J, I;
    Index used = 0;
    for (int i = 0; i < n; ++i) {
      if (std::popcount(images[i]) >= 2) J.push_back(i);
      else used |= images[i];
    }
    for (int i = 0; i < n; ++i) {
      if (!(used & bit(i))) I.push_back(i);
    }
    const std::size_t k = J.size();
    if (I.size() != k || k == 0) {
      throw std::logic_error("synth_tct: inconsistent basis images");
    }
    // New images y for the columns in J: independent once projected onto
    // the coordinates I, each with at least two ones.
    std::vector<Index> y(k, 0);
    if (k == 1) {
      y[0] = bit(I[0]) | bit(std::countr_zero(used));
    } else if (k == 2) {
      y[0] = bit(I[0]) | bit(I[1]);
      y[1] = bit(I[0]) | bit(std::countr_zero(used));
    } else {
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < k; ++r) {
          bool one = r == c || r == 0 || c == 0;
          if (r == 0 && c == 0) one = (k % 2) == 1;
          if (one) y[c] |= bit(I[r]);
        }
      }
    }

    auto build_sigma = [&](const std::vector<Index>& targets) {
      std::vector<Index> img(std::size_t{1} << n);
      for (Index x = 0; x < img.size(); ++x) img[x] = x;
      std::vector<bool> is_src(img.size()), is_dst(img.size());
      for (std::size_t j = 0; j < k; ++j) {
        img[images[J[j]]] = targets[j];
        is_src[images[J[j]]] = true;
        is_dst[targets[j]] = true;
      }
      // Targets not also sources lose their fixed point; send them to the
      // sources not also targets, in ascending order.
      std::vector<Index> from, to;
      for (Index x = 0; x < img.size(); ++x) {
        if (is_dst[x] && !is_src[x]) from.push_back(x);
        if (is_src[x] && !is_dst[x]) to.push_back(x);
      }
      for (std::size_t i = 0; i < from.size(); ++i) img[from[i]] = to[i];
      return Permutation::from_images(std::move(img));
    };

    pi_t = build_sigma(y);
    if (n > 3 && parity(pi_t) == Parity::Odd) {
      if (k >= 2) {
        std::swap(y[0], y[1]);
        pi_t = build_sigma(y);
      } else {
        // Append a transposition of two untouched non-basis indices.
        std::vector<Index> img(pi_t.images().begin(), pi_t.images().end());
        std::vector<Index> free;
        for (Index x = 0; x < img.size() && free.size() < 2; ++x) {
          if (!is_zero_or_basis(x) && img[x] == x && x != images[J[0]] &&
              x != y[0]) {
            free.push_back(x);
          }
        }
        if (free.size() < 2) {
          throw std::logic_error("synth_tct: no room for a parity fix");
        }
        std::swap(img[free[0]], img[free[1]]);
        pi_t = Permutation::from_images(std::move(img));
      }
    }
  }

  // q = p then pi_t has independent basis images; its linear part is lambda.
  const Permutation q = compose(p, pi_t);
  std::vector<Index> columns(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) columns[i] = q(bit(i));
  const BitMatrix lambda = BitMatrix::from_columns(columns);
  if (!lambda.invertible()) {
    throw std::logic_error("synth_tct: patched basis images are dependent");
  }
  const Permutation tau = compose(q, invert(perm_of_matrix(lambda)));

  out.method = "construction";
  out.stages = {{"T1", synth_t(tau)},
                {"C", synth_linear(lambda)},
                {"T2", synth_t(pi_t).inverse()}};
  return out;
}

StagedCircuit synth_tctn(const Permutation& p) {
  const int n = p.width();
  if (n > 3 && parity(p) == Parity::Odd) {
    throw OddPermutation(
        "odd permutation on more than 3 wires is not CNT-constructible; "
        "use one ancilla");
  }
  const Permutation flip = Permutation::xor_mask(n, p(0));
  StagedCircuit out = synth_tct(compose(p, flip));
  out.stages.push_back({"N", synth_n(flip)});
  return out;
}

Permutation lift_with_ancilla(const Permutation& p) {
  const int n = p.width();
  if (n + 1 > kMaxWidth) {
    throw InvalidInput("ancilla lift exceeds " + std::to_string(kMaxWidth) +
                       " wires");
  }
  std::vector<Index> img(std::size_t{2} << n);
  const Index high = Index{1} << n;
  for (Index x = 0; x < high; ++x) {
    img[x] = p(x);
    img[x | high] = p(x) | high;
  }
  return Permutation::from_images(std::move(img));
}

StagedCircuit synth_with_ancilla(const Permutation& p) {
  return synth_tctn(lift_with_ancilla(p));
}

}  // namespace revsynth
