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

#include "revsynth/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

void check_width(int width) {
  if (width < 1 || width > kMaxWidth) {
    throw InvalidInput("width " + std::to_string(width) +
                       " outside supported range 1.." +
                       std::to_string(kMaxWidth));
  }
}

int width_of_size(std::size_t size) {
  if (size < 2 || !std::has_single_bit(size)) {
    throw InvalidInput("truth table length " + std::to_string(size) +
                       " is not a power of two >= 2");
  }
  int width = std::countr_zero(size);
  check_width(width);
  return width;
}

bool fixes_zero_and_basis(const Permutation& p) {
  if (p(0) != 0) return false;
  for (int i = 0; i < p.width(); ++i) {
    Index e = Index{1} << i;
    if (p(e) != e) return false;
  }
  return true;
}

}  // namespace

Permutation Permutation::identity(int width) {
  check_width(width);
  std::vector<Index> images(std::size_t{1} << width);
  std::iota(images.begin(), images.end(), Index{0});
  return Permutation(width, std::move(images));
}

Permutation Permutation::from_images(std::vector<Index> images) {
  int width = width_of_size(images.size());
  std::vector<bool> seen(images.size(), false);
  for (Index v : images) {
    if (v >= images.size()) {
      throw InvalidInput("image " + std::to_string(v) + " out of range");
    }
    if (seen[v]) {
      throw InvalidInput("image " + std::to_string(v) +
                         " appears twice; not a bijection");
    }
    seen[v] = true;
  }
  return Permutation(width, std::move(images));
}

Permutation Permutation::xor_mask(int width, Index mask) {
  check_width(width);
  std::vector<Index> images(std::size_t{1} << width);
  if (mask >= images.size()) throw InvalidInput("xor mask exceeds width");
  for (Index x = 0; x < images.size(); ++x) images[x] = x ^ mask;
  return Permutation(width, std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (Index x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation perm_from_cycles(const CycleNotation& cycles, int width) {
  Permutation id = Permutation::identity(width);
  std::vector<Index> images(id.images().begin(), id.images().end());
  std::vector<bool> used(images.size(), false);
  for (const Cycle& cycle : cycles) {
    for (Index x : cycle) {
      if (x >= images.size()) {
        throw InvalidInput("index " + std::to_string(x) +
                           " out of range for width " + std::to_string(width));
      }
      if (used[x]) {
        throw InvalidInput("index " + std::to_string(x) +
                           " repeated across cycles");
      }
      used[x] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation::from_images(std::move(images));
}

CycleNotation cycles_of(const Permutation& p) {
  CycleNotation out;
  std::vector<bool> visited(p.size(), false);
  for (Index start = 0; start < p.size(); ++start) {
    if (visited[start] || p(start) == start) continue;
    Cycle cycle;
    for (Index x = start; !visited[x]; x = p(x)) {
      visited[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  if (first.width() != second.width()) {
    throw InvalidInput("compose: width mismatch (" +
                       std::to_string(first.width()) + " vs " +
                       std::to_string(second.width()) + ")");
  }
  std::vector<Index> images(first.size());
  for (Index x = 0; x < images.size(); ++x) images[x] = second(first(x));
  return Permutation::from_images(std::move(images));
}

Permutation invert(const Permutation& p) {
  std::vector<Index> images(p.size());
  for (Index x = 0; x < images.size(); ++x) images[p(x)] = x;
  return Permutation::from_images(std::move(images));
}

Parity parity(const Permutation& p) {
  std::size_t transpositions = 0;
  for (const Cycle& c : cycles_of(p)) transpositions += c.size() - 1;
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::size_t moved_count(const Permutation& p) {
  std::size_t moved = 0;
  for (Index x = 0; x < p.size(); ++x) moved += p(x) != x;
  return moved;
}

Permutation TranspositionPair::to_permutation(int width) const {
  return perm_from_cycles({{a, b}, {c, d}}, width);
}

Permutation product_of_pairs(std::span<const TranspositionPair> pairs,
                             int width) {
  std::vector<Index> images(std::size_t{1} << width);
  std::iota(images.begin(), images.end(), Index{0});
  // images[x] tracks where x has been sent so far.
  for (const TranspositionPair& tp : pairs) {
    for (Index& v : images) {
      if (v == tp.a) v = tp.b;
      else if (v == tp.b) v = tp.a;
      else if (v == tp.c) v = tp.d;
      else if (v == tp.d) v = tp.c;
    }
  }
  return Permutation::from_images(std::move(images));
}

std::vector<TranspositionPair> decompose_pairs(const Permutation& p) {
  if (parity(p) == Parity::Odd) {
    throw Unsynthesizable("decompose_pairs: permutation is odd");
  }
  if (p.is_identity()) return {};
  if (p.size() <= 4) {
    throw InvalidInput(
        "decompose_pairs: width too small to supply spare indices");
  }

  std::vector<TranspositionPair> pairs;
  std::vector<std::pair<Index, Index>> transpositions;
  std::vector<Cycle> three_cycles;

  // (x0 ... xk) = (x0,x1)(x{k-1},xk) followed by (x0,x2,...,x{k-1}).
  for (Cycle cycle : cycles_of(p)) {
    while (cycle.size() >= 4) {
      std::size_t k = cycle.size() - 1;
      pairs.push_back({cycle[0], cycle[1], cycle[k - 1], cycle[k]});
      Cycle rest;
      rest.reserve(k - 1);
      rest.push_back(cycle[0]);
      rest.insert(rest.end(), cycle.begin() + 2, cycle.begin() + k);
      cycle = std::move(rest);
    }
    if (cycle.size() == 3) three_cycles.push_back(cycle);
    else transpositions.emplace_back(cycle[0], cycle[1]);
  }

  // Odd parity was excluded, so the leftover transpositions pair up.
  for (std::size_t i = 0; i + 1 < transpositions.size(); i += 2) {
    pairs.push_back({transpositions[i].first, transpositions[i].second,
                     transpositions[i + 1].first,
                     transpositions[i + 1].second});
  }

  // (a,b,c)(d,e,f) = [(a,b)(d,e)][(a,c)(d,f)]
  std::size_t t = 0;
  for (; t + 1 < three_cycles.size(); t += 2) {
    const Cycle& x = three_cycles[t];
    const Cycle& y = three_cycles[t + 1];
    pairs.push_back({x[0], x[1], y[0], y[1]});
    pairs.push_back({x[0], x[2], y[0], y[2]});
  }

  if (t < three_cycles.size()) {
    // (x,y,z) = [(x,y)(v,w)][(v,w)(x,z)] with two spare indices v, w.
    const Cycle& c = three_cycles[t];
    bool avoid_special = fixes_zero_and_basis(p);
    auto in_cycle = [&](Index v) {
      return v == c[0] || v == c[1] || v == c[2];
    };
    std::vector<Index> spares;
    auto collect = [&](auto&& accept) {
      for (Index v = 0; v < p.size() && spares.size() < 2; ++v) {
        if (in_cycle(v) || std::find(spares.begin(), spares.end(), v) !=
                               spares.end()) {
          continue;
        }
        if (accept(v)) spares.push_back(v);
      }
    };
    collect([&](Index v) { return !is_zero_or_basis(v) && p(v) == v; });
    collect([&](Index v) { return !is_zero_or_basis(v); });
    // On 3 wires only 3, 5, 6, 7 avoid 0 and the powers of two, so a lone
    // 3-cycle among them must borrow a special index.
    if (!avoid_special || p.width() <= 3) collect([](Index) { return true; });
    if (spares.size() < 2) {
      throw InvalidInput(
          "decompose_pairs: no two spare indices available for a 3-cycle");
    }
    pairs.push_back({c[0], c[1], spares[0], spares[1]});
    pairs.push_back({spares[0], spares[1], c[0], c[2]});
  }
  return pairs;
}

CycleNotation parse_cycles(std::string_view text) {
  CycleNotation cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](const std::string& why) -> void {
    throw InvalidInput("cycle notation: " + why + " at offset " +
                       std::to_string(i) + " in \"" + std::string(text) +
                       "\"");
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    Cycle cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" denotes the identity
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      Index value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) fail("expected decimal index");
      i = static_cast<std::size_t>(ptr - text.data());
      cycle.push_back(value);
      skip_ws();
      if (i >= text.size()) fail("unterminated cycle");
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    if (cycle.size() < 2) fail("cycle shorter than 2");
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return cycles;
}

std::string format_cycles(const CycleNotation& cycles) {
  if (cycles.empty()) return "()";
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation parse_truth_table(std::string_view text) {
  std::vector<Index> images;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    Index value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw InvalidInput("truth table: bad entry \"" + token + "\"");
    }
    images.push_back(value);
  }
  return Permutation::from_images(std::move(images));
}

std::string format_truth_table(const Permutation& p) {
  std::string out;
  for (Index x = 0; x < p.size(); ++x) {
    if (x) out += ' ';
    out += std::to_string(p(x));
  }
  return out;
}

Permutation random_permutation(int width, std::mt19937_64& rng) {
  Permutation id = Permutation::identity(width);
  std::vector<Index> images(id.images().begin(), id.images().end());
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(std::move(images));
}

Permutation random_even_permutation(int width, std::mt19937_64& rng) {
  Permutation p = random_permutation(width, rng);
  if (parity(p) == Parity::Even) return p;
  std::vector<Index> images(p.images().begin(), p.images().end());
  std::swap(images[0], images[1]);
  return Permutation::from_images(std::move(images));
}

}  // namespace revsynth
