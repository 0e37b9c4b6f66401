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


#include "revsynth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

#include "revsynth/parallel.hpp"
#include "revsynth/rewrite.hpp"

namespace revsynth {

namespace {

void check_arity(int arity, int extra) {
  if (arity < 0 || arity + extra > kMaxWidth) {
    throw InvalidInput("function arity " + std::to_string(arity) +
                       " out of range");
  }
}

std::vector<int> vars_of(Index mask) {
  std::vector<int> v;
  for (; mask != 0; mask &= mask - 1) v.push_back(std::countr_zero(mask));
  return v;
}

bool monomial_less(Index a, Index b) {
  const int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da < db;
  return vars_of(a) < vars_of(b);
}

// Flips wire t by the product of the variables vars[0..l), using wire o as
// restored workspace.
void emit_term(const std::vector<int>& vars, std::size_t l, int t, int o,
               std::vector<Gate>& out) {
  if (l == 1) {
    out.push_back(Gate::cnot(vars[0], t));
    return;
  }
  const Gate outer = Gate::toffoli(vars[l - 1], o, t);
  out.push_back(outer);
  emit_term(vars, l - 1, o, t, out);
  out.push_back(outer);
  emit_term(vars, l - 1, o, t, out);
}

std::vector<std::size_t> histogram_of(const std::vector<int>& costs) {
  std::vector<std::size_t> h;
  for (int c : costs) {
    if (h.size() <= static_cast<std::size_t>(c)) h.resize(c + 1);
    ++h[c];
  }
  return h;
}

template <typename Cost>
Census census_of(std::size_t n, int jobs, Cost cost) {
  std::vector<int> costs(n, -1);
  parallel_for(n, jobs, [&](std::size_t i) {
    try {
      costs[i] = cost(i);
    } catch (const ResourceLimit&) {
      // Left at -1 and counted as unfinished.
    }
  });
  Census c;
  std::vector<int> done;
  for (int v : costs) {
    if (v < 0) ++c.unfinished;
    else done.push_back(v);
  }
  c.histogram = histogram_of(done);
  return c;
}

}  // namespace

BoolFunc::BoolFunc(int arity, std::vector<bool> table)
    : arity_(arity), table_(std::move(table)) {
  check_arity(arity, 1);
  if (table_.size() != (std::size_t{1} << arity)) {
    throw InvalidInput("truth table length " + std::to_string(table_.size()) +
                       " does not match arity " + std::to_string(arity));
  }
}

BoolFunc BoolFunc::zero(int arity) {
  check_arity(arity, 1);
  return BoolFunc(arity, std::vector<bool>(std::size_t{1} << arity));
}

BoolFunc BoolFunc::from_bits(int arity, std::uint64_t value) {
  if (arity < 0 || arity > 6) throw InvalidInput("from_bits needs arity <= 6");
  std::vector<bool> t(std::size_t{1} << arity);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = (value >> x) & 1u;
  if (t.size() < 64 && (value >> t.size()) != 0) {
    throw InvalidInput("truth table value too wide for arity");
  }
  return BoolFunc(arity, std::move(t));
}

std::size_t BoolFunc::weight() const {
  return static_cast<std::size_t>(std::count(table_.begin(), table_.end(), true));
}

BoolFunc parse_boolfunc(std::string_view text, int arity) {
  check_arity(arity, 1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  std::vector<bool> t(std::size_t{1} << arity);
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::string_view digits = text.substr(2);
    if (digits.empty()) throw InvalidInput("empty hex truth table");
    std::size_t bit = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it, bit += 4) {
      const int c = std::tolower(static_cast<unsigned char>(*it));
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else throw InvalidInput("bad hex digit in \"" + std::string(text) + "\"");
      for (int j = 0; j < 4; ++j) {
        if (!((v >> j) & 1)) continue;
        if (bit + j >= t.size()) {
          throw InvalidInput("truth table \"" + std::string(text) +
                             "\" exceeds arity " + std::to_string(arity));
        }
        t[bit + j] = true;
      }
    }
    return BoolFunc(arity, std::move(t));
  }
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
    std::string body(text.substr(1, text.size() - 2));
    if (body.find_first_not_of(' ') == std::string::npos) {
      return BoolFunc(arity, std::move(t));
    }
    std::size_t pos = 0;
    while (true) {
      std::size_t end = std::min(body.find(',', pos), body.size());
      std::string_view item(body.data() + pos, end - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      unsigned long v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw InvalidInput("bad minterm \"" + std::string(item) + "\"");
      }
      if (v >= t.size()) {
        throw InvalidInput("minterm " + std::to_string(v) + " exceeds arity " +
                           std::to_string(arity));
      }
      if (t[v]) throw InvalidInput("duplicate minterm " + std::to_string(v));
      t[v] = true;
      if (end == body.size()) break;
      pos = end + 1;
    }
    return BoolFunc(arity, std::move(t));
  }
  throw InvalidInput("predicate must be hex (0x96) or a minterm list ({1,2})");
}

std::string format_boolfunc(const BoolFunc& f) {
  const std::size_t digits = std::max<std::size_t>(1, f.size() / 4);
  std::string out(digits, '0');
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int j = 0; j < 4; ++j) {
      const std::size_t x = 4 * d + j;
      if (x < f.size() && f(static_cast<Index>(x))) v |= 1 << j;
    }
    out[digits - 1 - d] = "0123456789abcdef"[v];
  }
  return "0x" + out;
}

Permutation oracle_perm(const BoolFunc& f) {
  const int k = f.arity();
  std::vector<Index> images(std::size_t{2} << k);
  for (Index x = 0; x < images.size(); ++x) {
    const Index in = x & ((Index{1} << k) - 1);
    images[x] = f(in) ? x ^ (Index{1} << k) : x;
  }
  return Permutation::from_images(std::move(images));
}

bool oracle_needs_ancilla(const BoolFunc& f) { return f.weight() % 2 == 1; }

bool Pprm::evaluate(Index x) const {
  bool v = false;
  for (Index m : monomials) v ^= (x & m) == m;
  return v;
}

int Pprm::degree() const {
  int d = 0;
  for (Index m : monomials) d = std::max(d, std::popcount(m));
  return d;
}

Pprm pprm(const BoolFunc& f) {
  std::vector<std::uint8_t> a(f.size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = f(static_cast<Index>(x));
  for (int i = 0; i < f.arity(); ++i) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x & (std::size_t{1} << i)) a[x] ^= a[x ^ (std::size_t{1} << i)];
    }
  }
  Pprm p;
  p.arity = f.arity();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x]) p.monomials.push_back(static_cast<Index>(x));
  }
  std::sort(p.monomials.begin(), p.monomials.end(), monomial_less);
  return p;
}

std::string format_pprm(const Pprm& p) {
  if (p.monomials.empty()) return "0";
  std::string out;
  for (Index m : p.monomials) {
    if (!out.empty()) out += " ^ ";
    if (m == 0) {
      out += '1';
      continue;
    }
    bool first = true;
    for (int v : vars_of(m)) {
      if (!first) out += '.';
      out += 'x' + std::to_string(v);
      first = false;
    }
  }
  return out;
}

RomCircuit rom2_synth_xor(const BoolFunc& f) {
  const int k = f.arity();
  check_arity(k, 2);
  const int b = k, a = k + 1;
  std::vector<Gate> gates;
  for (Index m : pprm(f).monomials) {
    if (m == 0) {
      gates.push_back(Gate::not_gate(b));
    } else {
      emit_term(vars_of(m), static_cast<std::size_t>(std::popcount(m)), b, a,
                gates);
    }
  }
  RomCircuit rc;
  rc.rom_wires = k;
  rc.writable_wires = 2;
  rc.circuit = cancel_adjacent(Circuit(k + 2, std::move(gates)));
  return rc;
}

std::optional<RomCircuit> rom1_synth(const BoolFunc& f) {
  const int k = f.arity();
  const int out = k;
  // Gates present so far, by control mask; probing weight 0, 1, 2 inputs.
  std::vector<Index> present;
  auto flips = [&](Index x) {
    bool v = false;
    for (Index m : present) v ^= (x & m) == m;
    return v;
  };
  for (int w = 0; w <= std::min(k, 2); ++w) {
    for (Index x = 0; x < f.size(); ++x) {
      if (std::popcount(x) == w && f(x) != flips(x)) present.push_back(x);
    }
  }
  for (Index x = 0; x < f.size(); ++x) {
    if (f(x) != flips(x)) return std::nullopt;
  }
  std::sort(present.begin(), present.end(), monomial_less);
  RomCircuit rc;
  rc.rom_wires = k;
  rc.writable_wires = 1;
  rc.circuit = Circuit(k + 1);
  for (Index m : present) {
    rc.circuit.gates.push_back(Gate::inverter(Index{1} << out, m));
  }
  return rc;
}

bool check_rom_circuit(const RomCircuit& rc, const BoolFunc& f) {
  if (rc.rom_wires != f.arity() || rc.circuit.width != rc.rom_wires + rc.writable_wires) {
    return false;
  }
  for (const Gate& g : rc.circuit.gates) {
    if (g.written() & rc.rom_mask()) return false;
  }
  const Permutation want =
      rc.writable_wires == 1 ? oracle_perm(f) : rom2_perm(f);
  return circuit_permutation(rc.circuit) == want;
}

GateSet rom_gate_set(int rom_wires, bool one_rom_control) {
  check_arity(rom_wires, 2);
  return GateSet(GateLibrary::parse("CNT"), rom_wires + 2,
                 (Index{1} << rom_wires) - 1, one_rom_control ? 1 : -1);
}

Permutation rom2_perm(const BoolFunc& f) {
  const int k = f.arity();
  check_arity(k, 2);
  std::vector<Index> images(std::size_t{4} << k);
  for (Index x = 0; x < images.size(); ++x) {
    const Index in = x & ((Index{1} << k) - 1);
    images[x] = f(in) ? x ^ (Index{1} << k) : x;
  }
  return Permutation::from_images(std::move(images));
}

std::vector<BoolFunc> all_functions(int arity) {
  if (arity < 0 || arity > 4) throw InvalidInput("all_functions needs arity <= 4");
  std::vector<BoolFunc> out;
  const std::uint64_t count = std::uint64_t{1} << (std::size_t{1} << arity);
  for (std::uint64_t v = 0; v < count; ++v) out.push_back(BoolFunc::from_bits(arity, v));
  return out;
}

Census table2_census(const CircuitLibrary& lib, const SearchOptions& options,
                     int jobs) {
  if (lib.width() != 4) throw InvalidInput("the 3+1 census needs a 4-wire library");
  std::vector<BoolFunc> fs;
  for (BoolFunc& f : all_functions(3)) {
    if (!oracle_needs_ancilla(f)) fs.push_back(std::move(f));
  }
  return census_of(fs.size(), jobs, [&](std::size_t i) {
    return find_optimal(oracle_perm(fs[i]), lib, options).cost;
  });
}

std::vector<std::size_t> table3_xor() {
  std::vector<int> costs;
  for (const BoolFunc& f : all_functions(3)) {
    costs.push_back(static_cast<int>(rom2_synth_xor(f).circuit.size()));
  }
  return histogram_of(costs);
}

Census rom_optimal_census(const CircuitLibrary& lib,
                          const SearchOptions& options, int jobs) {
  const int k = lib.width() - 2;
  if (k < 1 || lib.gate_set().rom_mask != (Index{1} << k) - 1) {
    throw InvalidInput("library is not a 2-bit ROM gate set");
  }
  std::vector<BoolFunc> fs = all_functions(k);
  return census_of(fs.size(), jobs, [&](std::size_t i) {
    return find_optimal(rom2_perm(fs[i]), lib, options).cost;
  });
}

}  // namespace revsynth
