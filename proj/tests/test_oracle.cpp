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


#include <doctest.h>

#include <bit>
#include <deque>
#include <map>
#include <random>
#include <set>

#include "revsynth/oracle.hpp"

using namespace revsynth;

namespace {

BoolFunc from_lambda(int k, auto f) {
  std::vector<bool> t(std::size_t{1} << k);
  for (Index x = 0; x < t.size(); ++x) t[x] = f(x);
  return BoolFunc(k, std::move(t));
}

bool bit(Index x, int i) { return (x >> i) & 1u; }

}  // namespace

TEST_CASE("predicate parsing") {
  BoolFunc hex = parse_boolfunc("0x96", 3);
  BoolFunc mint = parse_boolfunc("{1,2,4,7}", 3);
  CHECK(hex == mint);
  CHECK(hex.weight() == 4);
  CHECK(format_boolfunc(hex) == "0x96");
  CHECK(parse_boolfunc("{ }", 2) == BoolFunc::zero(2));
  CHECK(parse_boolfunc("{}", 2) == BoolFunc::zero(2));
  CHECK(parse_boolfunc("0x1", 1) == BoolFunc::from_bits(1, 1));
  CHECK(format_boolfunc(BoolFunc::from_bits(1, 2)) == "0x2");
  CHECK(parse_boolfunc("0xDEADBEEF", 5) == BoolFunc::from_bits(5, 0xdeadbeef));
  CHECK_THROWS_AS(parse_boolfunc("0x196", 3), InvalidInput);
  CHECK_THROWS_AS(parse_boolfunc("{8}", 3), InvalidInput);
  CHECK_THROWS_AS(parse_boolfunc("{1,1}", 3), InvalidInput);
  CHECK_THROWS_AS(parse_boolfunc("{1,}", 3), InvalidInput);
  CHECK_THROWS_AS(parse_boolfunc("0xg", 3), InvalidInput);
  CHECK_THROWS_AS(parse_boolfunc("150", 3), InvalidInput);
  CHECK_THROWS_AS(BoolFunc(3, std::vector<bool>(4)), InvalidInput);
  for (const BoolFunc& f : all_functions(3)) {
    CHECK(parse_boolfunc(format_boolfunc(f), 3) == f);
  }
}

TEST_CASE("oracle permutations") {
  CHECK(oracle_perm(BoolFunc::zero(3)).is_identity());
  CHECK(oracle_perm(from_lambda(3, [](Index) { return true; })) ==
        Gate::not_gate(3).permutation(4));
  // x1 x2 on three inputs: brute force over all 16 indices.
  Permutation p = oracle_perm(from_lambda(3, [](Index x) { return bit(x, 1) && bit(x, 2); }));
  for (Index v = 0; v < 16; ++v) {
    const Index y = bit(v, 1) && bit(v, 2) ? v ^ 8u : v;
    CHECK(p(v) == y);
  }
  CHECK(p == Gate::toffoli(1, 2, 3).permutation(4));
  int even = 0;
  for (const BoolFunc& f : all_functions(3)) {
    const bool odd = parity(oracle_perm(f)) == Parity::Odd;
    CHECK(oracle_needs_ancilla(f) == odd);
    CHECK(odd == (f.weight() % 2 == 1));
    if (!odd) ++even;
  }
  CHECK(even == 128);
  CHECK(oracle_needs_ancilla(parse_boolfunc("{0}", 3)));
}

TEST_CASE("PPRM") {
  CHECK(pprm(BoolFunc::zero(3)).monomials.empty());
  auto f = from_lambda(3, [](Index x) { return bit(x, 0) ^ (bit(x, 1) && bit(x, 2)); });
  CHECK(pprm(f).monomials == std::vector<Index>{0b001, 0b110});
  CHECK(format_pprm(pprm(f)) == "x0 ^ x1.x2");
  auto g = from_lambda(1, [](Index x) { return !bit(x, 0); });
  CHECK(pprm(g).monomials == std::vector<Index>{0, 1});
  // Degree, then variable list order.
  auto all = BoolFunc::from_bits(3, 0x80 ^ 0xff);
  Pprm q = pprm(all);
  for (std::size_t i = 1; i < q.monomials.size(); ++i) {
    CHECK(std::popcount(q.monomials[i - 1]) <= std::popcount(q.monomials[i]));
  }
  std::mt19937_64 rng(2);
  for (int k = 0; k <= 6; ++k) {
    for (int trial = 0; trial < 50; ++trial) {
      BoolFunc h = BoolFunc::from_bits(k, rng() & (k == 6 ? ~0ull : (1ull << (1 << k)) - 1));
      Pprm r = pprm(h);
      for (Index x = 0; x < h.size(); ++x) CHECK(r.evaluate(x) == h(x));
    }
  }
}

TEST_CASE("two-bit ROM synthesis") {
  for (const BoolFunc& f : all_functions(3)) {
    RomCircuit rc = rom2_synth_xor(f);
    CHECK(check_rom_circuit(rc, f));
  }
  // Single-term counts 3 * 2^(d-1) - 2.
  for (Index m = 1; m < 16; ++m) {
    BoolFunc f = from_lambda(4, [m](Index x) { return (x & m) == m; });
    const int d = std::popcount(m);
    RomCircuit rc = rom2_synth_xor(f);
    CHECK(rc.circuit.size() == static_cast<std::size_t>(3 * (1 << (d - 1)) - 2));
    CHECK(check_rom_circuit(rc, f));
  }
  CHECK(rom2_synth_xor(from_lambda(3, [](Index x) { return x == 7; })).circuit.size() == 10);
  CHECK(rom2_synth_xor(from_lambda(3, [](Index x) { return bit(x, 0); })).circuit.size() == 1);
  CHECK(rom2_synth_xor(BoolFunc::zero(3)).circuit.empty());
  // Step-by-step: ROM wires never change, and wire a is restored.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    BoolFunc f = BoolFunc::from_bits(4, rng() & 0xffff);
    RomCircuit rc = rom2_synth_xor(f);
    for (Index v = 0; v < 64; ++v) {
      Index s = v;
      for (const Gate& g : rc.circuit.gates) {
        s = g.apply(s);
        CHECK((s & 15u) == (v & 15u));
      }
      CHECK(bit(s, 5) == bit(v, 5));
      CHECK(bit(s, 4) == (bit(v, 4) ^ f(v & 15u)));
    }
  }
}

TEST_CASE("three-input XOR construction sizes") {
  const std::vector<std::size_t> row{1,  4,  6,  4,  4,  12, 18, 12, 6,
                                     12, 19, 16, 10, 8,  10, 16, 19, 12,
                                     6,  12, 18, 12, 4,  4,  6,  4,  1};
  CHECK(table3_xor() == row);
}

TEST_CASE("one-bit ROM synthesis") {
  auto f = from_lambda(3, [](Index x) { return bit(x, 0) ^ (bit(x, 1) && bit(x, 2)); });
  auto rc = rom1_synth(f);
  REQUIRE(rc.has_value());
  CHECK(rc->circuit.gates == std::vector<Gate>{Gate::cnot(0, 3), Gate::toffoli(1, 2, 3)});
  CHECK(check_rom_circuit(*rc, f));
  CHECK_FALSE(rom1_synth(from_lambda(3, [](Index x) { return x == 7; })).has_value());
  auto zero = rom1_synth(BoolFunc::zero(3));
  REQUIRE(zero.has_value());
  CHECK(zero->circuit.empty());

  // The seven gates targeting wire 3 with controls on ROM wires, every subset.
  std::vector<Index> controls{0, 1, 2, 4, 3, 5, 6};
  std::set<std::vector<bool>> reachable;
  for (unsigned subset = 0; subset < 128; ++subset) {
    std::vector<bool> t(8);
    for (Index x = 0; x < 8; ++x) {
      bool v = false;
      for (int g = 0; g < 7; ++g) {
        if ((subset >> g) & 1u) v ^= (x & controls[g]) == controls[g];
      }
      t[x] = v;
    }
    reachable.insert(t);
  }
  for (const BoolFunc& h : all_functions(3)) {
    auto r = rom1_synth(h);
    CHECK(r.has_value() == (reachable.count(h.table()) == 1));
    CHECK(r.has_value() == (pprm(h).degree() <= 2));
    if (r) CHECK(check_rom_circuit(*r, h));
  }
}

TEST_CASE("ROM gate sets") {
  CHECK(rom_gate_set(3, false).gates().size() == 22);
  CHECK(rom_gate_set(3, true).gates().size() == 16);
  for (const Gate& g : rom_gate_set(3, false).gates()) CHECK((g.written() & 7u) == 0);
}

TEST_CASE("reduced ROM search matches a plain closure") {
  // Two ROM wires and two writable wires: the closure is small enough for
  // breadth-first search over image vectors.
  for (bool one : {false, true}) {
    GateSet set = rom_gate_set(2, one);
    std::vector<Permutation> gates;
    for (const Gate& g : set.gates()) gates.push_back(g.permutation(4));
    std::map<std::vector<Index>, int> dist;
    auto key = [](const Permutation& p) {
      return std::vector<Index>(p.images().begin(), p.images().end());
    };
    std::deque<Permutation> queue{Permutation::identity(4)};
    dist[key(queue.front())] = 0;
    while (!queue.empty()) {
      Permutation p = queue.front();
      queue.pop_front();
      const int d = dist[key(p)];
      for (const Permutation& g : gates) {
        Permutation q = compose(p, g);
        if (dist.emplace(key(q), d + 1).second) queue.push_back(q);
      }
    }
    CircuitLibrary lib = build_library(set, 2);
    for (const BoolFunc& f : all_functions(2)) {
      SearchResult r = find_optimal(rom2_perm(f), lib);
      CHECK(r.cost == dist.at(key(rom2_perm(f))));
      for (const Gate& g : r.circuit.gates) CHECK((g.written() & 3u) == 0);
    }
  }
}

TEST_CASE("oracle census, size-one entries") {
  CircuitLibrary lib = build_library(GateSet(GateLibrary::parse("CNT"), 4), 1);
  int ones = 0;
  for (const BoolFunc& f : all_functions(3)) {
    if (oracle_needs_ancilla(f)) continue;
    auto e = lib.lookup(oracle_perm(f));
    if (e && e->cost == 1) ++ones;
    if (e && e->cost == 0) CHECK(f == BoolFunc::zero(3));
  }
  CHECK(ones == 7);
}
