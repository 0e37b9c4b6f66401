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

#include <random>

#include "revsynth/constructive.hpp"
#include "revsynth/error.hpp"

using namespace revsynth;

namespace {

Permutation cyc(const char* text, int w) {
  return perm_from_cycles(parse_cycles(text), w);
}

bool only_family(const Circuit& c, char f) {
  for (const Gate& g : c.gates)
    if (g.family() != f) return false;
  return true;
}

// Random even permutation of the indices that are neither 0 nor a power of
// two, fixing everything else.
Permutation random_t_perm(int w, std::mt19937_64& rng) {
  std::vector<Index> movable;
  for (Index x = 0; x < (Index{1} << w); ++x)
    if (!is_zero_or_basis(x)) movable.push_back(x);
  std::vector<Index> shuffled = movable;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<Index> img(std::size_t{1} << w);
  for (Index x = 0; x < img.size(); ++x) img[x] = x;
  for (std::size_t i = 0; i < movable.size(); ++i) img[movable[i]] = shuffled[i];
  auto p = Permutation::from_images(img);
  if (w > 3 && parity(p) == Parity::Odd) {
    std::swap(img[movable[0]], img[movable[1]]);
    p = Permutation::from_images(img);
  }
  return p;
}

Permutation random_zero_fixing_even(int w, std::mt19937_64& rng) {
  auto p = random_even_permutation(w, rng);
  // Conjugating by nothing: compose with the XOR mask, then fix parity.
  auto q = compose(p, Permutation::xor_mask(w, p(0)));
  if (parity(q) == Parity::Odd) {
    std::vector<Index> img(q.images().begin(), q.images().end());
    std::swap(img[1], img[2]);
    q = Permutation::from_images(img);
  }
  return q;
}

long t_bound(int n, long s) { return 3 * (s + 1) * (3 * n - 7); }

long tctn_t_bound(int n) { return 3L * ((1L << n) + n + 1) * (3 * n - 7); }

}  // namespace

TEST_CASE("synth_n") {
  auto c = synth_n(Permutation::xor_mask(3, 5));
  CHECK(c == Circuit(3, {Gate::not_gate(0), Gate::not_gate(2)}));
  CHECK(synth_n(Permutation::identity(3)).empty());
  auto seven = synth_n(Permutation::xor_mask(3, 7));
  CHECK(seven.size() == 3);
  CHECK(circuit_permutation(seven) == Permutation::xor_mask(3, 7));
  CHECK_THROWS_AS(synth_n(cyc("(1,2)", 2)), NotNConstructible);
}

TEST_CASE("expand_kappa0") {
  auto four = expand_kappa0(4);
  CHECK(four == Circuit(4, {Gate::inverter(1, 12)}));
  for (int n = 4; n <= 12; ++n) {
    Circuit c = expand_kappa0(n);
    const Index top = Index{1} << n;
    Permutation kappa = perm_from_cycles(
        {{top - 4, top - 3}, {top - 2, top - 1}}, n);
    CHECK(circuit_permutation(c) == kappa);
    CHECK(only_family(c, 'T'));
    std::size_t expected = n == 4 ? 1 : n == 5 ? 4 : n == 6 ? 10 : 8 * (n - 5);
    CHECK(c.size() == expected);
  }
  CHECK(circuit_permutation(expand_kappa0(5)) == cyc("(28,29)(30,31)", 5));
  CHECK_THROWS_AS(expand_kappa0(3), InvalidInput);
}

TEST_CASE("synth_conjugator") {
  auto lands = [](const Circuit& c, Index a, Index b, Index cc, Index d,
                  int n) {
    const Index top = Index{1} << n;
    auto p = circuit_permutation(c);
    auto set = [](Index x, Index y) {
      return std::pair<Index, Index>(std::min(x, y), std::max(x, y));
    };
    auto ab = set(p(a), p(b));
    auto cd = set(p(cc), p(d));
    auto lo = set(top - 4, top - 3);
    auto hi = set(top - 2, top - 1);
    return (ab == lo && cd == hi) || (ab == hi && cd == lo);
  };
  CHECK(synth_conjugator(12, 13, 14, 15, 4).empty());
  auto c4 = synth_conjugator(3, 5, 6, 9, 4);
  CHECK(c4.size() <= 18);
  CHECK(lands(c4, 3, 5, 6, 9, 4));
  auto c5 = synth_conjugator(3, 5, 6, 7, 5);
  CHECK(c5.size() <= 23);
  CHECK(lands(c5, 3, 5, 6, 7, 5));
  CHECK_THROWS_AS(synth_conjugator(3, 4, 5, 6, 4), NotTConstructible);
  CHECK_THROWS_AS(synth_conjugator(3, 3, 5, 6, 4), InvalidInput);
  CHECK_THROWS_AS(synth_conjugator(3, 5, 6, 7, 3), InvalidInput);

  std::mt19937_64 rng(99);
  for (int n = 4; n <= 9; ++n) {
    std::vector<Index> pool;
    for (Index x = 0; x < (Index{1} << n); ++x)
      if (!is_zero_or_basis(x)) pool.push_back(x);
    for (int trial = 0; trial < 300; ++trial) {
      std::shuffle(pool.begin(), pool.end(), rng);
      auto c = synth_conjugator(pool[0], pool[1], pool[2], pool[3], n);
      CHECK(only_family(c, 'T'));
      CHECK(static_cast<int>(c.size()) <= 5 * n - 2);
      CHECK(lands(c, pool[0], pool[1], pool[2], pool[3], n));
    }
  }
}

TEST_CASE("synth_pair") {
  const Index n = 4;
  auto k = synth_pair({12, 13, 14, 15}, n);
  CHECK(k == expand_kappa0(4));
  auto c = synth_pair({3, 5, 6, 9}, 4);
  CHECK(circuit_permutation(c) == cyc("(3,5)(6,9)", 4));
  // Every pair of disjoint transpositions of {3,5,6,7} on 3 wires.
  const std::vector<std::array<Index, 4>> pairs = {
      {3, 5, 6, 7}, {3, 6, 5, 7}, {3, 7, 5, 6}};
  for (const auto& v : pairs) {
    TranspositionPair tp{v[0], v[1], v[2], v[3]};
    auto circ = synth_pair(tp, 3);
    CHECK(only_family(circ, 'T'));
    CHECK(circuit_permutation(circ) == tp.to_permutation(3));
  }
  CHECK_THROWS_AS(synth_pair({1, 3, 5, 6}, 4), NotTConstructible);
}

TEST_CASE("synth_t") {
  CHECK(synth_t(Permutation::identity(5)).empty());
  auto c = synth_t(cyc("(3,7)", 3));
  CHECK(c == Circuit(3, {Gate::inverter(4, 3)}));
  CHECK_THROWS_AS(synth_t(cyc("(1,3)", 3)), NotTConstructible);
  CHECK_THROWS_AS(synth_t(cyc("(3,5)", 4)), NotTConstructible);

  // All 24 on 3 wires.
  std::vector<Index> movable{3, 5, 6, 7};
  std::vector<Index> order = movable;
  do {
    std::vector<Index> img{0, 1, 2, 3, 4, 5, 6, 7};
    for (int i = 0; i < 4; ++i) img[movable[i]] = order[i];
    auto p = Permutation::from_images(img);
    auto circ = synth_t(p);
    CHECK(circuit_permutation(circ) == p);
    CHECK(circ.size() <= 4);
  } while (std::next_permutation(order.begin(), order.end()));

  std::mt19937_64 rng(17);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      auto p = random_t_perm(n, rng);
      auto circ = synth_t(p);
      CHECK(only_family(circ, 'T'));
      CHECK(circuit_permutation(circ) == p);
      long s = static_cast<long>(moved_count(p));
      CHECK(static_cast<long>(circ.size()) <= t_bound(n, s));
    }
  }
  // Sparse permutations: a single 3-cycle or pair.
  for (int n = 4; n <= 8; ++n) {
    const Index top = Index{1} << n;
    auto p3 = perm_from_cycles({{3, 5, top - 1}}, n);
    auto c3 = synth_t(p3);
    CHECK(circuit_permutation(c3) == p3);
    CHECK(static_cast<long>(c3.size()) <= t_bound(n, 3));
    auto p4 = perm_from_cycles({{3, top - 1}, {5, 6}}, n);
    auto c4 = synth_t(p4);
    CHECK(circuit_permutation(c4) == p4);
    CHECK(static_cast<long>(c4.size()) <= t_bound(n, 4));
  }
}

TEST_CASE("synth_tct") {
  auto p = cyc("(2,6)(4,7)", 3);
  auto s = synth_tct(p);
  CHECK(s.pure());
  CHECK(circuit_permutation(s.flatten()) == p);
  auto id = synth_tct(Permutation::identity(4));
  CHECK(id.flatten().empty());
  CHECK_THROWS_AS(synth_tct(Permutation::xor_mask(3, 1)), NotConstructible);

  // Every zero-fixing permutation on 3 wires.
  std::vector<Index> rest{1, 2, 3, 4, 5, 6, 7};
  do {
    std::vector<Index> img{0};
    img.insert(img.end(), rest.begin(), rest.end());
    auto q = Permutation::from_images(img);
    auto st = synth_tct(q);
    CHECK(st.pure());
    CHECK(circuit_permutation(st.flatten()) == q);
    CHECK(st.count('C') <= 9);
  } while (std::next_permutation(rest.begin(), rest.end()));

  std::mt19937_64 rng(23);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 60; ++trial) {
      auto q = random_zero_fixing_even(n, rng);
      auto st = synth_tct(q);
      CHECK(st.method == "construction");
      CHECK(st.pure());
      CHECK(circuit_permutation(st.flatten()) == q);
      CHECK(st.count('C') <= n * n);
      CHECK(st.count('T') <= tctn_t_bound(n));
    }
  }
}

TEST_CASE("synth_tct handles one or two dependent basis images") {
  // p(4) = 3 collides with p(1) ^ p(2).
  auto p = cyc("(3,4)(5,6)", 3);
  auto s = synth_tct(p);
  CHECK(circuit_permutation(s.flatten()) == p);
  // Width 5, two basis images replaced.
  auto q = perm_from_cycles({{8, 3}, {16, 5}}, 5);
  auto sq = synth_tct(q);
  CHECK(sq.pure());
  CHECK(circuit_permutation(sq.flatten()) == q);
  auto r = perm_from_cycles({{8, 3}, {9, 10}}, 4);
  auto sr = synth_tct(r);
  CHECK(circuit_permutation(sr.flatten()) == r);
}

TEST_CASE("synth_tctn") {
  auto x3 = synth_tctn(Permutation::xor_mask(3, 3));
  CHECK(x3.count('T') == 0);
  CHECK(x3.count('C') == 0);
  CHECK(x3.find("N")->circuit.size() == 2);

  for (int w = 1; w <= 3; ++w) {
    std::vector<Index> img(std::size_t{1} << w);
    for (Index x = 0; x < img.size(); ++x) img[x] = x;
    do {
      auto p = Permutation::from_images(img);
      auto st = synth_tctn(p);
      CHECK(st.pure());
      CHECK(circuit_permutation(st.flatten()) == p);
      CHECK(st.find("N")->circuit == synth_n(Permutation::xor_mask(w, p(0))));
      CHECK(st.count('N') <= w);
      CHECK(st.count('C') <= w * w);
    } while (std::next_permutation(img.begin(), img.end()));
  }

  CHECK_THROWS_AS(synth_tctn(cyc("(1,2)", 4)), OddPermutation);

  std::mt19937_64 rng(31);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      auto p = random_even_permutation(n, rng);
      auto st = synth_tctn(p);
      CHECK(st.pure());
      CHECK(circuit_permutation(st.flatten()) == p);
      CHECK(st.count('N') <= n);
      CHECK(st.count('C') <= n * n);
      CHECK(st.count('T') <= tctn_t_bound(n));
    }
  }
}

TEST_CASE("synth_with_ancilla") {
  auto s = synth_with_ancilla(cyc("(1,2)", 2));
  CHECK(s.width == 3);
  CHECK(circuit_permutation(s.flatten()) == cyc("(1,2)(5,6)", 3));
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    auto p = random_permutation(4, rng);
    if (parity(p) == Parity::Even) {
      p = compose(p, cyc("(1,2)", 4));
    }
    auto st = synth_with_ancilla(p);
    auto sim = circuit_permutation(st.flatten());
    for (Index x = 0; x < 16; ++x) {
      CHECK(sim(x) == p(x));
      CHECK(sim(x | 16) == (p(x) | 16));
    }
  }
  auto even = random_even_permutation(3, rng);
  CHECK(circuit_permutation(synth_with_ancilla(even).flatten()) ==
        lift_with_ancilla(even));
}

TEST_CASE("staged text round trip") {
  std::mt19937_64 rng(5);
  auto st = synth_tctn(random_even_permutation(4, rng));
  auto text = format_staged(st);
  auto back = parse_staged(text);
  CHECK(back.width == st.width);
  CHECK(back.method == st.method);
  REQUIRE(back.stages.size() == st.stages.size());
  for (std::size_t i = 0; i < st.stages.size(); ++i) {
    CHECK(back.stages[i].label == st.stages[i].label);
    CHECK(back.stages[i].circuit == st.stages[i].circuit);
  }
  CHECK(text.find("# stage T1") != std::string::npos);
  CHECK_THROWS_AS(parse_staged("wires 2\nn 0\n"), InvalidInput);
}
