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
#include <set>

#include "revsynth/gf2.hpp"

using namespace revsynth;

namespace {

// Determinant over GF(2) by cofactor expansion.
int det2(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  int d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (!a[0][c]) continue;
    std::vector<std::vector<int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    d ^= det2(minor);
  }
  return d;
}

}  // namespace

TEST_CASE("matrix_of_perm") {
  CHECK(matrix_of_perm(Permutation::identity(3)) == BitMatrix::identity(3));
  // C gate control 1 target 0 adds row 1 into row 0.
  auto m = matrix_of_perm(Gate::cnot(1, 0).permutation(2));
  auto e = BitMatrix::identity(2);
  e.add_row(1, 0);
  CHECK(m == e);
  auto f = perm_from_cycles(parse_cycles("(2,3)(6,7)"), 3);
  CHECK_NOTHROW(matrix_of_perm(f));
  CHECK_THROWS_AS(matrix_of_perm(perm_from_cycles(parse_cycles("(3,7)"), 3)),
                  NotLinear);
  CHECK_THROWS_AS(matrix_of_perm(Permutation::xor_mask(3, 1)), NotLinear);
}

TEST_CASE("synth_linear on small and elementary matrices") {
  CHECK(synth_linear(BitMatrix::identity(4)).empty());
  for (int n = 2; n <= 5; ++n) {
    for (int s = 0; s < n; ++s) {
      for (int d = 0; d < n; ++d) {
        if (s == d) continue;
        auto e = BitMatrix::identity(n);
        e.add_row(s, d);
        auto c = synth_linear(e);
        CHECK(c.size() == 1);
        CHECK(circuit_permutation(c) == perm_of_matrix(e));
      }
    }
  }
  auto sing = BitMatrix::from_rows({1, 1, 4});
  CHECK_THROWS_AS(synth_linear(sing), SingularMatrix);
  CHECK_THROWS_AS(perm_of_matrix(sing), SingularMatrix);
}

TEST_CASE("synth_linear exhaustive on 3 wires") {
  // Closure of the identity under C gates, found by breadth-first search.
  auto gates = enumerate_gates(GateLibrary::parse("C"), 3);
  std::set<std::vector<Index>> seen;
  std::vector<Permutation> frontier{Permutation::identity(3)};
  seen.insert({frontier[0].images().begin(), frontier[0].images().end()});
  std::vector<Permutation> all = frontier;
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : gates) {
        auto q = compose(p, g.permutation(3));
        if (seen.insert({q.images().begin(), q.images().end()}).second) {
          next.push_back(q);
          all.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  CHECK(all.size() == 168);
  CHECK(count_linear(3) == 168);
  for (const auto& p : all) {
    auto c = synth_linear(matrix_of_perm(p));
    CHECK(circuit_permutation(c) == p);
    CHECK(c.size() <= 9);
  }
}

TEST_CASE("synth_linear on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + trial % 8;
    auto m = random_invertible_matrix(n, rng);
    auto c = synth_linear(m);
    CHECK(c.size() <= static_cast<std::size_t>(n * n));
    CHECK(circuit_permutation(c) == perm_of_matrix(m));
  }
}

TEST_CASE("count_linear") {
  CHECK(count_linear(1) == 1);
  CHECK(count_linear(2) == 6);
  CHECK(count_linear(3) == 168);
  CHECK(count_linear(4) == 20160);
  CHECK(count_linear(16) > 0);
}

TEST_CASE("rank agrees with a cofactor determinant") {
  for (int n = 1; n <= 3; ++n) {
    const Index cells = static_cast<Index>(n * n);
    for (Index bits = 0; bits < (Index{1} << cells); ++bits) {
      std::vector<Index> rows(static_cast<std::size_t>(n));
      std::vector<std::vector<int>> a(n, std::vector<int>(n));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          int v = (bits >> (r * n + c)) & 1;
          a[r][c] = v;
          if (v) rows[r] |= Index{1} << c;
        }
      CHECK(BitMatrix::from_rows(rows).invertible() == (det2(a) == 1));
    }
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Index> rows(4);
    std::vector<std::vector<int>> a(4, std::vector<int>(4));
    for (int r = 0; r < 4; ++r) {
      rows[r] = rng() & 15;
      for (int c = 0; c < 4; ++c) a[r][c] = (rows[r] >> c) & 1;
    }
    CHECK(BitMatrix::from_rows(rows).invertible() == (det2(a) == 1));
  }
}

TEST_CASE("check_tc_constructible") {
  CHECK_FALSE(
      check_tc_constructible(perm_from_cycles(parse_cycles("(2,6)(4,7)"), 3)));
  CHECK(check_tc_constructible(Permutation::identity(3)));
  // The 24 T-constructible permutations on 3 wires permute {3,5,6,7}.
  std::vector<Index> movable{3, 5, 6, 7};
  std::vector<Index> order = movable;
  int count = 0;
  do {
    std::vector<Index> img{0, 1, 2, 3, 4, 5, 6, 7};
    for (int i = 0; i < 4; ++i) img[movable[i]] = order[i];
    CHECK(check_tc_constructible(Permutation::from_images(img)));
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  CHECK(count == 24);
}

TEST_CASE("matrix text format") {
  auto m = parse_matrix("110\n010\n001\n");
  CHECK(m.get(0, 1));
  CHECK(format_matrix(m) == "110\n010\n001\n");
  CHECK_THROWS_AS(parse_matrix("11\n0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix("12\n01\n"), InvalidInput);
  CHECK_THROWS_AS(parse_matrix(""), InvalidInput);
}
