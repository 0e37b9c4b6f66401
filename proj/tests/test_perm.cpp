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

#include "revsynth/error.hpp"
#include "revsynth/perm.hpp"

using namespace revsynth;

namespace {

std::vector<Index> imgs(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

// Parity by counting inversions, independent of cycle decomposition.
Parity inversion_parity(const Permutation& p) {
  std::size_t inv = 0;
  for (Index i = 0; i < p.size(); ++i)
    for (Index j = i + 1; j < p.size(); ++j)
      if (p(i) > p(j)) ++inv;
  return inv % 2 ? Parity::Odd : Parity::Even;
}

}  // namespace

TEST_CASE("perm_from_cycles builds image vectors") {
  CHECK(imgs(perm_from_cycles(parse_cycles("(2,3)(6,7)"), 3)) ==
        std::vector<Index>{0, 1, 3, 2, 4, 5, 7, 6});
  CHECK(perm_from_cycles(parse_cycles(""), 3).is_identity());
  CHECK(imgs(perm_from_cycles(parse_cycles("(1,2)"), 2)) ==
        std::vector<Index>{0, 2, 1, 3});
  CHECK(imgs(perm_from_cycles(parse_cycles("(1, 2, 3)"), 2)) ==
        std::vector<Index>{0, 2, 3, 1});
}

TEST_CASE("perm_from_cycles rejects bad cycles") {
  CHECK_THROWS_AS(perm_from_cycles(parse_cycles("(1,8)"), 3), InvalidInput);
  CHECK_THROWS_AS(perm_from_cycles(parse_cycles("(1,2)(2,3)"), 3),
                  InvalidInput);
  CHECK_THROWS_AS(parse_cycles("(1)"), InvalidInput);
  CHECK_THROWS_AS(parse_cycles("(1,2"), InvalidInput);
  CHECK_THROWS_AS(parse_cycles("1,2)"), InvalidInput);
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1, 2}), InvalidInput);
  CHECK_THROWS_AS(Permutation::from_images({0, 1, 2}), InvalidInput);
}

TEST_CASE("compose applies the first argument first") {
  auto p = perm_from_cycles(parse_cycles("(1,2)"), 2);
  auto q = perm_from_cycles(parse_cycles("(2,3)"), 2);
  auto pq = compose(p, q);
  // 1 -> 2 -> 3
  CHECK(pq(1) == 3);
  CHECK(pq(3) == 2);
  CHECK(pq(2) == 1);
  auto a = perm_from_cycles(parse_cycles("(2,3)"), 3);
  auto b = perm_from_cycles(parse_cycles("(6,7)"), 3);
  CHECK(compose(a, b) == perm_from_cycles(parse_cycles("(2,3)(6,7)"), 3));
  CHECK(compose(a, Permutation::identity(3)) == a);
  CHECK_THROWS_AS(compose(a, p), InvalidInput);
}

TEST_CASE("invert and parity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int w = 1 + trial % 8;
    auto p = random_permutation(w, rng);
    auto q = random_permutation(w, rng);
    CHECK(compose(p, invert(p)).is_identity());
    CHECK(compose(invert(p), p).is_identity());
    if (w <= 6) CHECK(parity(p) == inversion_parity(p));
    bool odd = (parity(p) == Parity::Odd) != (parity(q) == Parity::Odd);
    CHECK((parity(compose(p, q)) == Parity::Odd) == odd);
    CHECK(perm_from_cycles(cycles_of(p), w) == p);
  }
  auto c = perm_from_cycles(parse_cycles("(3,5,6)"), 3);
  CHECK(format_cycles(cycles_of(invert(c))) == "(3,6,5)");
  auto inv = perm_from_cycles(parse_cycles("(2,3)(6,7)"), 3);
  CHECK(invert(inv) == inv);
  CHECK(parity(perm_from_cycles(parse_cycles("(1,2)"), 2)) == Parity::Odd);
  CHECK(parity(perm_from_cycles(parse_cycles("(1,2)(5,6)"), 3)) ==
        Parity::Even);
  CHECK(parity(Permutation::identity(4)) == Parity::Even);
}

TEST_CASE("exhaustive bijectivity on 3 wires") {
  // All 40320 permutations via next_permutation; compose/invert stay valid.
  std::vector<Index> v{0, 1, 2, 3, 4, 5, 6, 7};
  auto g = perm_from_cycles(parse_cycles("(1,6,3)(2,7)"), 3);
  std::size_t count = 0;
  do {
    auto p = Permutation::from_images(v);
    auto r = compose(p, g);
    CHECK_NOTHROW(Permutation::from_images(imgs(r)));
    CHECK(compose(invert(p), compose(p, g)) == g);
    ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  CHECK(count == 40320);
}

TEST_CASE("decompose_pairs") {
  auto p = perm_from_cycles(parse_cycles("(2,6)(4,7)"), 3);
  auto pairs = decompose_pairs(p);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == TranspositionPair{2, 6, 4, 7});
  CHECK(decompose_pairs(Permutation::identity(3)).empty());

  auto c = perm_from_cycles(parse_cycles("(3,5,6)"), 3);
  auto cp = decompose_pairs(c);
  CHECK(cp.size() == 2);
  CHECK(product_of_pairs(cp, 3) == c);
  // On 3 wires 7 is the only spare that is neither 0 nor a power of two.
  CHECK(cp[0].c == 7);
  auto c4 = perm_from_cycles(parse_cycles("(3,5,6)"), 4);
  auto cp4 = decompose_pairs(c4);
  CHECK(product_of_pairs(cp4, 4) == c4);
  for (const auto& tp : cp4) {
    for (Index x : {tp.a, tp.b, tp.c, tp.d}) CHECK(!is_zero_or_basis(x));
  }

  CHECK_THROWS_AS(decompose_pairs(perm_from_cycles(parse_cycles("(1,2)"), 3)),
                  Unsynthesizable);
  CHECK_THROWS_AS(
      decompose_pairs(perm_from_cycles(parse_cycles("(1,2,3)"), 2)),
      InvalidInput);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int w = 3 + trial % 5;
    auto q = random_even_permutation(w, rng);
    auto qp = decompose_pairs(q);
    CHECK(product_of_pairs(qp, w) == q);
    CHECK(2 * qp.size() <= moved_count(q) + 1);
  }
}

TEST_CASE("decompose_pairs avoids 0 and powers of two when they are fixed") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    int w = 3 + trial % 4;
    // Random even permutation of the non-basis nonzero indices.
    std::vector<Index> movable;
    for (Index x = 0; x < (Index{1} << w); ++x)
      if (!is_zero_or_basis(x)) movable.push_back(x);
    std::vector<Index> shuffled = movable;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<Index> img(std::size_t{1} << w);
    for (Index x = 0; x < img.size(); ++x) img[x] = x;
    for (std::size_t i = 0; i < movable.size(); ++i)
      img[movable[i]] = shuffled[i];
    auto p = Permutation::from_images(img);
    if (parity(p) == Parity::Odd) {
      std::swap(img[movable[0]], img[movable[1]]);
      p = Permutation::from_images(img);
    }
    if (p.is_identity()) continue;
    auto pairs = decompose_pairs(p);
    CHECK(product_of_pairs(pairs, w) == p);
    if (w == 3) continue;
    for (const auto& tp : pairs) {
      for (Index x : {tp.a, tp.b, tp.c, tp.d}) CHECK(!is_zero_or_basis(x));
    }
  }
}

TEST_CASE("text formats round trip") {
  auto p = parse_truth_table("0 1 3 2 4 5 7 6");
  CHECK(format_truth_table(p) == "0 1 3 2 4 5 7 6");
  CHECK(format_cycles(cycles_of(p)) == "(2,3)(6,7)");
  CHECK(format_cycles({}) == "()");
  CHECK(parse_cycles("()").empty());
  CHECK_THROWS_AS(parse_truth_table("0 1 x 3"), InvalidInput);
  auto x = Permutation::xor_mask(3, 5);
  CHECK(x(0) == 5);
  CHECK(x(7) == 2);
}
