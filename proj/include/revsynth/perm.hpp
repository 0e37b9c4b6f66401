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

#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revsynth {

/// A truth-table index. Bit j of an index is the value carried by wire j.
using Index = std::uint32_t;

inline constexpr int kMaxWidth = 16;

enum class Parity { Even, Odd };

/// True for 0 and for every power of two: the indices no T-circuit can move.
constexpr bool is_zero_or_basis(Index x) noexcept {
  return std::popcount(x) <= 1;
}

/// A bijection on {0, ..., 2^width - 1}, stored as its image vector.
class Permutation {
 public:
  static Permutation identity(int width);

  /// Validates that `images` has power-of-two length and is a bijection.
  static Permutation from_images(std::vector<Index> images);

  /// x -> x XOR mask.
  static Permutation xor_mask(int width, Index mask);

  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return images_.size(); }
  Index operator()(Index x) const { return images_[x]; }
  std::span<const Index> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;

 private:
  Permutation(int width, std::vector<Index> images)
      : width_(width), images_(std::move(images)) {}

  int width_ = 0;
  std::vector<Index> images_;
};

using Cycle = std::vector<Index>;
/// Disjoint cycles; fixed points are omitted and no cycle is shorter than 2.
using CycleNotation = std::vector<Cycle>;

Permutation perm_from_cycles(const CycleNotation& cycles, int width);

/// Cycles in canonical form: each starts at its smallest element, cycles
/// sorted by that element.
CycleNotation cycles_of(const Permutation& p);

/// Result maps x to second(first(x)): `first` is applied first, matching
/// left-to-right circuit concatenation.
Permutation compose(const Permutation& first, const Permutation& second);

Permutation invert(const Permutation& p);

Parity parity(const Permutation& p);

/// Number of indices x with p(x) != x.
std::size_t moved_count(const Permutation& p);

/// The product (a,b)(c,d) of two disjoint transpositions.
struct TranspositionPair {
  Index a = 0;
  Index b = 0;
  Index c = 0;
  Index d = 0;

  Permutation to_permutation(int width) const;
  bool operator==(const TranspositionPair&) const = default;
};

/// Writes an even permutation as a sequence of disjoint transposition pairs
/// whose left-to-right product is `p`. Uses at most (moved + 1) / 2 pairs.
/// When p fixes 0 and every power of two on more than 3 wires, no returned
/// index is 0 or a power of two. Throws Unsynthesizable for odd permutations and InvalidInput when
/// the width is too small to supply two spare indices.
std::vector<TranspositionPair> decompose_pairs(const Permutation& p);

/// Left-to-right product of `pairs`.
Permutation product_of_pairs(std::span<const TranspositionPair> pairs,
                             int width);

/// Accepts "(2,3)(6,7)" with optional whitespace; "" or "()" is the identity.
CycleNotation parse_cycles(std::string_view text);
std::string format_cycles(const CycleNotation& cycles);

/// Space-separated images on one line, e.g. "0 1 3 2 4 5 7 6".
Permutation parse_truth_table(std::string_view text);
std::string format_truth_table(const Permutation& p);

Permutation random_permutation(int width, std::mt19937_64& rng);
Permutation random_even_permutation(int width, std::mt19937_64& rng);

}  // namespace revsynth
