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

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "revsynth/error.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

class NotLinear : public Unsynthesizable {
 public:
  using Unsynthesizable::Unsynthesizable;
};

class SingularMatrix : public Unsynthesizable {
 public:
  using Unsynthesizable::Unsynthesizable;
};

/// Square matrix over GF(2). Row r is stored as a bitmask whose bit c is the
/// entry (r, c). A vector x is a column of bits, bit i = coordinate i.
class BitMatrix {
 public:
  explicit BitMatrix(int n);
  static BitMatrix identity(int n);
  static BitMatrix from_rows(std::vector<Index> rows);
  /// Column c is the bit pattern columns[c].
  static BitMatrix from_columns(std::span<const Index> columns);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  bool get(int r, int c) const { return (rows_[r] >> c) & 1u; }
  void set(int r, int c, bool value);
  Index row(int r) const { return rows_[r]; }
  Index column(int c) const;

  /// row[dst] ^= row[src]
  void add_row(int src, int dst) { rows_[dst] ^= rows_[src]; }

  /// M x over GF(2).
  Index apply(Index x) const noexcept;

  int rank() const;
  bool invertible() const { return rank() == size(); }

  bool operator==(const BitMatrix&) const = default;

 private:
  std::vector<Index> rows_;
};

/// Rank of a set of bit vectors over GF(2).
int gf2_rank(std::span<const Index> vectors);

/// Column i is p(2^i). Throws NotLinear unless p fixes 0 and
/// p(x ^ y) = p(x) ^ p(y) everywhere.
BitMatrix matrix_of_perm(const Permutation& p);

/// The linear permutation x -> M x. Throws SingularMatrix.
Permutation perm_of_matrix(const BitMatrix& m);

/// C-gate circuit computing x -> M x, at most n^2 gates. Gaussian
/// elimination with the lowest-index pivot: forward elimination, then back
/// substitution; each row operation becomes one C gate. Throws
/// SingularMatrix.
Circuit synth_linear(const BitMatrix& m);

/// Number of invertible n x n matrices over GF(2): prod (2^n - 2^i).
boost::multiprecision::cpp_int count_linear(int n);

/// True iff p(0) = 0 and the images of the powers of two are linearly
/// independent (the T|C criterion for even permutations).
bool check_tc_constructible(const Permutation& p);

BitMatrix random_invertible_matrix(int n, std::mt19937_64& rng);

/// n lines of n '0'/'1' characters, row-major.
BitMatrix parse_matrix(std::string_view text);
std::string format_matrix(const BitMatrix& m);

}  // namespace revsynth
