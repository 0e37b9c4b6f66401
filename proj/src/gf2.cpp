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

#include "revsynth/gf2.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace revsynth {

BitMatrix::BitMatrix(int n) {
  if (n < 1 || n > kMaxWidth) {
    throw InvalidInput("matrix dimension " + std::to_string(n) +
                       " out of range");
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = Index{1} << i;
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<Index> rows) {
  BitMatrix m(static_cast<int>(rows.size()));
  for (Index r : rows) {
    if ((r >> rows.size()) != 0) throw InvalidInput("matrix row too wide");
  }
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::from_columns(std::span<const Index> columns) {
  BitMatrix m(static_cast<int>(columns.size()));
  for (int c = 0; c < m.size(); ++c) {
    if ((columns[c] >> columns.size()) != 0) {
      throw InvalidInput("matrix column too tall");
    }
    for (int r = 0; r < m.size(); ++r) {
      if ((columns[c] >> r) & 1u) m.rows_[r] |= Index{1} << c;
    }
  }
  return m;
}

void BitMatrix::set(int r, int c, bool value) {
  if (value) rows_[r] |= Index{1} << c;
  else rows_[r] &= ~(Index{1} << c);
}

Index BitMatrix::column(int c) const {
  Index out = 0;
  for (int r = 0; r < size(); ++r) out |= ((rows_[r] >> c) & 1u) << r;
  return out;
}

Index BitMatrix::apply(Index x) const noexcept {
  Index out = 0;
  for (int r = 0; r < size(); ++r) {
    out |= static_cast<Index>(std::popcount(rows_[r] & x) & 1) << r;
  }
  return out;
}

int gf2_rank(std::span<const Index> vectors) {
  std::vector<Index> basis;  // basis[i] has a distinct leading bit
  for (Index v : vectors) {
    for (Index b : basis) {
      if (v & (Index{1} << (std::bit_width(b) - 1))) v ^= b;
    }
    if (v != 0) {
      basis.push_back(v);
      // Descending order: XOR with a later entry never sets a higher bit.
      std::sort(basis.begin(), basis.end(), std::greater<>());
    }
  }
  return static_cast<int>(basis.size());
}

int BitMatrix::rank() const { return gf2_rank(rows_); }

BitMatrix matrix_of_perm(const Permutation& p) {
  if (p(0) != 0) throw NotLinear("permutation does not fix 0; not linear");
  std::vector<Index> columns(static_cast<std::size_t>(p.width()));
  for (int i = 0; i < p.width(); ++i) columns[i] = p(Index{1} << i);
  BitMatrix m = BitMatrix::from_columns(columns);
  for (Index x = 0; x < p.size(); ++x) {
    if (m.apply(x) != p(x)) {
      throw NotLinear("permutation is not linear: image of " +
                      std::to_string(x) + " is not the XOR of basis images");
    }
  }
  return m;
}

Permutation perm_of_matrix(const BitMatrix& m) {
  if (!m.invertible()) throw SingularMatrix("matrix is singular over GF(2)");
  std::vector<Index> images(std::size_t{1} << m.size());
  for (Index x = 0; x < images.size(); ++x) images[x] = m.apply(x);
  return Permutation::from_images(std::move(images));
}

Circuit synth_linear(const BitMatrix& m) {
  const int n = m.size();
  BitMatrix work = m;
  // Row operations R_1..R_k with R_k ... R_1 M = I, so M = R_1 ... R_k and
  // the circuit applies R_k first.
  std::vector<Gate> ops;
  auto row_add = [&](int src, int dst) {
    work.add_row(src, dst);
    ops.push_back(Gate::cnot(src, dst));
  };
  for (int c = 0; c < n; ++c) {
    if (!work.get(c, c)) {
      int pivot = -1;
      for (int r = c + 1; r < n; ++r) {
        if (work.get(r, c)) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) throw SingularMatrix("matrix is singular over GF(2)");
      row_add(pivot, c);
    }
    for (int r = c + 1; r < n; ++r) {
      if (work.get(r, c)) row_add(c, r);
    }
  }
  for (int c = n - 1; c > 0; --c) {
    for (int r = 0; r < c; ++r) {
      if (work.get(r, c)) row_add(c, r);
    }
  }
  Circuit out(n);
  out.gates.assign(ops.rbegin(), ops.rend());
  return out;
}

boost::multiprecision::cpp_int count_linear(int n) {
  if (n < 1) throw InvalidInput("count_linear: n must be >= 1");
  using boost::multiprecision::cpp_int;
  cpp_int full = cpp_int(1) << n;
  cpp_int product = 1;
  for (int i = 0; i < n; ++i) product *= full - (cpp_int(1) << i);
  return product;
}

bool check_tc_constructible(const Permutation& p) {
  if (p(0) != 0) return false;
  std::vector<Index> images(static_cast<std::size_t>(p.width()));
  for (int i = 0; i < p.width(); ++i) images[i] = p(Index{1} << i);
  return gf2_rank(images) == p.width();
}

BitMatrix random_invertible_matrix(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> dist(0, (Index{1} << n) - 1);
  while (true) {
    std::vector<Index> rows(static_cast<std::size_t>(n));
    for (Index& r : rows) r = dist(rng);
    BitMatrix m = BitMatrix::from_rows(std::move(rows));
    if (m.invertible()) return m;
  }
}

BitMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) lines.push_back(line);
  }
  if (lines.empty()) throw InvalidInput("matrix text is empty");
  const std::size_t n = lines.size();
  std::vector<Index> rows(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (lines[r].size() != n) {
      throw InvalidInput("matrix row " + std::to_string(r) + " has length " +
                         std::to_string(lines[r].size()) + ", expected " +
                         std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      char ch = lines[r][c];
      if (ch != '0' && ch != '1') {
        throw InvalidInput("matrix entries must be '0' or '1'");
      }
      if (ch == '1') rows[r] |= Index{1} << c;
    }
  }
  return BitMatrix::from_rows(std::move(rows));
}

std::string format_matrix(const BitMatrix& m) {
  std::string out;
  for (int r = 0; r < m.size(); ++r) {
    for (int c = 0; c < m.size(); ++c) out += m.get(r, c) ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace revsynth
