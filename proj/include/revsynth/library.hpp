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

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "revsynth/error.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

/// Widest circuit a library can index.
inline constexpr int kLibraryMaxWidth = 5;

class Unreachable : public Unsynthesizable {
 public:
  using Unsynthesizable::Unsynthesizable;
};

/// A gate library on a fixed width, optionally restricted for ROM-based
/// circuits: no gate may write a ROM wire, and optionally no gate may have
/// more than `max_rom_controls` controls on ROM wires.
struct GateSet {
  GateLibrary library{GateLibrary::N};
  int width = 0;
  Index rom_mask = 0;
  int max_rom_controls = -1;  // negative: no cap

  GateSet() = default;
  GateSet(GateLibrary lib, int w, Index rom = 0, int cap = -1);

  /// The allowed gates in canonical order.
  std::vector<Gate> gates() const;
  std::string describe() const;

  bool operator==(const GateSet&) const = default;
};

/// Image vector packed `width` bits per entry, little-endian.
struct PermKey {
  std::array<std::uint64_t, 3> words{};

  static PermKey pack(std::span<const Index> images, int width);
  static PermKey of(const Permutation& p);
  void unpack(int width, Index* images) const;

  bool operator==(const PermKey&) const = default;
  auto operator<=>(const PermKey&) const = default;

  template <typename H>
  friend H AbslHashValue(H h, const PermKey& k) {
    return H::combine(std::move(h), k.words[0], k.words[1], k.words[2]);
  }
};

struct LibraryEntry {
  int cost = 0;
  Circuit circuit;
};

/// All optimal circuits up to some size, one per permutation, grouped by
/// size. Immutable once built.
class CircuitLibrary {
 public:
  const GateSet& gate_set() const noexcept { return set_; }
  int width() const noexcept { return set_.width; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// Largest size level stored.
  int max_size() const noexcept { return static_cast<int>(buckets_.size()) - 1; }
  /// Size asked for at build time.
  int requested_size() const noexcept { return requested_; }
  /// The memory budget stopped construction before the requested size.
  bool partial() const noexcept { return partial_; }
  /// Every permutation the gate set can reach is stored.
  bool complete() const noexcept { return complete_; }

  std::size_t bucket_size(int s) const;
  std::size_t total() const noexcept { return index_.size(); }
  std::vector<std::size_t> histogram() const;

  std::optional<LibraryEntry> lookup(const Permutation& p) const;
  /// Cost of the permutation with this key, or -1.
  int cost_of(const PermKey& key) const;

  std::span<const PermKey> bucket_keys(int s) const;
  /// Gate indices (into gates()) of entry i of bucket s.
  std::span<const std::uint8_t> bucket_gates(int s, std::size_t i) const;
  Circuit bucket_circuit(int s, std::size_t i) const;

  std::size_t memory_bytes() const;

 private:
  friend CircuitLibrary build_library(const GateSet&, int, std::size_t);
  friend CircuitLibrary load_library(const std::string&);
  friend void save_library(const CircuitLibrary&, const std::string&);
  friend class LibrarySearch;

  struct Bucket {
    std::vector<PermKey> keys;
    std::vector<std::uint8_t> gates;  // size s per entry
  };

  GateSet set_;
  std::vector<Gate> gates_;
  std::vector<Bucket> buckets_;
  // key -> (size << 32) | position within the bucket
  absl::flat_hash_map<PermKey, std::uint64_t> index_;
  int requested_ = 0;
  bool partial_ = false;
  bool complete_ = false;
};

/// Breadth-first construction: level s + 1 extends every level-s circuit
/// by every gate in canonical order and keeps permutations not seen before.
/// Each level is sorted by key. Stops early, keeping the last complete
/// level, when `budget_bytes` (0 = unlimited) would be exceeded, or when a
/// level comes out empty. Throws InvalidInput for widths above 5.
CircuitLibrary build_library(const GateSet& set, int max_size,
                             std::size_t budget_bytes = 0);

struct SearchOptions {
  /// Largest cost tried before giving up with Unreachable.
  int max_cost = 64;
  /// Seconds; 0 disables. Exceeding it throws ResourceLimit.
  double time_limit = 0;
};

struct SearchResult {
  Circuit circuit;
  int cost = 0;
  /// Interior search nodes (library scans).
  std::uint64_t nodes_expanded = 0;
  /// Library index lookups.
  std::uint64_t library_refs = 0;
  double wall_time = 0;
};

/// Minimal-gate circuit for p: a library lookup when the cost is at most the
/// library size m, else iterative deepening over j = m+1, m+2, ... where
/// each circuit C of size m is tried as a suffix and p * C^-1 is solved
/// with j - m gates. Throws Unreachable when p is provably out of reach
/// (parity, ROM wires, complete library) or the ceiling is passed.
SearchResult find_optimal(const Permutation& p, const CircuitLibrary& lib,
                          const SearchOptions& options = {});

/// Histogram of optimal sizes over every permutation the gate set reaches.
/// Throws ResourceLimit if the budget stops the closure early.
std::vector<std::size_t> size_distribution(const GateSet& set,
                                           std::size_t budget_bytes = 0);

/// Binary format, little-endian: magic "RSYNLIB1", u32 version, u8 width,
/// u8 gate mask, u8 max ROM controls (255 = none), u8 flags, u32 ROM mask,
/// u32 requested size, u32 stored size m, u32 gate count, then m + 1 u64
/// bucket sizes, then for each bucket its sorted records (2^width image
/// bytes followed by s gate indices), then a CRC-32 of every byte after
/// the magic.
void save_library(const CircuitLibrary& lib, const std::string& path);
/// Throws DataCorruption on a bad magic, checksum or version, truncation,
/// or a record that breaks the bucket invariants, and InvalidInput for an
/// unreadable file.
CircuitLibrary load_library(const std::string& path);

}  // namespace revsynth
