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

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "revsynth/perm.hpp"

namespace revsynth {

enum class GateKind : std::uint8_t { ControlledInverter = 0, Swap = 1 };

/// Either a generalized controlled inverter N^h_k, which flips every wire in
/// the target mask h when all wires in the control mask k carry 1, or a SWAP
/// of two wires. N, C and T are the inverters with 0, 1 and 2 controls and a
/// single target.
class Gate {
 public:
  static Gate inverter(Index target_mask, Index control_mask = 0);
  static Gate not_gate(int target);
  static Gate cnot(int control, int target);
  static Gate toffoli(int control1, int control2, int target);
  static Gate swap(int wire_a, int wire_b);

  GateKind kind() const noexcept { return kind_; }
  bool is_swap() const noexcept { return kind_ == GateKind::Swap; }

  /// Inverter only.
  Index target_mask() const noexcept { return first_; }
  Index control_mask() const noexcept { return second_; }

  /// Swap only; wire_a < wire_b.
  int wire_a() const noexcept { return static_cast<int>(first_); }
  int wire_b() const noexcept { return static_cast<int>(second_); }

  Index apply(Index x) const noexcept {
    if (kind_ == GateKind::ControlledInverter) {
      return (x & second_) == second_ ? x ^ first_ : x;
    }
    Index a = (x >> first_) & 1u;
    Index b = (x >> second_) & 1u;
    return a == b ? x : x ^ ((Index{1} << first_) | (Index{1} << second_));
  }

  /// Mask of every wire the gate reads or writes.
  Index support() const noexcept;
  /// Wires the gate may change.
  Index written() const noexcept;

  bool fits(int width) const noexcept;

  /// 'N', 'C', 'T' for single-target inverters with 0/1/2 controls, 'S' for
  /// swaps, 'G' for anything else.
  char family() const noexcept;

  /// Gate-count cost: a multi-target inverter counts once per target wire.
  int cost() const noexcept;

  /// V_j: the same gate additionally controlled by `mask`.
  Gate with_extra_controls(Index mask) const;

  Permutation permutation(int width) const;

  auto operator<=>(const Gate&) const = default;

 private:
  Gate(GateKind kind, Index first, Index second)
      : kind_(kind), first_(first), second_(second) {}

  GateKind kind_ = GateKind::ControlledInverter;
  Index first_ = 0;
  Index second_ = 0;
};

/// Ordered gate sequence on a fixed number of wires. Gates apply left to
/// right; an empty circuit computes the identity.
struct Circuit {
  int width = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(int w, std::vector<Gate> g = {});

  std::size_t size() const noexcept { return gates.size(); }
  bool empty() const noexcept { return gates.empty(); }

  /// Sum of Gate::cost().
  int gate_count() const noexcept;

  void append(const Gate& g);
  void append(const Circuit& other);

  /// Every gate is an involution, so the inverse is the reversed sequence.
  Circuit inverse() const;

  bool operator==(const Circuit&) const = default;
};

Index circuit_apply(const Circuit& c, Index x) noexcept;
Permutation circuit_permutation(const Circuit& c);

/// Allowed gate families, a nonempty subset of {N, C, T, S}.
class GateLibrary {
 public:
  enum Family : std::uint8_t { N = 1, C = 2, T = 4, S = 8 };

  explicit GateLibrary(std::uint8_t mask);
  /// Letters in any order, e.g. "CNTS", "NT"; case-insensitive.
  static GateLibrary parse(std::string_view text);

  std::uint8_t mask() const noexcept { return mask_; }
  bool has(Family f) const noexcept { return (mask_ & f) != 0; }
  bool allows(const Gate& g) const noexcept;
  /// Letters in C, N, T, S order, e.g. "CNT".
  std::string name() const;

  bool operator==(const GateLibrary&) const = default;

 private:
  std::uint8_t mask_;
};

/// Every distinct placement of the library's gates on `width` wires, in
/// canonical order: N, then C, then T, then S; within a family ordered by
/// (target, controls) or (wire_a, wire_b).
std::vector<Gate> enumerate_gates(GateLibrary lib, int width);

/// Circuit text format: header "wires <n>", then one gate per line:
/// "n <t>", "c <c> <t>", "t <c1> <c2> <t>", "s <a> <b>", "g <h> <k>".
/// '#' starts a comment.
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit& c);
std::string format_gate(const Gate& g);

}  // namespace revsynth
