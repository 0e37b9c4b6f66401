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

#include <string>
#include <vector>

#include "revsynth/gate.hpp"

namespace revsynth {

/// A pair of gate sequences that compute the same permutation.
struct RewriteRule {
  std::string name;
  std::vector<Gate> lhs;
  std::vector<Gate> rhs;

  /// Simulates both sides on `width` wires.
  bool holds(int width) const;
};

/// [P, Q] = P Q P^-1 Q^-1 as a circuit.
Circuit commutator(const Circuit& p, const Circuit& q);

struct LiftedPair {
  Gate first;
  Gate second;
  /// Wires controlling either gate but touched by neither as a target:
  /// (h + k) & ~(i + j).
  Index common_controls;
};

/// Factors shared control structure out of a commutator of two inverters:
/// [V_h(G^i), V_k(H^j)] = V_f([V_{h&j}(G^i), V_{k&i}(H^j)]) with f the
/// returned common_controls.
LiftedPair lift_controls(const Gate& g1, const Gate& g2);

/// How an N gate on some wire meets the gate to its right.
enum class NotRole { Untouched, Target, Control };

NotRole classify_not(int wire, const Gate& g);

/// The rule rewriting N(wire) . g into an equivalent sequence ending in
/// N(wire). Untouched and Target roles commute; the Control role inserts
/// g with that control removed.
RewriteRule not_push_rule(int wire, const Gate& g);

/// Moves every N gate to the end of a CNT circuit, cancelling pairs. The
/// result has at most width N gates, all in a suffix, and at most
/// 3(l - 1) + width gates for an l-gate input. Throws InvalidInput for swap
/// gates, multi-target inverters or gates with more than two controls.
Circuit push_nots_right(const Circuit& c);

/// Removes identical adjacent gate pairs until none remain.
Circuit cancel_adjacent(const Circuit& c);

/// When enabled, push_nots_right and cancel_adjacent simulate input and
/// output and throw std::logic_error on a mismatch. Off by default.
void set_rewrite_verification(bool enabled) noexcept;

}  // namespace revsynth
