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
#include <string_view>
#include <vector>

#include "revsynth/error.hpp"
#include "revsynth/gate.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

class NotNConstructible : public Unsynthesizable {
 public:
  using Unsynthesizable::Unsynthesizable;
};

class NotTConstructible : public Unsynthesizable {
 public:
  using Unsynthesizable::Unsynthesizable;
};

class NotConstructible : public Unsynthesizable {
 public:
  using Unsynthesizable::Unsynthesizable;
};

class OddPermutation : public Unsynthesizable {
 public:
  using Unsynthesizable::Unsynthesizable;
};

struct Stage {
  /// "T1", "C", "T2" or "N". The first letter names the only gate family
  /// the stage may contain.
  std::string label;
  Circuit circuit;
};

struct StagedCircuit {
  int width = 0;
  std::vector<Stage> stages;
  /// How the T|C|T part was obtained, e.g. "construction" or "linear".
  std::string method;

  Circuit flatten() const;
  const Stage* find(std::string_view label) const;
  /// Gate count of the stages whose label starts with `family`.
  int count(char family) const;
  /// Every stage holds only gates of its labeled family.
  bool pure() const;
};

/// Circuit text with a "# stage <label>" comment before each stage.
std::string format_staged(const StagedCircuit& s);
StagedCircuit parse_staged(std::string_view text);

/// N^{p(0)}: one N gate per set bit of p(0). Throws NotNConstructible
/// unless p(x) = x ^ p(0) for every x.
Circuit synth_n(const Permutation& p);

/// T circuit for N^1_{2^n - 4}, the pair (2^n-4, 2^n-3)(2^n-2, 2^n-1).
/// Wire 1 is borrowed as workspace and restored. Gate counts: 1 for n = 4,
/// 4 for n = 5, 10 for n = 6 and 8(n - 5) beyond. Throws InvalidInput for
/// n < 4, where the pair moves a power of two.
Circuit expand_kappa0(int n);

/// A T circuit computing some pi with {pi(a), pi(b)} and {pi(c), pi(d)}
/// equal to {2^n-4, 2^n-3} and {2^n-2, 2^n-1} in some order. At most
/// 5n - 2 gates. Requires n > 3, distinct indices, none 0 or a power of two.
Circuit synth_conjugator(Index a, Index b, Index c, Index d, int n);

/// T circuit for (a,b)(c,d): conjugator, kappa0, reversed conjugator. On
/// 3 wires the circuit comes from an exhaustive table of the 24
/// T-constructible permutations.
Circuit synth_pair(const TranspositionPair& tp, int n);

/// T circuit for p. Throws NotTConstructible unless p fixes 0 and every
/// power of two and, on more than 3 wires, is even.
Circuit synth_t(const Permutation& p);

/// Stages T1, C, T2 for a zero-fixing p (even when the width exceeds 3).
StagedCircuit synth_tct(const Permutation& p);

/// Stages T1, C, T2, N. The N stage is N^{p(0)}. Throws OddPermutation for
/// odd p on more than 3 wires.
StagedCircuit synth_tctn(const Permutation& p);

/// The even permutation (y, x) -> (y, p(x)) on width + 1 wires, y on the
/// new most significant wire, synthesized with synth_tctn.
StagedCircuit synth_with_ancilla(const Permutation& p);

/// (y, x) -> (y, p(x)) with y the new top bit.
Permutation lift_with_ancilla(const Permutation& p);

}  // namespace revsynth
