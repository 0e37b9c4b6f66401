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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revsynth/gate.hpp"
#include "revsynth/library.hpp"
#include "revsynth/perm.hpp"

namespace revsynth {

/// A predicate f on k-bit inputs; bit x of the truth table is f(x).
class BoolFunc {
 public:
  BoolFunc(int arity, std::vector<bool> table);
  static BoolFunc zero(int arity);
  /// Bit x of `value`, arity <= 6.
  static BoolFunc from_bits(int arity, std::uint64_t value);

  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return table_.size(); }
  bool operator()(Index x) const { return table_[x]; }
  std::size_t weight() const;
  const std::vector<bool>& table() const noexcept { return table_; }

  bool operator==(const BoolFunc&) const = default;

 private:
  int arity_;
  std::vector<bool> table_;
};

/// Hex truth table ("0x96", bit x = f(x)) or minterm list ("{1,2,4,7}").
BoolFunc parse_boolfunc(std::string_view text, int arity);
/// Lowercase hex with the 0x prefix, 2^k / 4 digits (at least one).
std::string format_boolfunc(const BoolFunc& f);

/// (x, y) -> (x, y ^ f(x)) on k + 1 wires; y is wire k.
Permutation oracle_perm(const BoolFunc& f);

/// True iff f has odd support, so the oracle permutation is odd.
bool oracle_needs_ancilla(const BoolFunc& f);

/// Positive-polarity Reed-Muller form. Each monomial is a variable mask;
/// mask 0 is the constant 1 term. Sorted by degree, then by variable list.
struct Pprm {
  int arity = 0;
  std::vector<Index> monomials;

  bool evaluate(Index x) const;
  int degree() const;
};

Pprm pprm(const BoolFunc& f);
std::string format_pprm(const Pprm& p);

/// k ROM wires (0..k-1) and one or two writable wires. With two, wire k is
/// the output b and wire k+1 the work wire a, which is restored.
struct RomCircuit {
  int rom_wires = 0;
  int writable_wires = 0;
  Circuit circuit;

  Index rom_mask() const { return (Index{1} << rom_wires) - 1; }
};

/// XOR of per-term circuits built by the W_l recursion: W_1 = C(x;b),
/// W_{l+1} = T(v,b;a) W_l T(v,b;a) W_l with a and b exchanged, so a term
/// of degree d > 0 costs 3 * 2^(d-1) - 2 gates and the constant term one N
/// gate. Adjacent identical gates are cancelled afterwards.
RomCircuit rom2_synth_xor(const BoolFunc& f);

/// One-writable-bit circuit on k + 1 wires, present iff the PPRM has degree
/// at most 2. Gates are found by probing inputs of weight 0, 1 and 2.
std::optional<RomCircuit> rom1_synth(const BoolFunc& f);

/// True iff the circuit leaves ROM wires untouched at every step and maps
/// (x, a, b) to (x, a, b ^ f(x)) (or (x, b) to (x, b ^ f(x))).
bool check_rom_circuit(const RomCircuit& rc, const BoolFunc& f);

/// Gate set for 2-bit ROM search on k + 2 wires; `one_rom_control` caps
/// ROM controls at one per gate.
GateSet rom_gate_set(int rom_wires, bool one_rom_control);

/// (x, a, b) -> (x, a, b ^ f(x)) on k + 2 wires.
Permutation rom2_perm(const BoolFunc& f);

/// Every arity-k function, in truth-table order.
std::vector<BoolFunc> all_functions(int arity);

struct Census {
  std::vector<std::size_t> histogram;
  /// Functions whose search hit the time limit; not in the histogram.
  std::size_t unfinished = 0;
  bool partial() const noexcept { return unfinished != 0; }
};

/// Histogram of optimal oracle sizes over the even-support arity-3
/// functions, searched in a width-4 library.
Census table2_census(const CircuitLibrary& lib,
                     const SearchOptions& options = {}, int jobs = 1);

/// Histogram of rom2_synth_xor sizes over all arity-3 functions.
std::vector<std::size_t> table3_xor();

/// Histogram of optimal 2-bit ROM circuit sizes over all arity-k functions
/// using a library built for rom_gate_set(k, ...).
Census rom_optimal_census(const CircuitLibrary& lib,
                          const SearchOptions& options = {}, int jobs = 1);

}  // namespace revsynth
