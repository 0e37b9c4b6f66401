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

#include "revsynth/rewrite.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

std::atomic<bool> verify_rewrites{false};

Circuit checked(const Circuit& in, Circuit out, const char* what) {
  if (verify_rewrites.load(std::memory_order_relaxed) &&
      circuit_permutation(in) != circuit_permutation(out)) {
    throw std::logic_error(std::string(what) + " changed circuit semantics");
  }
  return out;
}

}  // namespace

void set_rewrite_verification(bool enabled) noexcept {
  verify_rewrites.store(enabled, std::memory_order_relaxed);
}

bool RewriteRule::holds(int width) const {
  return circuit_permutation(Circuit(width, lhs)) ==
         circuit_permutation(Circuit(width, rhs));
}

Circuit commutator(const Circuit& p, const Circuit& q) {
  if (p.width != q.width) throw InvalidInput("commutator: width mismatch");
  Circuit out(p.width);
  out.append(p);
  out.append(q);
  out.append(p.inverse());
  out.append(q.inverse());
  return out;
}

LiftedPair lift_controls(const Gate& g1, const Gate& g2) {
  if (g1.is_swap() || g2.is_swap()) {
    throw InvalidInput("lift_controls: swap gates have no controls");
  }
  const Index h = g1.control_mask(), i = g1.target_mask();
  const Index k = g2.control_mask(), j = g2.target_mask();
  const Index common = (h | k) & ~(i | j);
  return {Gate::inverter(i, h & j), Gate::inverter(j, k & i), common};
}

NotRole classify_not(int wire, const Gate& g) {
  const Index bit = Index{1} << wire;
  if (g.is_swap()) {
    throw InvalidInput("classify_not: swap gates are not handled");
  }
  if (g.control_mask() & bit) return NotRole::Control;
  if (g.target_mask() & bit) return NotRole::Target;
  return NotRole::Untouched;
}

RewriteRule not_push_rule(int wire, const Gate& g) {
  const Gate n = Gate::not_gate(wire);
  switch (classify_not(wire, g)) {
    case NotRole::Untouched:
      return {"not-untouched", {n, g}, {g, n}};
    case NotRole::Target:
      return {"not-target", {n, g}, {g, n}};
    case NotRole::Control: {
      // N(w) V_k(G) = V_{k-w}(G) V_k(G) N(w)
      const Index bit = Index{1} << wire;
      Gate reduced = Gate::inverter(g.target_mask(), g.control_mask() & ~bit);
      return {"not-control", {n, g}, {reduced, g, n}};
    }
  }
  return {};
}

Circuit push_nots_right(const Circuit& c) {
  Circuit out(c.width);
  Index pending = 0;  // wires carrying an N not yet emitted
  for (const Gate& g : c.gates) {
    const char family = g.family();
    if (family == 'S' || family == 'G') {
      throw InvalidInput("push_nots_right: non-CNT gate " + format_gate(g));
    }
    if (family == 'N') {
      pending ^= g.target_mask();
      continue;
    }
    // Move each pending N on a control wire past the block, one wire at a
    // time. Every block gate shares g's target, so an N produced on that
    // target commutes with the rest of the block.
    std::vector<Gate> block{g};
    for (Index rest = pending & g.control_mask(); rest != 0;
         rest &= rest - 1) {
      const int wire = std::countr_zero(rest);
      std::vector<Gate> next;
      for (const Gate& b : block) {
        if (classify_not(wire, b) == NotRole::Control) {
          RewriteRule rule = not_push_rule(wire, b);
          const Gate& reduced = rule.rhs.front();
          if (reduced.control_mask() == 0) pending ^= reduced.target_mask();
          else next.push_back(reduced);
        }
        next.push_back(b);
      }
      block = std::move(next);
    }
    for (const Gate& b : block) out.gates.push_back(b);
  }
  for (Index rest = pending; rest != 0; rest &= rest - 1) {
    out.gates.push_back(Gate::not_gate(std::countr_zero(rest)));
  }
  return checked(c, std::move(out), "push_nots_right");
}

Circuit cancel_adjacent(const Circuit& c) {
  Circuit out(c.width);
  for (const Gate& g : c.gates) {
    if (!out.gates.empty() && out.gates.back() == g) {
      out.gates.pop_back();
    } else {
      out.gates.push_back(g);
    }
  }
  return checked(c, std::move(out), "cancel_adjacent");
}

}  // namespace revsynth
