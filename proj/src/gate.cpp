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

#include "revsynth/gate.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "revsynth/error.hpp"

namespace revsynth {

namespace {

Index wire_bit(int wire) {
  if (wire < 0 || wire >= kMaxWidth) {
    throw InvalidInput("wire " + std::to_string(wire) + " out of range");
  }
  return Index{1} << wire;
}

}  // namespace

Gate Gate::inverter(Index target_mask, Index control_mask) {
  if (target_mask == 0) throw InvalidInput("gate has empty target mask");
  if ((target_mask & control_mask) != 0) {
    throw InvalidInput("gate target and control masks overlap");
  }
  if (((target_mask | control_mask) >> kMaxWidth) != 0) {
    throw InvalidInput("gate mask exceeds maximum width");
  }
  return Gate(GateKind::ControlledInverter, target_mask, control_mask);
}

Gate Gate::not_gate(int target) { return inverter(wire_bit(target)); }

Gate Gate::cnot(int control, int target) {
  return inverter(wire_bit(target), wire_bit(control));
}

Gate Gate::toffoli(int control1, int control2, int target) {
  if (control1 == control2) throw InvalidInput("toffoli controls coincide");
  return inverter(wire_bit(target), wire_bit(control1) | wire_bit(control2));
}

Gate Gate::swap(int wire_a, int wire_b) {
  wire_bit(wire_a);
  wire_bit(wire_b);
  if (wire_a == wire_b) throw InvalidInput("swap of a wire with itself");
  if (wire_a > wire_b) std::swap(wire_a, wire_b);
  return Gate(GateKind::Swap, static_cast<Index>(wire_a),
              static_cast<Index>(wire_b));
}

Index Gate::support() const noexcept {
  if (is_swap()) return (Index{1} << first_) | (Index{1} << second_);
  return first_ | second_;
}

Index Gate::written() const noexcept {
  if (is_swap()) return support();
  return first_;
}

bool Gate::fits(int width) const noexcept {
  return (support() >> width) == 0;
}

char Gate::family() const noexcept {
  if (is_swap()) return 'S';
  if (std::popcount(first_) != 1) return 'G';
  switch (std::popcount(second_)) {
    case 0: return 'N';
    case 1: return 'C';
    case 2: return 'T';
    default: return 'G';
  }
}

int Gate::cost() const noexcept {
  return is_swap() ? 1 : std::popcount(first_);
}

Gate Gate::with_extra_controls(Index mask) const {
  if (is_swap()) throw InvalidInput("cannot add controls to a swap gate");
  return inverter(first_, second_ | mask);
}

Permutation Gate::permutation(int width) const {
  if (!fits(width)) throw InvalidInput("gate does not fit the width");
  std::vector<Index> images(std::size_t{1} << width);
  for (Index x = 0; x < images.size(); ++x) images[x] = apply(x);
  return Permutation::from_images(std::move(images));
}

Circuit::Circuit(int w, std::vector<Gate> g) : width(w), gates(std::move(g)) {
  if (width < 1 || width > kMaxWidth) {
    throw InvalidInput("circuit width " + std::to_string(width) +
                       " out of range");
  }
  for (const Gate& gate : gates) {
    if (!gate.fits(width)) {
      throw InvalidInput("gate " + format_gate(gate) + " exceeds width " +
                         std::to_string(width));
    }
  }
}

int Circuit::gate_count() const noexcept {
  int total = 0;
  for (const Gate& g : gates) total += g.cost();
  return total;
}

void Circuit::append(const Gate& g) {
  if (!g.fits(width)) {
    throw InvalidInput("gate " + format_gate(g) + " exceeds width " +
                       std::to_string(width));
  }
  gates.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.width != width) throw InvalidInput("circuit width mismatch");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

Circuit Circuit::inverse() const {
  Circuit out = *this;
  std::reverse(out.gates.begin(), out.gates.end());
  return out;
}

Index circuit_apply(const Circuit& c, Index x) noexcept {
  for (const Gate& g : c.gates) x = g.apply(x);
  return x;
}

Permutation circuit_permutation(const Circuit& c) {
  std::vector<Index> images(std::size_t{1} << c.width);
  for (Index x = 0; x < images.size(); ++x) images[x] = circuit_apply(c, x);
  return Permutation::from_images(std::move(images));
}

GateLibrary::GateLibrary(std::uint8_t mask) : mask_(mask) {
  if (mask == 0 || mask > 15) {
    throw InvalidInput("gate library must be a nonempty subset of CNTS");
  }
}

GateLibrary GateLibrary::parse(std::string_view text) {
  std::uint8_t mask = 0;
  for (char ch : text) {
    switch (std::toupper(static_cast<unsigned char>(ch))) {
      case 'N': mask |= N; break;
      case 'C': mask |= C; break;
      case 'T': mask |= T; break;
      case 'S': mask |= S; break;
      default:
        throw InvalidInput("unknown gate family '" + std::string(1, ch) +
                           "' in library \"" + std::string(text) + "\"");
    }
  }
  return GateLibrary(mask);
}

bool GateLibrary::allows(const Gate& g) const noexcept {
  if (g.is_swap()) return has(S);
  switch (std::popcount(g.control_mask())) {
    case 0: return has(N);
    case 1: return has(C);
    case 2: return has(T);
    default: return false;
  }
}

std::string GateLibrary::name() const {
  std::string out;
  if (has(C)) out += 'C';
  if (has(N)) out += 'N';
  if (has(T)) out += 'T';
  if (has(S)) out += 'S';
  return out;
}

std::vector<Gate> enumerate_gates(GateLibrary lib, int width) {
  if (width < 1 || width > kMaxWidth) {
    throw InvalidInput("enumerate_gates: width out of range");
  }
  std::vector<Gate> gates;
  if (lib.has(GateLibrary::N)) {
    for (int t = 0; t < width; ++t) gates.push_back(Gate::not_gate(t));
  }
  if (lib.has(GateLibrary::C)) {
    for (int t = 0; t < width; ++t)
      for (int c = 0; c < width; ++c)
        if (c != t) gates.push_back(Gate::cnot(c, t));
  }
  if (lib.has(GateLibrary::T)) {
    for (int t = 0; t < width; ++t)
      for (int c1 = 0; c1 < width; ++c1)
        for (int c2 = c1 + 1; c2 < width; ++c2)
          if (c1 != t && c2 != t) gates.push_back(Gate::toffoli(c1, c2, t));
  }
  if (lib.has(GateLibrary::S)) {
    for (int a = 0; a < width; ++a)
      for (int b = a + 1; b < width; ++b) gates.push_back(Gate::swap(a, b));
  }
  return gates;
}

std::string format_gate(const Gate& g) {
  auto wires = [](Index mask) {
    std::string s;
    for (int w = 0; mask != 0; ++w, mask >>= 1) {
      if (mask & 1u) s += ' ' + std::to_string(w);
    }
    return s;
  };
  switch (g.family()) {
    case 'S':
      return "s " + std::to_string(g.wire_a()) + ' ' +
             std::to_string(g.wire_b());
    case 'N': return "n" + wires(g.target_mask());
    case 'C':
    case 'T': return std::string(1, static_cast<char>(std::tolower(g.family()))) +
                     wires(g.control_mask()) + wires(g.target_mask());
    default:
      return "g " + std::to_string(g.target_mask()) + ' ' +
             std::to_string(g.control_mask());
  }
}

std::string format_circuit(const Circuit& c) {
  std::string out = "wires " + std::to_string(c.width) + '\n';
  for (const Gate& g : c.gates) out += format_gate(g) + '\n';
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int width = -1;
  std::vector<Gate> gates;
  auto fail = [&](const std::string& why) {
    throw InvalidInput("circuit line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op)) continue;
    std::vector<long> args;
    std::string token;
    while (fields >> token) {
      long value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() ||
          value < 0) {
        fail("bad number \"" + token + "\"");
      }
      args.push_back(value);
    }
    auto expect = [&](std::size_t n) {
      if (args.size() != n) {
        fail("'" + op + "' expects " + std::to_string(n) + " arguments");
      }
    };
    auto wire = [&](long w) {
      if (width >= 0 && w >= width) {
        fail("wire " + std::to_string(w) + " out of range for " +
             std::to_string(width) + " wires");
      }
      return static_cast<int>(w);
    };
    if (op == "wires") {
      expect(1);
      if (width >= 0) fail("duplicate 'wires' header");
      if (args[0] < 1 || args[0] > kMaxWidth) fail("wire count out of range");
      width = static_cast<int>(args[0]);
      continue;
    }
    if (width < 0) fail("gate before 'wires' header");
    try {
      if (op == "n") {
        expect(1);
        gates.push_back(Gate::not_gate(wire(args[0])));
      } else if (op == "c") {
        expect(2);
        if (args[0] == args[1]) fail("control equals target");
        gates.push_back(Gate::cnot(wire(args[0]), wire(args[1])));
      } else if (op == "t") {
        expect(3);
        if (args[2] == args[0] || args[2] == args[1]) {
          fail("control equals target");
        }
        gates.push_back(
            Gate::toffoli(wire(args[0]), wire(args[1]), wire(args[2])));
      } else if (op == "s") {
        expect(2);
        gates.push_back(Gate::swap(wire(args[0]), wire(args[1])));
      } else if (op == "g") {
        expect(2);
        Gate g = Gate::inverter(static_cast<Index>(args[0]),
                                static_cast<Index>(args[1]));
        if (!g.fits(width)) fail("mask exceeds wire count");
        gates.push_back(g);
      } else {
        fail("unknown gate '" + op + "'");
      }
    } catch (const InvalidInput& e) {
      if (std::string(e.what()).rfind("circuit line", 0) == 0) throw;
      fail(e.what());
    }
  }
  if (width < 0) throw InvalidInput("circuit text lacks 'wires' header");
  return Circuit(width, std::move(gates));
}

}  // namespace revsynth
