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


// Command-line front end. Exit codes: 0 ok, 1 circuits differ (verify),
// 2 usage or bad input, 3 unsynthesizable, 4 resource limit, 5 data
// corruption, 70 internal error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>

#include "revsynth/constructive.hpp"
#include "revsynth/error.hpp"
#include "revsynth/gf2.hpp"
#include "revsynth/library.hpp"
#include "revsynth/oracle.hpp"
#include "revsynth/parallel.hpp"
#include "revsynth/rewrite.hpp"

namespace fs = std::filesystem;
using namespace revsynth;

namespace {

constexpr int kExitUnequal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 70;
constexpr const char* kCsvVersion = "v1";

int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::InvalidInput: return 2;
    case ErrorCategory::Unsynthesizable: return 3;
    case ErrorCategory::ResourceLimit: return 4;
    case ErrorCategory::DataCorruption: return 5;
  }
  return kExitInternal;
}

struct Common {
  int jobs = 1;
  double budget_mb = 0;
  double time_limit = 0;
  std::uint64_t seed = 1;

  std::size_t budget_bytes() const {
    return static_cast<std::size_t>(budget_mb * 1024.0 * 1024.0);
  }
  SearchOptions search(int max_cost) const {
    SearchOptions o;
    o.max_cost = max_cost;
    o.time_limit = time_limit;
    return o;
  }
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

struct PermInput {
  std::string cycles;
  std::string table;
  std::string file;
  bool random_even = false;
  int width = 0;

  void add(CLI::App* app) {
    auto* c = app->add_option("--cycles", cycles, "Cycle notation, e.g. \"(2,3)(6,7)\"");
    auto* t = app->add_option("--table", table, "Images in order, e.g. \"0 1 3 2\"");
    auto* f = app->add_option("--perm-file", file,
                              "File with cycle notation or a truth table");
    auto* r = app->add_flag("--random-even", random_even,
                            "Random even permutation (uses --seed)");
    app->add_option("-w,--width", width, "Wire count")->check(CLI::Range(1, kMaxWidth));
    c->excludes(t)->excludes(f)->excludes(r);
    t->excludes(f)->excludes(r);
    f->excludes(r);
  }

  Permutation read(std::uint64_t seed) const {
    std::string text;
    bool is_cycles = false;
    if (!cycles.empty()) {
      text = cycles;
      is_cycles = true;
    } else if (!table.empty()) {
      text = table;
    } else if (!file.empty()) {
      text = read_text(file);
      auto first = text.find_first_not_of(" \t\r\n");
      is_cycles = first != std::string::npos && text[first] == '(';
    } else if (random_even) {
      if (width == 0) throw InvalidInput("--random-even needs --width");
      std::mt19937_64 rng(seed);
      return random_even_permutation(width, rng);
    } else {
      throw InvalidInput("give a permutation: --cycles, --table, --perm-file or --random-even");
    }
    if (is_cycles) {
      if (width == 0) throw InvalidInput("cycle notation needs --width");
      return perm_from_cycles(parse_cycles(text), width);
    }
    Permutation p = parse_truth_table(text);
    if (width != 0 && width != p.width()) {
      throw InvalidInput("truth table has " + std::to_string(p.width()) +
                         " wires, --width says " + std::to_string(width));
    }
    return p;
  }
};

std::string library_dir() {
  const char* env = std::getenv("REVSYNTH_LIBRARY_DIR");
  return env ? env : "";
}

std::string library_file_name(const GateSet& set, int max_size) {
  std::string name = set.library.name() + "_w" + std::to_string(set.width);
  if (set.rom_mask) {
    name += "_rom" + std::to_string(std::popcount(set.rom_mask));
    if (set.max_rom_controls >= 0) name += "c" + std::to_string(set.max_rom_controls);
  }
  return name + "_m" + std::to_string(max_size) + ".rlib";
}

// Text rendering of a CSV block: aligned columns, comment lines kept.
std::string render(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      notes.push_back(line.substr(line.find_first_not_of("# ")));
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    widths.resize(std::max(widths.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
  }
  std::ostringstream out;
  if (!notes.empty()) {
    out << notes.front() << '\n';
    notes.erase(notes.begin());
  }
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out << (i ? "  " : "") << std::setw(static_cast<int>(widths[i])) << r[i];
    }
    out << '\n';
  }
  for (const auto& n : notes) out << n << '\n';
  return out.str();
}

std::string histogram_csv(const std::string& title,
                          const std::vector<std::string>& columns,
                          const std::vector<std::vector<std::size_t>>& hists,
                          const std::vector<std::string>& notes) {
  std::ostringstream out;
  out << "# revsynth " << title << ' ' << kCsvVersion << '\n';
  out << "size";
  for (const auto& c : columns) out << ',' << c;
  out << '\n';
  std::size_t rows = 0;
  for (const auto& h : hists) rows = std::max(rows, h.size());
  std::vector<std::size_t> totals(hists.size());
  for (std::size_t s = 0; s < rows; ++s) {
    out << s;
    for (std::size_t c = 0; c < hists.size(); ++c) {
      const std::size_t v = s < hists[c].size() ? hists[c][s] : 0;
      totals[c] += v;
      out << ',' << v;
    }
    out << '\n';
  }
  out << "total";
  for (std::size_t t : totals) out << ',' << t;
  out << '\n';
  for (const auto& n : notes) out << "# " << n << '\n';
  return out.str();
}

void emit_table(const std::string& csv, const std::string& format,
                const std::string& output) {
  write_text(output, format == "text" ? render(csv) : csv);
}

void require_equal(const Permutation& got, const Permutation& want) {
  if (got != want) {
    throw std::logic_error("synthesized circuit failed re-simulation");
  }
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
  PermInput perm;
  std::string method = "tctn";
  bool ancilla = false;
  std::string output;
};

int run_synth(const SynthArgs& a, const Common& common) {
  const Permutation p = a.perm.read(common.seed);
  const int n = p.width();
  std::ostream& log = std::cerr;
  std::string text;
  std::string method = a.method;
  if (a.ancilla) method = "ancilla";
  if (method == "tctn") {
    StagedCircuit s = synth_tctn(p);
    require_equal(circuit_permutation(s.flatten()), p);
    for (const Stage& st : s.stages) {
      log << "stage " << st.label << ": " << st.circuit.size() << " gates\n";
    }
    log << "C gates " << s.count('C') << " (bound " << n * n << ")\n";
    log << "N gates " << s.count('N') << " (bound " << n << ")\n";
    if (n > 3) {
      log << "T gates " << s.count('T') << " (bound "
          << 3 * ((1 << n) + n + 1) * (3 * n - 7) << ")\n";
    }
    text = format_staged(s);
  } else if (method == "ancilla") {
    StagedCircuit s = synth_with_ancilla(p);
    require_equal(circuit_permutation(s.flatten()), lift_with_ancilla(p));
    log << "ancilla wire " << n << ", " << s.flatten().size() << " gates on "
        << n + 1 << " wires\n";
    text = format_staged(s);
  } else if (method == "linear") {
    Circuit c = synth_linear(matrix_of_perm(p));
    require_equal(circuit_permutation(c), p);
    log << "C gates " << c.size() << " (bound " << n * n << ")\n";
    text = format_circuit(c);
  } else {
    Circuit c = synth_n(p);
    require_equal(circuit_permutation(c), p);
    log << "N gates " << c.size() << " (bound " << n << ")\n";
    text = format_circuit(c);
  }
  log << "verified: yes\n";
  write_text(a.output, text);
  return 0;
}

// ---- libraries ------------------------------------------------------------

struct SetArgs {
  std::string gates = "CNT";
  int width = 3;
  int rom = 0;
  bool one_rom_control = false;

  void add(CLI::App* app, bool with_width = true) {
    app->add_option("-g,--gates", gates, "Gate library, a subset of CNTS");
    if (with_width) {
      app->add_option("-w,--width", width, "Wire count")->check(CLI::Range(1, kLibraryMaxWidth));
    }
    app->add_option("--rom", rom, "Read-only wires 0..k-1 (never targeted)");
    app->add_flag("--one-rom-control", one_rom_control,
                  "At most one control on a ROM wire per gate");
  }
  GateSet make(int w) const {
    if (rom < 0 || rom >= w) throw InvalidInput("--rom must leave a writable wire");
    return GateSet(GateLibrary::parse(gates), w, (Index{1} << rom) - 1,
                   one_rom_control ? 1 : -1);
  }
};

struct LibraryArgs {
  SetArgs set;
  int max_size = -1;
  std::string path;
  std::string output;
};

int default_max_size(int width) { return width <= 3 ? 64 : width == 4 ? 4 : 3; }

CircuitLibrary obtain_library(const LibraryArgs& a, int width, const Common& common) {
  if (!a.path.empty()) {
    CircuitLibrary lib = load_library(a.path);
    if (lib.width() != width) {
      throw InvalidInput("library " + a.path + " is for " +
                         std::to_string(lib.width()) + " wires, permutation has " +
                         std::to_string(width));
    }
    return lib;
  }
  const GateSet set = a.set.make(width);
  const int m = a.max_size >= 0 ? a.max_size : default_max_size(width);
  const std::string dir = library_dir();
  if (!dir.empty()) {
    const fs::path file = fs::path(dir) / library_file_name(set, m);
    if (fs::exists(file)) {
      std::cerr << "using library " << file.string() << '\n';
      return load_library(file.string());
    }
  }
  CircuitLibrary lib = build_library(set, m, common.budget_bytes());
  if (lib.partial()) {
    std::cerr << "partial: memory budget stopped the library at size "
              << lib.max_size() << '\n';
  }
  return lib;
}

struct OptimalArgs {
  PermInput perm;
  LibraryArgs lib;
  int max_cost = 64;
  std::string output;
};

int run_optimal(const OptimalArgs& a, const Common& common) {
  const Permutation p = a.perm.read(common.seed);
  CircuitLibrary lib = obtain_library(a.lib, p.width(), common);
  SearchResult r = find_optimal(p, lib, common.search(a.max_cost));
  require_equal(circuit_permutation(r.circuit), p);
  std::cerr << "cost " << r.cost << ", library size " << lib.max_size()
            << ", nodes " << r.nodes_expanded << ", library references "
            << r.library_refs << ", " << std::fixed << std::setprecision(3)
            << r.wall_time << " s\nverified: yes\n";
  write_text(a.output, format_circuit(r.circuit));
  return 0;
}

int run_library_build(const LibraryArgs& a, const Common& common) {
  const GateSet set = a.set.make(a.set.width);
  const int m = a.max_size >= 0 ? a.max_size : default_max_size(a.set.width);
  CircuitLibrary lib = build_library(set, m, common.budget_bytes());
  std::string out = a.output;
  if (out.empty()) {
    const std::string dir = library_dir();
    out = (fs::path(dir.empty() ? "." : dir) / library_file_name(set, m)).string();
  }
  save_library(lib, out);
  std::cout << "wrote " << out << ": " << lib.total() << " permutations, sizes 0.."
            << lib.max_size() << (lib.complete() ? ", complete closure" : "") << '\n';
  if (lib.partial()) {
    std::cout << "partial: memory budget stopped construction at size "
              << lib.max_size() << " of " << m << '\n';
    return exit_code(ErrorCategory::ResourceLimit);
  }
  return 0;
}

int run_library_info(const std::string& path) {
  CircuitLibrary lib = load_library(path);
  std::cout << "gate set: " << lib.gate_set().describe() << '\n'
            << "gates: " << lib.gates().size() << '\n'
            << "stored sizes: 0.." << lib.max_size() << " (requested "
            << lib.requested_size() << ")\n"
            << "complete closure: " << (lib.complete() ? "yes" : "no") << '\n'
            << "partial: " << (lib.partial() ? "yes" : "no") << '\n'
            << "permutations: " << lib.total() << '\n';
  auto h = lib.histogram();
  for (std::size_t s = 0; s < h.size(); ++s) std::cout << "  size " << s << ": " << h[s] << '\n';
  return 0;
}

int run_library_verify(const std::string& path) {
  CircuitLibrary lib = load_library(path);
  std::cout << "ok: " << lib.total() << " permutations verified\n";
  return 0;
}

// ---- census ---------------------------------------------------------------

struct CensusArgs {
  std::string format = "csv";
  std::string output;
  std::string library;
  std::vector<std::string> gates;
  int max_size = -1;
  std::string variant = "both";
};

int run_table1(const CensusArgs& a, const Common& common) {
  const std::vector<std::string> names{"N", "C", "T", "NC", "CT", "NT", "CNT", "CNTS"};
  std::vector<std::vector<std::size_t>> hists(names.size());
  std::vector<std::string> notes;
  std::vector<int> partial_at(names.size(), -1);
  parallel_for(names.size(), common.jobs, [&](std::size_t i) {
    CircuitLibrary lib = build_library(GateSet(GateLibrary::parse(names[i]), 3), 64,
                                       common.budget_bytes());
    hists[i] = lib.histogram();
    if (lib.partial()) partial_at[i] = lib.max_size();
  });
  bool partial = false;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (partial_at[i] >= 0) {
      partial = true;
      notes.push_back("partial: " + names[i] + " stopped by the memory budget after size " +
                      std::to_string(partial_at[i]));
    }
  }
  emit_table(histogram_csv("table1", names, hists, notes), a.format, a.output);
  return partial ? exit_code(ErrorCategory::ResourceLimit) : 0;
}

int run_table2(const CensusArgs& a, const Common& common) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> hists;
  std::vector<std::string> notes;
  bool partial = false;
  auto add = [&](const std::string& label, const CircuitLibrary& lib) {
    Census c = table2_census(lib, common.search(64), common.jobs);
    names.push_back(label);
    hists.push_back(c.histogram);
    if (c.partial()) {
      partial = true;
      notes.push_back("partial: " + label + " left " + std::to_string(c.unfinished) +
                      " functions unfinished at the time limit");
    }
  };
  if (!a.library.empty()) {
    CircuitLibrary lib = load_library(a.library);
    add(lib.gate_set().library.name(), lib);
  } else {
    std::vector<std::string> gates = a.gates;
    if (gates.empty()) gates = {"CNT", "CNTS"};
    const int m = a.max_size >= 0 ? a.max_size : 4;
    for (const auto& g : gates) {
      LibraryArgs la;
      la.set.gates = g;
      la.max_size = m;
      add(GateLibrary::parse(g).name(), obtain_library(la, 4, common));
    }
  }
  emit_table(histogram_csv("table2", names, hists, notes), a.format, a.output);
  return partial ? exit_code(ErrorCategory::ResourceLimit) : 0;
}

int run_table3_xor(const CensusArgs& a) {
  emit_table(histogram_csv("table3-xor", {"XOR"}, {table3_xor()}, {}), a.format, a.output);
  return 0;
}

int run_table3_opt(const CensusArgs& a, const Common& common) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> hists;
  std::vector<std::string> notes;
  bool partial = false;
  auto run = [&](const std::string& label, bool one, int default_m) {
    LibraryArgs la;
    la.set.gates = "CNT";
    la.set.rom = 3;
    la.set.one_rom_control = one;
    la.max_size = a.max_size >= 0 ? a.max_size : default_m;
    CircuitLibrary lib = obtain_library(la, 5, common);
    std::cerr << label << ": library of sizes 0.." << lib.max_size() << ", "
              << lib.total() << " permutations, "
              << (lib.memory_bytes() >> 20) << " MB\n";
    if (lib.partial()) {
      partial = true;
      notes.push_back("partial: " + label + " library stopped at size " +
                      std::to_string(lib.max_size()));
    }
    Census c = rom_optimal_census(lib, common.search(64), common.jobs);
    names.push_back(label);
    hists.push_back(c.histogram);
    if (c.partial()) {
      partial = true;
      notes.push_back("partial: " + label + " left " + std::to_string(c.unfinished) +
                      " functions unfinished at the time limit");
    }
  };
  if (a.variant == "opt-t" || a.variant == "both") run("OPT T", true, 7);
  if (a.variant == "opt" || a.variant == "both") run("OPT", false, 6);
  emit_table(histogram_csv("table3-opt", names, hists, notes), a.format, a.output);
  return partial ? exit_code(ErrorCategory::ResourceLimit) : 0;
}

// ---- circuits -------------------------------------------------------------

int run_sim(const std::string& path, std::optional<Index> input) {
  Circuit c = parse_circuit(read_text(path));
  if (input) {
    if (*input >= (Index{1} << c.width)) throw InvalidInput("input exceeds the wire count");
    std::cout << circuit_apply(c, *input) << '\n';
  } else {
    std::cout << format_truth_table(circuit_permutation(c)) << '\n';
  }
  return 0;
}

int run_verify(const std::string& a, const std::string& b) {
  Circuit ca = parse_circuit(read_text(a));
  Circuit cb = parse_circuit(read_text(b));
  if (ca.width != cb.width) {
    std::cout << "unequal: " << ca.width << " wires vs " << cb.width << " wires\n";
    return kExitUnequal;
  }
  for (Index x = 0; x < (Index{1} << ca.width); ++x) {
    const Index ya = circuit_apply(ca, x), yb = circuit_apply(cb, x);
    if (ya != yb) {
      std::cout << "unequal: input " << x << " maps to " << ya << " and " << yb << '\n';
      return kExitUnequal;
    }
  }
  std::cout << "equal\n";
  return 0;
}

int run_rewrite(const std::string& mode, const std::string& path,
                const std::string& output) {
  Circuit c = parse_circuit(read_text(path));
  Circuit out = mode == "push-nots" ? push_nots_right(c) : cancel_adjacent(c);
  require_equal(circuit_permutation(out), circuit_permutation(c));
  std::cerr << c.size() << " gates in, " << out.size() << " gates out\nverified: yes\n";
  write_text(output, format_circuit(out));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible circuit synthesis: constructive, optimal and ROM-based"};
  app.set_version_flag("--version", "revsynth 1.0.0");
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("-j,--jobs", common.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget-mb", common.budget_mb, "Library memory budget in MB (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--time-limit", common.time_limit, "Seconds per search (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", common.seed, "Seed for --random-even");

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Constructive synthesis");
  synth.perm.add(synth_cmd);
  synth_cmd->add_option("-m,--method", synth.method, "tctn, linear, n-only or ancilla")
      ->check(CLI::IsMember({"tctn", "linear", "n-only", "ancilla"}));
  synth_cmd->add_flag("--ancilla", synth.ancilla, "Use one extra wire (odd permutations)");
  synth_cmd->add_option("-o,--output", synth.output, "Circuit file (default stdout)");

  OptimalArgs optimal;
  auto* optimal_cmd = app.add_subcommand("optimal", "Minimal-gate circuit by library search");
  optimal.perm.add(optimal_cmd);
  optimal_cmd->add_option("-L,--library", optimal.lib.path, "Library file");
  optimal.lib.set.add(optimal_cmd, false);
  optimal_cmd->add_option("-M,--max-size", optimal.lib.max_size,
                          "Library size when building in memory");
  optimal_cmd->add_option("--max-cost", optimal.max_cost, "Give up above this cost");
  optimal_cmd->add_option("-o,--output", optimal.output, "Circuit file (default stdout)");

  auto* library_cmd = app.add_subcommand("library", "Build or inspect circuit libraries");
  library_cmd->require_subcommand(1);
  library_cmd->fallthrough();
  LibraryArgs build;
  auto* build_cmd = library_cmd->add_subcommand("build", "Build and save a library");
  build.set.add(build_cmd);
  build_cmd->add_option("-M,--max-size", build.max_size, "Largest circuit size stored");
  build_cmd->add_option("-o,--output", build.output,
                        "File (default: $REVSYNTH_LIBRARY_DIR or . with a derived name)");
  std::string info_path, verify_path;
  auto* info_cmd = library_cmd->add_subcommand("info", "Describe a library file");
  info_cmd->add_option("path", info_path)->required();
  auto* lverify_cmd = library_cmd->add_subcommand("verify", "Validate a library file");
  lverify_cmd->add_option("path", verify_path)->required();

  auto* census_cmd = app.add_subcommand("census", "Reproduce the size censuses");
  census_cmd->require_subcommand(1);
  census_cmd->fallthrough();
  CensusArgs census;
  auto census_common = [&](CLI::App* c) {
    c->add_option("--format", census.format, "csv or text")
        ->check(CLI::IsMember({"csv", "text"}));
    c->add_option("-o,--output", census.output, "Output file (default stdout)");
  };
  auto* t1 = census_cmd->add_subcommand("table1", "Optimal sizes on 3 wires, 8 gate libraries");
  census_common(t1);
  auto* t2 = census_cmd->add_subcommand("table2", "Optimal 3+1 oracle sizes");
  census_common(t2);
  t2->add_option("-L,--library", census.library, "Width-4 library file");
  t2->add_option("-g,--gates", census.gates, "Gate libraries (default CNT and CNTS)");
  t2->add_option("-M,--max-size", census.max_size, "Library size (default 4)");
  auto* t3x = census_cmd->add_subcommand("table3-xor", "XOR-decomposition 3+2 ROM sizes");
  census_common(t3x);
  auto* t3o = census_cmd->add_subcommand("table3-opt", "Optimal 3+2 ROM sizes (long)");
  census_common(t3o);
  t3o->add_option("--variant", census.variant, "opt, opt-t or both")
      ->check(CLI::IsMember({"opt", "opt-t", "both"}));
  t3o->add_option("-M,--max-size", census.max_size,
                  "Library size (default 6 for OPT, 7 for OPT T)");

  std::string sim_path;
  std::optional<Index> sim_input;
  auto* sim_cmd = app.add_subcommand("sim", "Simulate a circuit file");
  sim_cmd->add_option("circuit", sim_path)->required();
  sim_cmd->add_option("--input", sim_input, "Single input index");

  std::string verify_a, verify_b;
  auto* verify_cmd = app.add_subcommand("verify", "Compare two circuits by simulation");
  verify_cmd->add_option("first", verify_a)->required();
  verify_cmd->add_option("second", verify_b)->required();

  std::string rewrite_mode, rewrite_path, rewrite_out;
  auto* rewrite_cmd = app.add_subcommand("rewrite", "Apply a rewrite pass");
  rewrite_cmd->add_option("pass", rewrite_mode, "push-nots or cancel")
      ->required()
      ->check(CLI::IsMember({"push-nots", "cancel"}));
  rewrite_cmd->add_option("circuit", rewrite_path)->required();
  rewrite_cmd->add_option("-o,--output", rewrite_out, "Circuit file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*synth_cmd) return run_synth(synth, common);
    if (*optimal_cmd) return run_optimal(optimal, common);
    if (*build_cmd) return run_library_build(build, common);
    if (*info_cmd) return run_library_info(info_path);
    if (*lverify_cmd) return run_library_verify(verify_path);
    if (*t1) return run_table1(census, common);
    if (*t2) return run_table2(census, common);
    if (*t3x) return run_table3_xor(census);
    if (*t3o) return run_table3_opt(census, common);
    if (*sim_cmd) return run_sim(sim_path, sim_input);
    if (*verify_cmd) return run_verify(verify_a, verify_b);
    if (*rewrite_cmd) return run_rewrite(rewrite_mode, rewrite_path, rewrite_out);
  } catch (const Error& e) {
    std::cerr << "revsynth: error[" << category_name(e.category()) << "]: " << e.what()
              << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    std::cerr << "revsynth: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
