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


#include "revsynth/library.hpp"

#include <zlib.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

namespace revsynth {

namespace {

constexpr char kMagic[8] = {'R', 'S', 'Y', 'N', 'L', 'I', 'B', '1'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint64_t kNone = ~std::uint64_t{0};

void check_width(int width) {
  if (width < 1 || width > kLibraryMaxWidth) {
    throw InvalidInput("circuit libraries support 1.." +
                       std::to_string(kLibraryMaxWidth) + " wires, got " +
                       std::to_string(width));
  }
}

// Image tables, one 2^n row per gate.
std::vector<std::uint8_t> gate_tables(const std::vector<Gate>& gates,
                                      int width) {
  const std::size_t size = std::size_t{1} << width;
  std::vector<std::uint8_t> t(gates.size() * size);
  for (std::size_t g = 0; g < gates.size(); ++g) {
    for (Index x = 0; x < size; ++x) {
      t[g * size + x] = static_cast<std::uint8_t>(gates[g].apply(x));
    }
  }
  return t;
}

std::uint64_t factorial_bound(int width) {
  // (2^n)! for n <= 3 fits; wider closures are never complete by count.
  if (width > 3) return kNone;
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= (std::uint64_t{1} << width); ++i) f *= i;
  return f;
}

class Writer {
 public:
  void u8(std::uint8_t v) { buf.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> buf;
};

class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size) : p_(data), end_(data + size) {}
  std::uint8_t u8() {
    need(1);
    return *p_++;
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{*p_++} << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{*p_++} << (8 * i);
    return v;
  }
  const std::uint8_t* bytes(std::size_t n) {
    need(n);
    const std::uint8_t* out = p_;
    p_ += n;
    return out;
  }
  std::size_t left() const { return static_cast<std::size_t>(end_ - p_); }

 private:
  void need(std::size_t n) const {
    if (left() < n) throw DataCorruption("library file is truncated");
  }
  const std::uint8_t* p_;
  const std::uint8_t* end_;
};

std::uint32_t crc_of(const std::uint8_t* data, std::size_t size) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed large buffers in chunks.
  while (size > 0) {
    uInt chunk = static_cast<uInt>(std::min<std::size_t>(size, 1u << 30));
    crc = crc32(crc, data, chunk);
    data += chunk;
    size -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace

GateSet::GateSet(GateLibrary lib, int w, Index rom, int cap)
    : library(lib), width(w), rom_mask(rom), max_rom_controls(cap) {
  if (w < 1 || w > kMaxWidth) throw InvalidInput("gate set width out of range");
  if ((rom >> w) != 0) throw InvalidInput("ROM mask exceeds the width");
  if (rom == (Index{1} << w) - 1) {
    throw InvalidInput("a ROM restriction needs at least one writable wire");
  }
}

std::vector<Gate> GateSet::gates() const {
  std::vector<Gate> out;
  for (const Gate& g : enumerate_gates(library, width)) {
    if (g.written() & rom_mask) continue;
    if (max_rom_controls >= 0 && !g.is_swap() &&
        std::popcount(g.control_mask() & rom_mask) > max_rom_controls) {
      continue;
    }
    out.push_back(g);
  }
  return out;
}

std::string GateSet::describe() const {
  std::string out = library.name() + " on " + std::to_string(width) + " wires";
  if (rom_mask != 0) {
    out += ", " + std::to_string(std::popcount(rom_mask)) + " ROM";
    if (max_rom_controls >= 0) {
      out += ", at most " + std::to_string(max_rom_controls) +
             " ROM control(s) per gate";
    }
  }
  return out;
}

PermKey PermKey::pack(std::span<const Index> images, int width) {
  PermKey k;
  std::size_t pos = 0;
  for (Index v : images) {
    const std::size_t w = pos >> 6, off = pos & 63;
    k.words[w] |= std::uint64_t{v} << off;
    if (off + width > 64) k.words[w + 1] |= std::uint64_t{v} >> (64 - off);
    pos += static_cast<std::size_t>(width);
  }
  return k;
}

PermKey PermKey::of(const Permutation& p) {
  check_width(p.width());
  return pack(p.images(), p.width());
}

void PermKey::unpack(int width, Index* images) const {
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::size_t pos = 0;
  for (Index x = 0; x < (Index{1} << width); ++x) {
    const std::size_t w = pos >> 6, off = pos & 63;
    std::uint64_t v = words[w] >> off;
    if (off + width > 64) v |= words[w + 1] << (64 - off);
    images[x] = static_cast<Index>(v & mask);
    pos += static_cast<std::size_t>(width);
  }
}

std::size_t CircuitLibrary::bucket_size(int s) const {
  if (s < 0 || s > max_size()) return 0;
  return buckets_[s].keys.size();
}

std::vector<std::size_t> CircuitLibrary::histogram() const {
  std::vector<std::size_t> h;
  for (const Bucket& b : buckets_) h.push_back(b.keys.size());
  return h;
}

int CircuitLibrary::cost_of(const PermKey& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : static_cast<int>(it->second >> 32);
}

std::optional<LibraryEntry> CircuitLibrary::lookup(const Permutation& p) const {
  if (p.width() != width()) {
    throw InvalidInput("permutation width does not match the library");
  }
  auto it = index_.find(PermKey::of(p));
  if (it == index_.end()) return std::nullopt;
  const int s = static_cast<int>(it->second >> 32);
  const std::size_t i = it->second & 0xffffffffu;
  return LibraryEntry{s, bucket_circuit(s, i)};
}

std::span<const PermKey> CircuitLibrary::bucket_keys(int s) const {
  return buckets_.at(s).keys;
}

std::span<const std::uint8_t> CircuitLibrary::bucket_gates(
    int s, std::size_t i) const {
  const Bucket& b = buckets_.at(s);
  return std::span<const std::uint8_t>(b.gates).subspan(
      i * static_cast<std::size_t>(s), static_cast<std::size_t>(s));
}

Circuit CircuitLibrary::bucket_circuit(int s, std::size_t i) const {
  Circuit c(width());
  for (std::uint8_t g : bucket_gates(s, i)) c.gates.push_back(gates_[g]);
  return c;
}

std::size_t CircuitLibrary::memory_bytes() const {
  std::size_t bytes =
      index_.capacity() * (sizeof(std::pair<PermKey, std::uint64_t>) + 1);
  for (const Bucket& b : buckets_) {
    bytes += b.keys.capacity() * sizeof(PermKey) + b.gates.capacity();
  }
  return bytes;
}

CircuitLibrary build_library(const GateSet& set, int max_size,
                             std::size_t budget_bytes) {
  check_width(set.width);
  if (max_size < 0) throw InvalidInput("library size must be >= 0");
  CircuitLibrary lib;
  lib.set_ = set;
  lib.gates_ = set.gates();
  lib.requested_ = max_size;
  if (lib.gates_.size() > 255) throw InvalidInput("too many gates in the set");
  const int n = set.width;
  const std::size_t size = std::size_t{1} << n;
  const std::vector<std::uint8_t> table = gate_tables(lib.gates_, n);

  std::vector<Index> id(size);
  std::iota(id.begin(), id.end(), Index{0});
  CircuitLibrary::Bucket zero;
  zero.keys.push_back(PermKey::pack(id, n));
  lib.buckets_.push_back(std::move(zero));
  lib.index_.emplace(lib.buckets_[0].keys[0], 0);

  struct Fresh {
    PermKey key;
    std::uint32_t parent;
    std::uint8_t gate;
  };
  std::vector<Index> cur(size), next(size);
  for (int s = 0; s < max_size; ++s) {
    const CircuitLibrary::Bucket& prev = lib.buckets_[s];
    std::vector<Fresh> fresh;
    bool over = false;
    for (std::size_t i = 0; i < prev.keys.size() && !over; ++i) {
      prev.keys[i].unpack(n, cur.data());
      for (std::size_t g = 0; g < lib.gates_.size(); ++g) {
        const std::uint8_t* row = &table[g * size];
        for (std::size_t x = 0; x < size; ++x) next[x] = row[cur[x]];
        PermKey key = PermKey::pack(next, n);
        if (lib.index_.try_emplace(key, kNone).second) {
          fresh.push_back({key, static_cast<std::uint32_t>(i),
                           static_cast<std::uint8_t>(g)});
          if (budget_bytes != 0 && (fresh.size() & 4095) == 0) {
            const std::size_t projected =
                lib.memory_bytes() + fresh.capacity() * sizeof(Fresh) +
                fresh.size() * (sizeof(PermKey) + s + 1);
            if (projected > budget_bytes) {
              over = true;
              break;
            }
          }
        }
      }
    }
    if (over) {
      for (const Fresh& f : fresh) lib.index_.erase(f.key);
      lib.partial_ = true;
      break;
    }
    if (fresh.empty()) {
      lib.complete_ = true;
      break;
    }
    std::sort(fresh.begin(), fresh.end(),
              [](const Fresh& a, const Fresh& b) { return a.key < b.key; });
    CircuitLibrary::Bucket bucket;
    bucket.keys.reserve(fresh.size());
    bucket.gates.reserve(fresh.size() * (s + 1));
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      const Fresh& f = fresh[i];
      bucket.keys.push_back(f.key);
      auto prefix = lib.bucket_gates(s, f.parent);
      bucket.gates.insert(bucket.gates.end(), prefix.begin(), prefix.end());
      bucket.gates.push_back(f.gate);
      lib.index_[f.key] = (std::uint64_t(s + 1) << 32) | i;
    }
    lib.buckets_.push_back(std::move(bucket));
  }
  if (!lib.complete_ && lib.index_.size() == factorial_bound(n)) {
    lib.complete_ = true;
  }
  return lib;
}

class LibrarySearch {
 public:
  LibrarySearch(const CircuitLibrary& lib, const SearchOptions& opt)
      : lib_(lib),
        opt_(opt),
        n_(lib.width()),
        size_(std::size_t{1} << n_),
        m_(lib.max_size()),
        start_(std::chrono::steady_clock::now()) {
    const auto keys = lib.bucket_keys(m_);
    inverse_.resize(keys.size() * size_);
    std::vector<Index> img(size_);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      keys[i].unpack(n_, img.data());
      for (std::size_t x = 0; x < size_; ++x) {
        inverse_[i * size_ + img[x]] = static_cast<std::uint8_t>(x);
      }
    }
  }

  // Fills `out` with gate indices of a circuit of cost at most `depth`.
  bool solve(const Index* p, int depth, std::vector<std::uint8_t>& out) {
    if (depth <= m_) {
      ++refs_;
      tick();
      auto it = lib_.index_.find(PermKey::pack({p, size_}, n_));
      if (it == lib_.index_.end()) return false;
      const int s = static_cast<int>(it->second >> 32);
      if (s > depth) return false;
      auto g = lib_.bucket_gates(s, it->second & 0xffffffffu);
      out.assign(g.begin(), g.end());
      return true;
    }
    ++nodes_;
    const std::size_t count = lib_.bucket_size(m_);
    std::vector<Index> q(size_);
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint8_t* inv = &inverse_[i * size_];
      for (std::size_t x = 0; x < size_; ++x) q[x] = inv[p[x]];
      if (solve(q.data(), depth - m_, out)) {
        auto g = lib_.bucket_gates(m_, i);
        out.insert(out.end(), g.begin(), g.end());
        return true;
      }
    }
    return false;
  }

  std::uint64_t refs() const { return refs_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  void tick() {
    if (opt_.time_limit > 0 && (refs_ & 0xffff) == 0 &&
        elapsed() > opt_.time_limit) {
      std::ostringstream msg;
      msg << "search time limit of " << opt_.time_limit << " s exceeded";
      throw ResourceLimit(msg.str());
    }
  }

  const CircuitLibrary& lib_;
  SearchOptions opt_;
  int n_;
  std::size_t size_;
  int m_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::uint8_t> inverse_;
  std::uint64_t refs_ = 0;
  std::uint64_t nodes_ = 0;
};

SearchResult find_optimal(const Permutation& p, const CircuitLibrary& lib,
                          const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (p.width() != lib.width()) {
    throw InvalidInput("permutation has " + std::to_string(p.width()) +
                       " wires, library has " + std::to_string(lib.width()));
  }
  auto finish = [&](SearchResult r) {
    r.wall_time = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return r;
  };
  if (auto hit = lib.lookup(p)) {
    SearchResult r;
    r.cost = hit->cost;
    r.circuit = std::move(hit->circuit);
    r.library_refs = 1;
    return finish(std::move(r));
  }
  const Index rom = lib.gate_set().rom_mask;
  for (Index x = 0; x < p.size(); ++x) {
    if (((p(x) ^ x) & rom) != 0) {
      throw Unreachable("permutation changes a ROM wire");
    }
  }
  bool all_even = true;
  for (const Gate& g : lib.gates()) {
    all_even = all_even && parity(g.permutation(lib.width())) == Parity::Even;
  }
  if (all_even && parity(p) == Parity::Odd) {
    throw Unreachable("odd permutation; every gate in the set is even");
  }
  if (lib.complete()) {
    throw Unreachable("permutation is outside the complete library closure");
  }
  if (lib.max_size() == 0) {
    throw Unreachable("library holds only the identity");
  }
  LibrarySearch search(lib, options);
  std::vector<Index> img(p.images().begin(), p.images().end());
  std::vector<std::uint8_t> out;
  for (int j = lib.max_size() + 1; j <= options.max_cost; ++j) {
    if (search.solve(img.data(), j, out)) {
      SearchResult r;
      r.circuit = Circuit(lib.width());
      for (std::uint8_t g : out) r.circuit.gates.push_back(lib.gates()[g]);
      r.cost = static_cast<int>(r.circuit.size());
      r.nodes_expanded = search.nodes();
      r.library_refs = search.refs() + 1;
      return finish(std::move(r));
    }
  }
  throw Unreachable("no circuit with at most " +
                    std::to_string(options.max_cost) + " gates");
}

std::vector<std::size_t> size_distribution(const GateSet& set,
                                           std::size_t budget_bytes) {
  CircuitLibrary lib = build_library(set, 1 << 16, budget_bytes);
  if (lib.partial()) {
    throw ResourceLimit("memory budget reached at size " +
                        std::to_string(lib.max_size()) +
                        " before the closure was complete");
  }
  return lib.histogram();
}

void save_library(const CircuitLibrary& lib, const std::string& path) {
  const int n = lib.width();
  const std::size_t size = std::size_t{1} << n;
  Writer w;
  w.buf.insert(w.buf.end(), std::begin(kMagic), std::end(kMagic));
  w.u32(kVersion);
  w.u8(static_cast<std::uint8_t>(n));
  w.u8(lib.set_.library.mask());
  w.u8(lib.set_.max_rom_controls < 0
           ? 255
           : static_cast<std::uint8_t>(lib.set_.max_rom_controls));
  w.u8(static_cast<std::uint8_t>((lib.partial_ ? 1 : 0) |
                                 (lib.complete_ ? 2 : 0)));
  w.u32(lib.set_.rom_mask);
  w.u32(static_cast<std::uint32_t>(lib.requested_));
  w.u32(static_cast<std::uint32_t>(lib.max_size()));
  w.u32(static_cast<std::uint32_t>(lib.gates_.size()));
  for (const auto& b : lib.buckets_) w.u64(b.keys.size());
  std::vector<Index> img(size);
  for (std::size_t s = 0; s < lib.buckets_.size(); ++s) {
    const auto& b = lib.buckets_[s];
    for (std::size_t i = 0; i < b.keys.size(); ++i) {
      b.keys[i].unpack(n, img.data());
      for (Index v : img) w.u8(static_cast<std::uint8_t>(v));
      auto g = lib.bucket_gates(static_cast<int>(s), i);
      w.buf.insert(w.buf.end(), g.begin(), g.end());
    }
  }
  w.u32(crc_of(w.buf.data() + sizeof(kMagic), w.buf.size() - sizeof(kMagic)));
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(w.buf.data()),
            static_cast<std::streamsize>(w.buf.size()));
  if (!out) throw InvalidInput("failed writing " + path);
}

CircuitLibrary load_library(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open library file " + path);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (data.size() < sizeof(kMagic) + 4 ||
      std::memcmp(data.data(), kMagic, sizeof(kMagic)) != 0) {
    throw DataCorruption(path + " is not a circuit library file");
  }
  const std::size_t body = data.size() - 4;
  Reader tail(data.data() + body, 4);
  if (tail.u32() != crc_of(data.data() + sizeof(kMagic), body - sizeof(kMagic))) {
    throw DataCorruption(path + ": checksum mismatch");
  }
  Reader r(data.data() + sizeof(kMagic), body - sizeof(kMagic));
  const std::uint32_t version = r.u32();
  if (version != kVersion) {
    throw DataCorruption(path + ": unsupported format version " +
                         std::to_string(version));
  }
  const int n = r.u8();
  const std::uint8_t mask = r.u8();
  const std::uint8_t cap = r.u8();
  const std::uint8_t flags = r.u8();
  const Index rom = r.u32();
  const std::uint32_t requested = r.u32();
  const std::uint32_t m = r.u32();
  const std::uint32_t gate_count = r.u32();
  if (n < 1 || n > kLibraryMaxWidth || mask == 0 || mask > 15) {
    throw DataCorruption(path + ": bad header");
  }
  CircuitLibrary lib;
  try {
    lib.set_ = GateSet(GateLibrary(mask), n, rom, cap == 255 ? -1 : cap);
  } catch (const InvalidInput& e) {
    throw DataCorruption(path + ": bad gate set in header: " + e.what());
  }
  lib.gates_ = lib.set_.gates();
  if (lib.gates_.size() != gate_count) {
    throw DataCorruption(path + ": gate count does not match the gate set");
  }
  lib.requested_ = static_cast<int>(requested);
  lib.partial_ = flags & 1;
  lib.complete_ = flags & 2;
  const std::size_t size = std::size_t{1} << n;
  if (m > 255 || static_cast<std::size_t>(m + 1) * 8 > r.left()) {
    throw DataCorruption(path + ": bad bucket count");
  }
  std::vector<std::uint64_t> counts(m + 1);
  std::uint64_t need = 0;
  for (std::uint32_t s = 0; s <= m; ++s) {
    counts[s] = r.u64();
    need += counts[s] * (size + s);
    if (need > r.left()) throw DataCorruption(path + ": library file is truncated");
  }
  if (need != r.left()) throw DataCorruption(path + ": trailing bytes");
  if (counts[0] != 1) throw DataCorruption(path + ": bucket 0 must hold only the identity");

  std::vector<Index> img(size), sim(size);
  lib.buckets_.resize(m + 1);
  for (std::uint32_t s = 0; s <= m; ++s) {
    auto& b = lib.buckets_[s];
    b.keys.reserve(counts[s]);
    b.gates.reserve(counts[s] * s);
    for (std::uint64_t i = 0; i < counts[s]; ++i) {
      const std::uint8_t* raw = r.bytes(size);
      std::vector<bool> hit(size);
      for (std::size_t x = 0; x < size; ++x) {
        if (raw[x] >= size || hit[raw[x]]) {
          throw DataCorruption(path + ": record is not a permutation");
        }
        hit[raw[x]] = true;
        img[x] = raw[x];
      }
      const std::uint8_t* g = r.bytes(s);
      std::iota(sim.begin(), sim.end(), Index{0});
      for (std::uint32_t k = 0; k < s; ++k) {
        if (g[k] >= gate_count) throw DataCorruption(path + ": bad gate index");
        if (k + 1 == s && s > 1) {
          // Every prefix of an optimal circuit is optimal.
          if (lib.cost_of(PermKey::pack(sim, n)) != static_cast<int>(s) - 1) {
            throw DataCorruption(path + ": stored circuit has a non-optimal prefix");
          }
        }
        const Gate& gate = lib.gates_[g[k]];
        for (Index& v : sim) v = gate.apply(v);
      }
      if (sim != img) {
        throw DataCorruption(path + ": stored circuit does not compute its permutation");
      }
      PermKey key = PermKey::pack(img, n);
      if (!b.keys.empty() && !(b.keys.back() < key)) {
        throw DataCorruption(path + ": bucket records are not sorted");
      }
      if (!lib.index_.emplace(key, (std::uint64_t{s} << 32) | i).second) {
        throw DataCorruption(path + ": permutation stored twice");
      }
      b.keys.push_back(key);
      b.gates.insert(b.gates.end(), g, g + s);
    }
  }
  return lib;
}

}  // namespace revsynth
