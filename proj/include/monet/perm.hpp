#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "monet/bitset.hpp"
#include "monet/error.hpp"

namespace monet {

/// Permutation of {0..n-1} as a mapping table.
struct Perm {
  std::vector<uint32_t> map;

  Perm() = default;
  explicit Perm(std::vector<uint32_t> m) : map(std::move(m)) {}

  static Perm identity(uint32_t n) {
    Perm p;
    p.map.resize(n);
    for (uint32_t i = 0; i < n; ++i) p.map[i] = i;
    return p;
  }
  static Perm transposition(uint32_t n, uint32_t a, uint32_t b) {
    Perm p = identity(n);
    p.map[a] = b;
    p.map[b] = a;
    return p;
  }

  uint32_t size() const { return static_cast<uint32_t>(map.size()); }
  uint32_t operator()(uint32_t i) const { return map[i]; }

  // (*this) ∘ g : apply g first.
  Perm after(const Perm& g) const {
    Perm r;
    r.map.resize(map.size());
    for (size_t i = 0; i < map.size(); ++i) r.map[i] = map[g.map[i]];
    return r;
  }
  Perm inverse() const {
    Perm r;
    r.map.resize(map.size());
    for (uint32_t i = 0; i < map.size(); ++i) r.map[map[i]] = i;
    return r;
  }
  bool is_identity() const {
    for (uint32_t i = 0; i < map.size(); ++i)
      if (map[i] != i) return false;
    return true;
  }
  bool stabilizes(const Bitset& s) const {
    bool ok = true;
    s.for_each([&](uint32_t i) { ok = ok && s.test(map[i]); });
    return ok;
  }
  Bitset apply(const Bitset& s) const {
    Bitset r(s.size());
    s.for_each([&](uint32_t i) { r.set(map[i]); });
    return r;
  }
  bool operator==(const Perm& o) const { return map == o.map; }
  bool operator<(const Perm& o) const { return map < o.map; }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : map) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct PermHash {
  size_t operator()(const Perm& p) const { return static_cast<size_t>(p.hash()); }
};

/// Closure of a generator list under composition; finite, so inverses come free.
/// Deterministic BFS order, result sorted lexicographically.
std::vector<Perm> generate_group(const std::vector<Perm>& gens, uint32_t degree,
                                 size_t cap = 1000000);

}  // namespace monet
