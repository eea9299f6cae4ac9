#pragma once

#include <cstdint>
#include <vector>

namespace monet {

/// Fixed-capacity bitset sized at runtime. Element sets of rings, ideals and
/// monoids all use this; indices are ring element indices.
class Bitset {
public:
  static constexpr uint32_t npos = UINT32_MAX;

  Bitset() = default;
  explicit Bitset(uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bitset full(uint32_t n) {
    Bitset b(n);
    for (uint32_t i = 0; i < n; ++i) b.set(i);
    return b;
  }
  static Bitset of(uint32_t n, std::initializer_list<uint32_t> xs) {
    Bitset b(n);
    for (uint32_t x : xs) b.set(x);
    return b;
  }

  uint32_t size() const { return n_; }
  bool test(uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(uint32_t i) { w_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(uint32_t i) { w_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : w_) c += static_cast<uint32_t>(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool contains(const Bitset& o) const {  // superset test
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & ~w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (o.w_[i] & w_[i]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset difference(Bitset a, const Bitset& b) { return a.subtract(b); }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  // Member-list lexicographic order: the set owning the lowest differing
  // element index comes first. Total order on same-capacity sets.
  bool lex_less(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t d = w_[i] ^ o.w_[i];
      if (d) {
        uint64_t low = d & (~d + 1);
        return (w_[i] & low) != 0;
      }
    }
    return false;
  }

  uint32_t first() const { return next_from(0); }
  uint32_t next(uint32_t i) const { return next_from(i + 1); }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        uint32_t b = static_cast<uint32_t>(__builtin_ctzll(w));
        f(static_cast<uint32_t>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<uint32_t> to_vector() const {
    std::vector<uint32_t> v;
    v.reserve(count());
    for_each([&](uint32_t i) { v.push_back(i); });
    return v;
  }

  const std::vector<uint64_t>& words() const { return w_; }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h ^ n_;
  }

private:
  uint32_t next_from(uint32_t i) const {
    if (i >= n_) return npos;
    uint32_t wi = i >> 6;
    uint64_t w = w_[wi] & (~uint64_t(0) << (i & 63));
    while (true) {
      if (w) {
        uint32_t r = static_cast<uint32_t>(wi * 64 + __builtin_ctzll(w));
        return r < n_ ? r : npos;
      }
      if (++wi >= w_.size()) return npos;
      w = w_[wi];
    }
  }

  uint32_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace monet
