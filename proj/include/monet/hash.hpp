#pragma once

#include <cstdint>
#include <string>

namespace monet {

struct Fnv64 {
  uint64_t h = 1469598103934665603ull;
  void feed(const void* data, size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  }
  void feed_u32(uint32_t v) { feed(&v, sizeof v); }
  void feed_u64(uint64_t v) { feed(&v, sizeof v); }
  void feed_str(const std::string& s) { feed(s.data(), s.size()); }
  uint64_t value() const { return h; }
};

std::string hex64(uint64_t v);

}  // namespace monet
