#include "monet/set_family.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "monet/error.hpp"
#include "monet/hash.hpp"

namespace monet {

namespace {

// Families over masks of an n <= 5 universe fit a 32-bit member bitmap.
constexpr uint32_t kHardCap = 5;

bool bitmap_closed(uint32_t bm) {
  // every pairwise AND of member masks is again a member
  uint32_t rest = bm;
  while (rest) {
    uint32_t i = __builtin_ctz(rest);
    rest &= rest - 1;
    uint32_t rest2 = rest;
    while (rest2) {
      uint32_t j = __builtin_ctz(rest2);
      rest2 &= rest2 - 1;
      if (!(bm & (1u << (i & j)))) return false;
    }
  }
  return true;
}

// closure of bm ∪ {m} under pairwise intersection
uint32_t bitmap_close_with(uint32_t bm, uint32_t m) {
  uint32_t out = bm | (1u << m);
  std::vector<uint32_t> stack{m};
  while (!stack.empty()) {
    uint32_t y = stack.back();
    stack.pop_back();
    uint32_t rest = out;
    while (rest) {
      uint32_t z = __builtin_ctz(rest);
      rest &= rest - 1;
      uint32_t t = y & z;
      if (!(out & (1u << t))) {
        out |= 1u << t;
        stack.push_back(t);
      }
    }
  }
  return out;
}

// member-list lexicographic order on family bitmaps: the family owning the
// lowest differing mask comes first
bool bitmap_lex_less(uint32_t a, uint32_t b) {
  uint32_t d = a ^ b;
  if (!d) return false;
  return (a >> __builtin_ctz(d)) & 1u;
}

}  // namespace

bool SetFamily::contains(uint32_t mask) const {
  return std::binary_search(members.begin(), members.end(), mask);
}

SetFamily family_from_masks(uint32_t n, std::vector<uint32_t> masks) {
  require(n >= 1 && n <= 31, Errc::BadSpec, "universe size out of range");
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  SetFamily s{n, std::move(masks)};
  for (uint32_t m : s.members)
    require(m <= s.full_mask(), Errc::BadSpec, "member outside universe");
  return s;
}

bool is_intersection_closed(const SetFamily& s, std::pair<uint32_t, uint32_t>* offending) {
  for (size_t i = 0; i < s.members.size(); ++i)
    for (size_t j = i + 1; j < s.members.size(); ++j)
      if (!s.contains(s.members[i] & s.members[j])) {
        if (offending) *offending = {s.members[i], s.members[j]};
        return false;
      }
  return true;
}

SetFamily complement_members(const SetFamily& s) {
  std::vector<uint32_t> out;
  out.reserve(s.members.size());
  for (uint32_t m : s.members) out.push_back(~m & s.full_mask());
  return family_from_masks(s.n, std::move(out));
}

Bitset phi_iso(const SetFamily& s, const Ring& f2n) {
  require(f2n.spec().kind == RingSpec::Kind::Product && f2n.spec().p == 2 &&
              f2n.spec().deg == 1 && f2n.spec().count == s.n,
          Errc::BadSpec, "phi_iso expects the boolean ring F_2^n of matching n");
  std::pair<uint32_t, uint32_t> off;
  require(is_intersection_closed(s, &off), Errc::NotIntersectionClosed,
          "family is not intersection-closed");
  require(s.contains_empty() && s.contains(s.full_mask()), Errc::MissingTopOrBottom,
          "family must contain the empty set and the whole universe");
  Bitset monoid(f2n.order());
  for (uint32_t m : s.members) monoid.set(m);
  return monoid;
}

SetFamily phi_inverse(const Ring& f2n, const Bitset& monoid) {
  require(f2n.spec().kind == RingSpec::Kind::Product && f2n.spec().p == 2 &&
              f2n.spec().deg == 1,
          Errc::BadSpec, "phi_inverse expects a boolean ring F_2^n");
  require(monoid.test(f2n.zero()) && monoid.test(f2n.one()), Errc::MissingTopOrBottom,
          "monoid must contain 0 and 1");
  return family_from_masks(f2n.spec().count, monoid.to_vector());
}

FamilyCertificate find_rare_element(const SetFamily& s) {
  require(s.size() > 1, Errc::PreconditionViolated, "family needs |S| > 1");
  std::pair<uint32_t, uint32_t> off;
  require(is_intersection_closed(s, &off), Errc::NotIntersectionClosed,
          "family is not intersection-closed");
  uint32_t x = s.union_mask();
  for (uint32_t p = 0; p < s.n; ++p) {
    if (!(x & (1u << p))) continue;
    uint64_t freq = 0;
    for (uint32_t m : s.members) freq += (m >> p) & 1u;
    if (2 * freq <= s.size())
      return FamilyCertificate{p, freq, s.size(), std::nullopt};
  }
  throw Counterexample(Errc::CounterexampleFound,
                       "every element lies in more than half the members",
                       family_to_text(s));
}

std::vector<uint32_t> basis_sets(const SetFamily& s) {
  std::vector<uint32_t> out;
  for (uint32_t a : s.members) {
    bool basis = true;
    for (size_t i = 0; i < s.members.size() && basis; ++i) {
      if (s.members[i] == a) continue;
      for (size_t j = i + 1; j < s.members.size(); ++j) {
        if (s.members[j] == a) continue;
        if ((s.members[i] & s.members[j]) == a) {
          basis = false;
          break;
        }
      }
    }
    if (basis) out.push_back(a);
  }
  return out;
}

SetFamily lemma1_reduce(const SetFamily& s, uint32_t p) {
  require(p < s.n, Errc::PreconditionViolated, "p outside universe");
  std::pair<uint32_t, uint32_t> off;
  require(is_intersection_closed(s, &off), Errc::PreconditionViolated,
          "family is not intersection-closed");
  uint32_t x = s.union_mask();
  require(s.contains_empty() && s.contains(x), Errc::PreconditionViolated,
          "family must contain the empty set and its union");
  require(s.size() >= 2, Errc::PreconditionViolated, "family needs |S| >= 2");
  require(x & (1u << p), Errc::PreconditionViolated, "p must lie in the union");

  std::vector<uint32_t> cur = s.members;
  auto freq_of = [&](const std::vector<uint32_t>& v) {
    uint64_t f = 0;
    for (uint32_t m : v) f += (m >> p) & 1u;
    return f;
  };
  uint64_t freq = freq_of(cur);
  require(2 * freq <= cur.size(), Errc::PreconditionViolated,
          "p does not satisfy |S_p| <= |S|/2");

  while (2 * freq < cur.size()) {
    // maximal member (by inclusion) among nonempty p-free members; least mask
    // breaks ties among the maximal ones
    uint32_t pick = 0;
    bool found = false;
    for (uint32_t a : cur) {
      if (a == 0 || ((a >> p) & 1u)) continue;
      bool maximal = true;
      for (uint32_t b : cur) {
        if (b == a || b == 0 || ((b >> p) & 1u)) continue;
        if ((a & b) == a) {  // a ⊆ b with b another p-free member
          maximal = false;
          break;
        }
      }
      if (maximal && (!found || a < pick)) {
        pick = a;
        found = true;
      }
    }
    require(found, Errc::Internal, "no removable member despite strict inequality");
    cur.erase(std::find(cur.begin(), cur.end(), pick));
  }

  SetFamily out = family_from_masks(s.n, std::move(cur));
  // postconditions: closure, required members, exact half frequency,
  // removed sets omit p
  require(is_intersection_closed(out, &off), Errc::Internal,
          "reduction broke intersection-closure");
  require(out.contains_empty() && out.contains(x), Errc::Internal,
          "reduction dropped a required member");
  require(2 * freq_of(out.members) == out.size(), Errc::Internal,
          "reduction missed exact half frequency");
  for (uint32_t a : s.members)
    if (!out.contains(a))
      require(!((a >> p) & 1u), Errc::Internal, "reduction removed a member containing p");
  return out;
}

SetFamily family_from_bitmap(uint32_t n, uint32_t bitmap) {
  std::vector<uint32_t> masks;
  while (bitmap) {
    masks.push_back(__builtin_ctz(bitmap));
    bitmap &= bitmap - 1;
  }
  return family_from_masks(n, std::move(masks));
}

uint32_t family_to_bitmap(const SetFamily& s) {
  require(s.n <= kHardCap, Errc::CapExceeded, "bitmap form needs n <= 5");
  uint32_t bm = 0;
  for (uint32_t m : s.members) bm |= 1u << m;
  return bm;
}

uint64_t enumerate_families(uint32_t n, const std::function<void(uint32_t)>& emit,
                            uint32_t cap) {
  require(n >= 1, Errc::BadSpec, "universe must be nonempty");
  require(n <= cap, Errc::CapExceeded,
          "family enumeration capped at n = " + std::to_string(cap));
  require(n <= kHardCap, Errc::CapExceeded, "family enumeration hard limit is n = 5");

  uint32_t full = (1u << n) - 1;
  uint32_t seed = (1u << 0) | (1u << full);  // ∅ and X as member masks

  // Recursive extension over candidate members in descending mask order,
  // closing after each inclusion; duplicates suppressed by hashing the
  // canonical (bitmap) form.
  std::unordered_set<uint32_t> seen;
  std::vector<uint32_t> all;
  std::vector<uint32_t> stack{seed};
  seen.insert(seed);
  while (!stack.empty()) {
    uint32_t bm = stack.back();
    stack.pop_back();
    all.push_back(bm);
    for (int m = static_cast<int>(full) - 1; m >= 1; --m) {
      if (bm & (1u << m)) continue;
      uint32_t child = bitmap_close_with(bm, static_cast<uint32_t>(m));
      if (seen.insert(child).second) stack.push_back(child);
    }
  }
  std::sort(all.begin(), all.end(), bitmap_lex_less);
  for (uint32_t bm : all) emit(bm);
  return all.size();
}

uint64_t enumerate_families_filter(uint32_t n, const std::function<void(uint32_t)>& emit) {
  require(n >= 1 && n <= 4, Errc::CapExceeded, "filter oracle handles n <= 4");
  uint32_t full = (1u << n) - 1;
  uint32_t seed = (1u << 0) | (1u << full);
  uint32_t middle_count = (1u << n) - 2;  // masks strictly between ∅ and X
  std::vector<uint32_t> middles;
  for (uint32_t m = 1; m < full; ++m) middles.push_back(m);

  std::vector<uint32_t> all;
  for (uint32_t pick = 0; pick < (1u << middle_count); ++pick) {
    uint32_t bm = seed;
    for (uint32_t i = 0; i < middle_count; ++i)
      if (pick & (1u << i)) bm |= 1u << middles[i];
    if (bitmap_closed(bm)) all.push_back(bm);
  }
  std::sort(all.begin(), all.end(), bitmap_lex_less);
  for (uint32_t bm : all) emit(bm);
  return all.size();
}

std::string family_to_text(const SetFamily& s) {
  std::ostringstream os;
  os << "n=" << s.n << '\n';
  for (uint32_t m : s.members) {
    if (!m) {
      os << "-\n";
      continue;
    }
    bool first = true;
    for (uint32_t i = 0; i < s.n; ++i) {
      if (!((m >> i) & 1u)) continue;
      if (!first) os << ',';
      os << i;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

SetFamily family_from_text(std::istream& in) {
  std::string line;
  require(static_cast<bool>(std::getline(in, line)), Errc::BadSpec, "empty family file");
  require(line.rfind("n=", 0) == 0, Errc::BadSpec, "first line must be n=<k>");
  uint32_t n = static_cast<uint32_t>(std::stoul(line.substr(2)));
  std::vector<uint32_t> masks;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "-") {
      masks.push_back(0);
      continue;
    }
    uint32_t m = 0;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) {
      uint32_t idx = static_cast<uint32_t>(std::stoul(item));
      require(idx < n, Errc::BadSpec, "element index outside universe");
      m |= 1u << idx;
    }
    masks.push_back(m);
  }
  return family_from_masks(n, std::move(masks));
}

uint64_t family_hash(const SetFamily& s) {
  Fnv64 h;
  h.feed_u32(s.n);
  for (uint32_t m : s.members) h.feed_u32(m);
  return h.value();
}

}  // namespace monet
