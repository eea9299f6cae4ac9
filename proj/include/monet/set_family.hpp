#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "monet/bitset.hpp"
#include "monet/ring.hpp"

namespace monet {

/// A family of subsets of {0..n-1}, members stored as sorted n-bit masks.
/// The intersection-closed ones with ∅ and the full set X are in bijection
/// with the extended submonoids of F_2^n (intersection = product, symmetric
/// difference = sum).
struct SetFamily {
  uint32_t n = 0;
  std::vector<uint32_t> members;  // distinct, ascending

  uint32_t full_mask() const { return n == 32 ? ~0u : (1u << n) - 1; }
  uint32_t union_mask() const {
    uint32_t u = 0;
    for (uint32_t m : members) u |= m;
    return u;
  }
  bool contains(uint32_t mask) const;
  bool contains_empty() const { return contains(0); }
  bool contains_union() const { return contains(union_mask()); }
  size_t size() const { return members.size(); }
  bool operator==(const SetFamily&) const = default;
};

SetFamily family_from_masks(uint32_t n, std::vector<uint32_t> masks);

/// Offending pair reported through `offending` when not closed.
bool is_intersection_closed(const SetFamily& s,
                            std::pair<uint32_t, uint32_t>* offending = nullptr);

/// Dualizes a union-closed family into an intersection-closed one (and back).
SetFamily complement_members(const SetFamily& s);

struct FamilyCertificate {
  uint32_t element = 0;   // p, a universe index
  uint64_t frequency = 0; // |S_p|
  uint64_t family_size = 0;
  std::optional<SetFamily> reduced;  // the half-frequency subfamily, when computed
};

/// Characteristic-vector translation between families and element sets of
/// F_2^n; the canonical indexing makes masks and ring indices coincide, which
/// this checks rather than assumes.
Bitset phi_iso(const SetFamily& s, const Ring& f2n);
SetFamily phi_inverse(const Ring& f2n, const Bitset& monoid);

/// Least universe index lying in at most half the members. Throws
/// Counterexample (CounterexampleFound) if none exists.
FamilyCertificate find_rare_element(const SetFamily& s);

/// Members not expressible as an intersection of two other distinct members.
std::vector<uint32_t> basis_sets(const SetFamily& s);

/// Shrinks S to an intersection-closed Ŝ with |Ŝ_p| = |Ŝ|/2 exactly by
/// repeatedly removing a maximal p-free member (least mask breaks ties).
/// All four postconditions are asserted before returning.
SetFamily lemma1_reduce(const SetFamily& s, uint32_t p);

/// Streams every intersection-closed family over {0..n-1} that contains ∅
/// and the full set, in canonical (member-list lexicographic) order.
/// Families are passed as bitmaps over the 2^n possible masks. Returns count.
uint64_t enumerate_families(uint32_t n, const std::function<void(uint32_t)>& emit,
                            uint32_t cap = 5);

/// Independent oracle: filters all member-subset bitmaps (n <= 4).
uint64_t enumerate_families_filter(uint32_t n, const std::function<void(uint32_t)>& emit);

SetFamily family_from_bitmap(uint32_t n, uint32_t bitmap);
uint32_t family_to_bitmap(const SetFamily& s);

std::string family_to_text(const SetFamily& s);
SetFamily family_from_text(std::istream& in);
uint64_t family_hash(const SetFamily& s);

}  // namespace monet
