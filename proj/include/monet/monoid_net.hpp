#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "monet/bitset.hpp"
#include "monet/perm.hpp"
#include "monet/ring.hpp"

namespace monet {

struct ExtendedSubmonoid {
  RingPtr ring;
  Bitset elems;
};

/// Multiplicatively closed, contains one() and the fixed subring.
bool is_extended_submonoid(const Ring& r, const Bitset& m);

/// Additively closed extended submonoid (these are exactly the subrings here).
bool is_subring(const Ring& r, const Bitset& m);

/// Streams every extended submonoid once, in canonical (member-list
/// lexicographic) order. Each closed set is reached exactly once through its
/// minimal generating chain, so no dedup table is needed. Returns the count.
uint64_t enumerate_extended_submonoids(const Ring& r,
                                       const std::function<void(const Bitset&)>& emit,
                                       uint32_t order_cap = 256);

/// Test oracle: filter all subsets (order <= 16).
uint64_t enumerate_extended_submonoids_filter(const Ring& r,
                                              const std::function<void(const Bitset&)>& emit);

/// Bijection of a subset of the quotient, as sorted (a, g(a)) pairs.
using QuotBij = std::vector<std::pair<uint32_t, uint32_t>>;

QuotBij quot_identity(const Bitset& pim);
QuotBij quot_transposition(const Bitset& pim, uint32_t a, uint32_t b);
QuotBij restrict_perm(const Perm& p, const Bitset& pim);
bool quotbij_is_involution(const QuotBij& g);

/// A collection of groups acting on the quotients R/I, one per ideal, each
/// extending the natural Aut(R/I) action. The symmetric and automorphic
/// assignments are symbolic; explicit per-ideal generator lists are accepted
/// for research probes and validated for the extension condition at load.
class Multiaction {
public:
  enum class GroupKind { Symmetric, Automorphic, Explicit };

  static Multiaction symmetric(const RingPtr& r);
  static Multiaction automorphic(const RingPtr& r);
  /// Symmetric at the zero ideal, automorphic at every nonzero ideal.
  static Multiaction local_sym_top(const RingPtr& r);
  static Multiaction custom(const RingPtr& r,
                            const std::map<size_t, std::vector<Perm>>& per_ideal_gens);

  const RingPtr& ring() const { return ring_; }
  GroupKind kind_for(size_t ideal_index) const { return kinds_[ideal_index]; }
  GroupKind top_kind() const { return kinds_[0]; }  // zero ideal is index 0
  const QuotientView& quot(size_t ideal_index) const;
  const std::vector<Perm>& explicit_group(size_t ideal_index) const;
  std::string kind_str() const;

  /// Membership test in the top action group (for witness validation).
  bool top_group_contains(const Perm& p) const;

private:
  Multiaction() = default;
  void init(const RingPtr& r);

  RingPtr ring_;
  std::vector<GroupKind> kinds_;
  std::map<size_t, std::vector<Perm>> explicit_groups_;  // generated, sorted
  std::vector<std::unique_ptr<QuotientView>> quots_;     // per proper ideal; null for R
};

struct LiftRecord {
  QuotBij action;  // induced bijection of π(M̂)
  Perm witness;    // permutation of R stabilizing M̂, commuting with π
};

struct CoveringCertificate {
  std::string ring_spec;
  std::vector<uint8_t> ring_modulus;
  std::string action;  // multiaction kind string
  Bitset monoid;       // M
  size_t ideal_index = 0;
  Bitset ideal_elems;
  bool ideal_maximal = false;
  Bitset associated;  // M̂
  std::vector<LiftRecord> lifts;  // generators of the stabilizer image
};

struct Obstruction {
  enum class Kind { NotClosed, FiberMismatch, NoLift };
  Kind kind = Kind::NotClosed;
  size_t ideal_index = 0;
  uint32_t class_a = 0, size_a = 0;  // fiber mismatch payload
  uint32_t class_b = 0, size_b = 0;
  std::string detail;
  std::string str() const;
};

/// Index-order fiber pairing witness for a bijection g of π(M̂) under the
/// symmetric top group; exists iff matched fibers have equal size.
std::optional<Perm> sym_lift_exists(const QuotientView& qv, const Bitset& mhat,
                                    const QuotBij& g, Obstruction* why = nullptr);

/// Definition-level oracle. Symmetric: literal search over all |R|!
/// permutations for |R| <= 8, fiber-bijection assembly up to 16.
/// Automorphic: iterate the full automorphism group.
std::optional<Perm> lift_exists_bruteforce(const QuotientView& qv, const Bitset& mhat,
                                           const QuotBij& g, Multiaction::GroupKind kind);

/// Stabilizer of π(M̂) in Γ_I, as induced bijections: a generating list
/// (identity omitted) for the image group on π(M̂).
std::vector<QuotBij> stabilizer_generators(const Multiaction& ma, size_t ideal_index,
                                           const Bitset& pim);

/// Lift of g across the ideal into the top action group, stabilizing M̂.
std::optional<Perm> find_lift(const Multiaction& ma, size_t ideal_index,
                              const Bitset& mhat, const QuotBij& g);

/// Shared certification results for a sweep: keyed by (ideal, M̂).
class CertifyCache;

struct FindCoverOptions {
  size_t exhaustive_mhat_cap = 4096;  // max subsets tried in the exhaustive route
  CertifyCache* cache = nullptr;
  std::vector<Obstruction>* obstructions = nullptr;
};

std::optional<CoveringCertificate> find_covering_ideal(const ExtendedSubmonoid& m,
                                                       const Multiaction& ma,
                                                       const FindCoverOptions& opts = {});

/// Throws CertificateInvalid unless every stored lift satisfies the commuting
/// square pointwise, stabilizes M̂, lies in the top action group, and the
/// recorded generators generate the full stabilizer image.
void validate_certificate(const Multiaction& ma, const CoveringCertificate& cert);

struct MonoidFailure {
  Bitset monoid;
  std::vector<Obstruction> obstructions;
};

struct NetworkReport {
  std::string ring_spec;
  std::string action;
  bool verdict = false;
  uint64_t monoid_count = 0;
  uint64_t certified = 0;
  std::vector<MonoidFailure> failures;          // canonical order
  std::vector<CoveringCertificate> sample_certs;  // first few, validated
  uint64_t enumeration_hash = 0;
  bool all_cert_ideals_maximal = true;
};

struct NetworkOptions {
  uint32_t order_cap = 256;
  unsigned jobs = 1;
  size_t keep_certs = 8;
  size_t keep_failures = 64;
};

NetworkReport is_monoidal_network(const RingPtr& r, const Multiaction& ma,
                                  const NetworkOptions& opts = {});

struct ConjWitness {
  Bitset monoid;
  std::string note;
};

struct ConjReport {
  uint32_t n = 0;
  uint64_t monoid_count = 0;
  uint64_t subring_count = 0;      // conj2: excluded from the quantifier
  uint64_t premise_count = 0;      // monoids satisfying the hypothesis
  uint64_t reading_b_premise_count = 0;  // conj3 second reading
  std::vector<ConjWitness> counterexamples;
  std::vector<ConjWitness> counterexamples_reading_b;  // conj3 only
  bool holds() const { return counterexamples.empty(); }
  bool holds_reading_b() const { return counterexamples_reading_b.empty(); }
};

ConjReport check_conjecture_2prime(uint32_t n, unsigned jobs = 1);
ConjReport check_conjecture_3prime(uint32_t n, unsigned jobs = 1);

struct LocalCertReport {
  std::string ring_spec;
  uint64_t monoid_count = 0;
  bool all_certified = false;
  std::vector<CoveringCertificate> sample_certs;
};

/// Certifies the maximal ideal as covering for every extended submonoid of a
/// finite local non-field ring, under the symmetric-top multiaction with
/// automorphic quotient actions.
LocalCertReport prop9_certificate(const RingPtr& r, const NetworkOptions& opts = {});

}  // namespace monet
