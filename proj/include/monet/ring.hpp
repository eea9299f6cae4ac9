#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "monet/bitset.hpp"
#include "monet/gf.hpp"
#include "monet/perm.hpp"

namespace monet {

/// Which concrete finite commutative ring to build.
///
/// Text forms: `product:q^n` (n copies of F_q, q a prime power),
/// `gf:p^n[:c0,c1,...,cn]`, `dual:p^n` (F_{p^n}[x]/(x^2)), `mod:m`.
struct RingSpec {
  enum class Kind { Product, Galois, Dual, Modular };

  Kind kind = Kind::Modular;
  uint32_t p = 0;     // characteristic prime (Product/Galois/Dual)
  uint32_t deg = 1;   // factor degree d (Product) or extension degree n (Galois/Dual)
  uint32_t count = 1; // number of factors (Product)
  uint64_t m = 0;     // Modular
  std::vector<uint8_t> modulus;  // optional; least-lex irreducible otherwise

  static RingSpec product(uint32_t p, uint32_t deg, uint32_t count,
                          std::vector<uint8_t> mod = {}) {
    return {Kind::Product, p, deg, count, 0, std::move(mod)};
  }
  static RingSpec galois(uint32_t p, uint32_t n, std::vector<uint8_t> mod = {}) {
    return {Kind::Galois, p, n, 1, 0, std::move(mod)};
  }
  static RingSpec dual(uint32_t p, uint32_t n, std::vector<uint8_t> mod = {}) {
    return {Kind::Dual, p, n, 1, 0, std::move(mod)};
  }
  static RingSpec modular(uint64_t m) { return {Kind::Modular, 0, 1, 1, m, {}}; }

  static RingSpec parse(const std::string& text);
  std::string str() const;
};

struct Ideal {
  Bitset elems;
  uint32_t generator = 0;  // a single generating element as witness
  bool is_zero = false;
  bool is_proper = false;   // != R
  bool is_maximal = false;  // among proper ideals
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A finite commutative ring with canonical element indexing (0 is the
/// additive zero), its complete ideal list, automorphism generators and the
/// fixed subring. Immutable once built; safe to share across threads.
class Ring : public std::enable_shared_from_this<Ring> {
public:
  static RingPtr build(const RingSpec& spec, uint64_t order_cap = 65536);

  const RingSpec& spec() const { return spec_; }
  std::string spec_str() const { return spec_.str(); }
  uint32_t order() const { return order_; }
  uint32_t zero() const { return 0; }
  uint32_t one() const { return one_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t pow(uint32_t a, uint64_t e) const;

  bool is_unit(uint32_t a) const { return units_.test(a); }
  const Bitset& units() const { return units_; }

  const std::vector<Ideal>& ideals() const { return ideals_; }
  std::optional<size_t> ideal_index(const Bitset& elems) const;
  std::vector<size_t> proper_nonzero_ideals_scan_order() const;  // maximal first

  const std::vector<Perm>& aut_generators() const { return aut_gens_; }
  /// Full automorphism group, generated and cached (thread-safe).
  const std::vector<Perm>& automorphism_group() const;

  const Bitset& fixed_subring() const { return fixed_; }
  bool is_rigid() const;
  bool is_field() const;
  bool is_local() const;
  /// First proper nonzero ideal (ascending size) with rigid quotient, if any.
  std::optional<size_t> trivial_multiaction_ideal() const;

  /// Residue/factor field context where the kind has one (Galois, Dual,
  /// Product factors); null for Modular.
  const GfPtr& galois() const { return gf_; }

  /// Ideal generated by a set of elements: additive closure plus absorption.
  Bitset ideal_generated_by(const Bitset& gens) const;

  /// Multiplicative closure of seed (always contains one()).
  Bitset monoid_closure(const Bitset& seed) const;

private:
  Ring() = default;
  uint32_t add_raw(uint32_t a, uint32_t b) const;
  uint32_t mul_raw(uint32_t a, uint32_t b) const;
  void build_ideals();
  void build_aut_generators();
  void build_fixed_and_units();

  RingSpec spec_;
  uint32_t order_ = 0, one_ = 0;
  GfPtr gf_;  // factor/residue field for Product/Galois/Dual
  std::vector<uint16_t> mul_tab_, add_tab_;  // cached for order <= 1024
  std::vector<Ideal> ideals_;
  std::vector<Perm> aut_gens_;
  Bitset fixed_, units_;
  mutable std::once_flag aut_once_;
  mutable std::vector<Perm> aut_group_;
};

/// Quotient by an ideal: canonical target ring, projection table and fibers.
struct QuotientView {
  RingPtr source;
  RingPtr target;
  size_t ideal_index = 0;
  std::vector<uint32_t> proj;               // source index -> target index
  std::vector<std::vector<uint32_t>> fibers;  // target index -> source indices
};

QuotientView quotient(const RingPtr& ring, size_t ideal_index);
QuotientView quotient(const RingPtr& ring, const Bitset& ideal_elems);

}  // namespace monet
