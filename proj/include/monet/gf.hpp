#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace monet {

/// Arithmetic context for F_{p^n}. Elements are indexed by their coefficient
/// vector in little-endian base p: index = sum c_i p^i where the element is
/// sum c_i x^i modulo the stored monic irreducible.
///
/// Multiplication runs through discrete-log tables built from a generator of
/// the unit group (found by order testing in index order), addition is
/// digitwise; no q-by-q tables are kept, so q up to 65536 stays cheap.
class Gf {
public:
  static std::shared_ptr<const Gf> make(uint32_t p, uint32_t n,
                                        std::vector<uint8_t> modulus = {});

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  uint32_t q() const { return q_; }
  const std::vector<uint8_t>& modulus() const { return modulus_; }
  uint32_t generator() const { return gen_; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return expt_[logt_[a] + logt_[b]];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, int64_t e) const;
  uint32_t frobenius(uint32_t a) const { return pow(a, p_); }
  uint32_t log(uint32_t a) const { return logt_[a]; }  // a != 0
  uint32_t exp(uint64_t k) const { return expt_[k % (q_ - 1)]; }

  /// Coefficient of x^i in the element's polynomial representative.
  uint8_t coeff(uint32_t a, uint32_t i) const { return dig_[size_t(a) * n_ + i]; }
  uint32_t from_coeffs(const std::vector<uint8_t>& c) const;

  uint64_t element_order(uint32_t a) const;  // multiplicative order, a != 0
  bool in_prime_field(uint32_t a) const { return a < p_; }

  std::string modulus_str() const;

  static bool is_irreducible(const std::vector<uint8_t>& poly, uint32_t p);
  /// Lexicographically least monic irreducible of degree n over F_p, ordered
  /// by the little-endian integer of the low coefficients.
  static std::vector<uint8_t> least_irreducible(uint32_t p, uint32_t n);

private:
  Gf() = default;
  uint32_t poly_mul(uint32_t a, uint32_t b) const;  // table-free fallback

  uint32_t p_ = 0, n_ = 0, q_ = 0, gen_ = 0;
  std::vector<uint8_t> modulus_;  // size n+1, monic
  std::vector<uint8_t> dig_;      // q * n digit matrix
  std::vector<uint32_t> logt_;    // log of nonzero elements
  std::vector<uint32_t> expt_;    // g^k for k in [0, 2(q-1))
};

using GfPtr = std::shared_ptr<const Gf>;

}  // namespace monet
