#include "monet/gf.hpp"

#include <algorithm>
#include <sstream>

#include "monet/error.hpp"
#include "monet/numbers.hpp"

namespace monet {

namespace {

// Dense little-endian coefficient vectors over F_p, trailing zeros allowed.
using Poly = std::vector<uint8_t>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i]) return i;
  return -1;
}

Poly poly_mod(Poly a, const Poly& m, uint32_t p) {
  int dm = degree(m);
  // m is monic of degree dm.
  for (int i = degree(a); i >= dm; --i) {
    uint32_t c = a[i];
    if (!c) continue;
    for (int j = 0; j <= dm; ++j)
      a[i - dm + j] =
          static_cast<uint8_t>((a[i - dm + j] + p - (c * m[j]) % p) % p);
  }
  a.resize(dm);
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, uint32_t p) {
  Poly r(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      r[i + j] = static_cast<uint8_t>((r[i + j] + uint32_t(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

// Remainder of f by monic g.
Poly poly_rem(Poly f, const Poly& g, uint32_t p) {
  int dg = degree(g);
  for (int i = degree(f); i >= dg; --i) {
    uint32_t c = f[i];
    if (!c) continue;
    for (int j = 0; j <= dg; ++j)
      f[i - dg + j] =
          static_cast<uint8_t>((f[i - dg + j] + p - (c * g[j]) % p) % p);
  }
  if (dg > 0) f.resize(dg);
  return f;
}

bool is_zero(const Poly& f) { return degree(f) < 0; }

}  // namespace

bool Gf::is_irreducible(const std::vector<uint8_t>& poly, uint32_t p) {
  int d = degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  // Exhaustive factor search: trial-divide by every monic polynomial of
  // degree 1..d/2 (coefficients enumerated little-endian).
  for (int k = 1; 2 * k <= d; ++k) {
    uint64_t count = ipow(p, static_cast<uint32_t>(k));
    for (uint64_t v = 0; v < count; ++v) {
      Poly g(k + 1, 0);
      uint64_t t = v;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<uint8_t>(t % p);
        t /= p;
      }
      g[k] = 1;
      if (is_zero(poly_rem(poly, g, p))) return false;
    }
  }
  return true;
}

std::vector<uint8_t> Gf::least_irreducible(uint32_t p, uint32_t n) {
  uint64_t count = ipow(p, n);
  for (uint64_t v = 0; v < count; ++v) {
    Poly f(n + 1, 0);
    uint64_t t = v;
    for (uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<uint8_t>(t % p);
      t /= p;
    }
    f[n] = 1;
    if (is_irreducible(f, p)) return f;
  }
  fail(Errc::Internal, "no irreducible polynomial found (impossible)");
}

std::shared_ptr<const Gf> Gf::make(uint32_t p, uint32_t n, std::vector<uint8_t> modulus) {
  require(is_prime(p), Errc::NonPrimeP, "p = " + std::to_string(p) + " is not prime");
  require(n >= 1, Errc::BadSpec, "extension degree must be >= 1");
  uint64_t q64 = ipow(p, n);
  require(q64 <= 65536, Errc::OrderTooLarge,
          "field order " + std::to_string(q64) + " exceeds 65536");

  auto gf = std::shared_ptr<Gf>(new Gf());
  gf->p_ = p;
  gf->n_ = n;
  gf->q_ = static_cast<uint32_t>(q64);

  if (modulus.empty()) {
    modulus = least_irreducible(p, n);
  } else {
    require(modulus.size() == n + 1 && modulus[n] == 1, Errc::ReducibleModulus,
            "modulus must be monic of degree n");
    for (uint8_t c : modulus)
      require(c < p, Errc::BadSpec, "modulus coefficient out of range");
    require(is_irreducible(modulus, p), Errc::ReducibleModulus,
            "modulus is reducible over F_p");
  }
  gf->modulus_ = std::move(modulus);

  // Digit matrix.
  gf->dig_.resize(size_t(gf->q_) * n);
  for (uint32_t a = 0; a < gf->q_; ++a) {
    uint32_t t = a;
    for (uint32_t i = 0; i < n; ++i) {
      gf->dig_[size_t(a) * n + i] = static_cast<uint8_t>(t % p);
      t /= p;
    }
  }

  // Generator by order testing in index order, then log/exp tables.
  auto raw_mul = [&](uint32_t a, uint32_t b) { return gf->poly_mul(a, b); };
  auto raw_pow = [&](uint32_t a, uint64_t e) {
    uint32_t r = 1, base = a;
    while (e) {
      if (e & 1) r = raw_mul(r, base);
      base = raw_mul(base, base);
      e >>= 1;
    }
    return r;
  };
  uint32_t qm1 = gf->q_ - 1;
  auto fac = factorize(qm1);
  uint32_t gen = 0;
  for (uint32_t e = 1; e < gf->q_; ++e) {
    bool primitive = true;
    for (auto& [r, _] : fac) {
      if (raw_pow(e, qm1 / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = e;
      break;
    }
  }
  require(gen != 0 || qm1 == 0, Errc::Internal, "no generator found");
  if (qm1 == 0) gen = 1;  // q = 1 cannot happen (n >= 1, p >= 2)
  gf->gen_ = gen;

  gf->logt_.assign(gf->q_, UINT32_MAX);
  gf->expt_.assign(2 * size_t(qm1), 1);
  uint32_t cur = 1;
  for (uint32_t k = 0; k < qm1; ++k) {
    gf->expt_[k] = cur;
    gf->expt_[k + qm1] = cur;
    gf->logt_[cur] = k;
    cur = raw_mul(cur, gen);
  }
  require(cur == 1, Errc::Internal, "generator order mismatch");
  return gf;
}

uint32_t Gf::poly_mul(uint32_t a, uint32_t b) const {
  Poly pa(n_), pb(n_);
  for (uint32_t i = 0; i < n_; ++i) {
    pa[i] = dig_[size_t(a) * n_ + i];
    pb[i] = dig_[size_t(b) * n_ + i];
  }
  Poly r = poly_mul_mod(pa, pb, modulus_, p_);
  uint32_t idx = 0, w = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    idx += (i < r.size() ? r[i] : 0) * w;
    w *= p_;
  }
  return idx;
}

uint32_t Gf::add(uint32_t a, uint32_t b) const {
  uint32_t idx = 0, w = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    uint32_t c = dig_[size_t(a) * n_ + i] + dig_[size_t(b) * n_ + i];
    if (c >= p_) c -= p_;
    idx += c * w;
    w *= p_;
  }
  return idx;
}

uint32_t Gf::neg(uint32_t a) const {
  uint32_t idx = 0, w = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    uint32_t c = dig_[size_t(a) * n_ + i];
    idx += (c ? p_ - c : 0) * w;
    w *= p_;
  }
  return idx;
}

uint32_t Gf::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Gf::inv(uint32_t a) const {
  require(a != 0, Errc::PreconditionViolated, "zero has no inverse");
  uint32_t qm1 = q_ - 1;
  return expt_[(qm1 - logt_[a]) % qm1];
}

uint32_t Gf::pow(uint32_t a, int64_t e) const {
  if (a == 0) {
    require(e > 0 || e == 0, Errc::PreconditionViolated, "0^negative");
    return e == 0 ? 1 : 0;
  }
  int64_t qm1 = q_ - 1;
  int64_t k = (int64_t(logt_[a]) * (e % qm1)) % qm1;
  if (k < 0) k += qm1;
  return expt_[k];
}

uint64_t Gf::element_order(uint32_t a) const {
  require(a != 0, Errc::PreconditionViolated, "order of zero");
  uint32_t qm1 = q_ - 1;
  uint32_t l = logt_[a];
  // order = (q-1)/gcd(l, q-1)
  uint32_t x = l, y = qm1;
  while (x) {
    uint32_t t = y % x;
    y = x;
    x = t;
  }
  return qm1 / y;
}

uint32_t Gf::from_coeffs(const std::vector<uint8_t>& c) const {
  uint32_t idx = 0, w = 1;
  for (uint32_t i = 0; i < n_; ++i) {
    idx += (i < c.size() ? c[i] : 0) * w;
    w *= p_;
  }
  return idx;
}

std::string Gf::modulus_str() const {
  std::ostringstream os;
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(modulus_[i]);
  }
  return os.str();
}

}  // namespace monet
