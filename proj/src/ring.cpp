#include "monet/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "monet/error.hpp"
#include "monet/numbers.hpp"

namespace monet {

namespace {

std::vector<uint8_t> parse_coeffs(const std::string& s) {
  std::vector<uint8_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    require(!item.empty(), Errc::BadSpec, "empty modulus coefficient");
    int v = std::stoi(item);
    require(v >= 0 && v < 256, Errc::BadSpec, "modulus coefficient out of range");
    out.push_back(static_cast<uint8_t>(v));
  }
  return out;
}

// "q^n" -> (q, n)
std::pair<uint64_t, uint32_t> parse_power(const std::string& s) {
  auto caret = s.find('^');
  require(caret != std::string::npos, Errc::BadSpec, "expected q^n in ring spec");
  uint64_t q = std::stoull(s.substr(0, caret));
  uint64_t n = std::stoull(s.substr(caret + 1));
  require(n >= 1 && n <= 64, Errc::BadSpec, "bad exponent in ring spec");
  return {q, static_cast<uint32_t>(n)};
}

}  // namespace

RingSpec RingSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  require(colon != std::string::npos, Errc::BadSpec, "ring spec needs kind:params");
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  std::string params = rest, coeffs;
  if (auto c2 = rest.find(':'); c2 != std::string::npos) {
    params = rest.substr(0, c2);
    coeffs = rest.substr(c2 + 1);
  }
  if (kind == "mod") {
    require(coeffs.empty(), Errc::BadSpec, "mod takes no modulus polynomial");
    uint64_t m = std::stoull(params);
    require(m >= 2, Errc::BadSpec, "mod:m needs m >= 2");
    return RingSpec::modular(m);
  }
  auto [q, n] = parse_power(params);
  std::vector<uint8_t> mod = coeffs.empty() ? std::vector<uint8_t>{} : parse_coeffs(coeffs);
  if (kind == "product") {
    auto fac = factorize(q);
    require(fac.size() == 1, Errc::NonPrimeP,
            "product factor order must be a prime power");
    return RingSpec::product(static_cast<uint32_t>(fac[0].first), fac[0].second, n,
                             std::move(mod));
  }
  if (kind == "gf") {
    require(is_prime(q), Errc::NonPrimeP, "gf:p^n needs prime p");
    return RingSpec::galois(static_cast<uint32_t>(q), n, std::move(mod));
  }
  if (kind == "dual") {
    require(is_prime(q), Errc::NonPrimeP, "dual:p^n needs prime p");
    return RingSpec::dual(static_cast<uint32_t>(q), n, std::move(mod));
  }
  fail(Errc::BadSpec, "unknown ring kind '" + kind + "'");
}

std::string RingSpec::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Product:
      os << "product:" << ipow(p, deg) << '^' << count;
      break;
    case Kind::Galois:
      os << "gf:" << p << '^' << deg;
      break;
    case Kind::Dual:
      os << "dual:" << p << '^' << deg;
      break;
    case Kind::Modular:
      os << "mod:" << m;
      break;
  }
  return os.str();
}

RingPtr Ring::build(const RingSpec& spec, uint64_t order_cap) {
  require(order_cap <= 65536, Errc::CapExceeded, "ring order cap tops out at 65536");
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->spec_ = spec;

  uint64_t order64 = 0;
  switch (spec.kind) {
    case RingSpec::Kind::Modular: {
      require(spec.m >= 2, Errc::BadSpec, "mod:m needs m >= 2");
      order64 = spec.m;
      ring->one_ = 1;
      break;
    }
    case RingSpec::Kind::Galois: {
      ring->gf_ = Gf::make(spec.p, spec.deg, spec.modulus);
      ring->spec_.modulus = ring->gf_->modulus();
      order64 = ring->gf_->q();
      ring->one_ = 1;
      break;
    }
    case RingSpec::Kind::Dual: {
      ring->gf_ = Gf::make(spec.p, spec.deg, spec.modulus);
      ring->spec_.modulus = ring->gf_->modulus();
      order64 = uint64_t(ring->gf_->q()) * ring->gf_->q();
      ring->one_ = 1;
      break;
    }
    case RingSpec::Kind::Product: {
      require(spec.count >= 1, Errc::BadSpec, "product needs >= 1 factor");
      ring->gf_ = Gf::make(spec.p, spec.deg, spec.modulus);
      ring->spec_.modulus = ring->gf_->modulus();
      uint64_t q0 = ring->gf_->q();
      order64 = 1;
      uint64_t one = 0, w = 1;
      for (uint32_t i = 0; i < spec.count; ++i) {
        order64 *= q0;
        require(order64 <= order_cap, Errc::OrderTooLarge,
                "ring order exceeds cap " + std::to_string(order_cap));
        one += w;
        w *= q0;
      }
      ring->one_ = static_cast<uint32_t>(one);
      break;
    }
  }
  require(order64 >= 2 && order64 <= order_cap, Errc::OrderTooLarge,
          "ring order " + std::to_string(order64) + " exceeds cap " +
              std::to_string(order_cap));
  ring->order_ = static_cast<uint32_t>(order64);

  ring->build_fixed_and_units();  // units first: ideal/maximality code uses them
  ring->build_ideals();
  ring->build_aut_generators();

  // fixed subring needs the generators
  Bitset fixed = Bitset::full(ring->order_);
  for (const Perm& g : ring->aut_gens_) {
    Bitset f(ring->order_);
    for (uint32_t i = 0; i < ring->order_; ++i)
      if (g(i) == i) f.set(i);
    fixed &= f;
  }
  ring->fixed_ = fixed;

  if (ring->order_ <= 1024) {
    ring->mul_tab_.resize(size_t(ring->order_) * ring->order_);
    ring->add_tab_.resize(size_t(ring->order_) * ring->order_);
    for (uint32_t a = 0; a < ring->order_; ++a)
      for (uint32_t b = 0; b < ring->order_; ++b) {
        ring->mul_tab_[size_t(a) * ring->order_ + b] =
            static_cast<uint16_t>(ring->mul_raw(a, b));
        ring->add_tab_[size_t(a) * ring->order_ + b] =
            static_cast<uint16_t>(ring->add_raw(a, b));
      }
  }
  return ring;
}

uint32_t Ring::add_raw(uint32_t a, uint32_t b) const {
  switch (spec_.kind) {
    case RingSpec::Kind::Modular:
      return static_cast<uint32_t>((uint64_t(a) + b) % spec_.m);
    case RingSpec::Kind::Galois:
      return gf_->add(a, b);
    case RingSpec::Kind::Dual: {
      uint32_t q = gf_->q();
      return gf_->add(a % q, b % q) + q * gf_->add(a / q, b / q);
    }
    case RingSpec::Kind::Product: {
      uint32_t q = gf_->q(), r = 0, w = 1;
      for (uint32_t i = 0; i < spec_.count; ++i) {
        r += gf_->add(a % q, b % q) * w;
        a /= q;
        b /= q;
        w *= q;
      }
      return r;
    }
  }
  return 0;
}

uint32_t Ring::mul_raw(uint32_t a, uint32_t b) const {
  switch (spec_.kind) {
    case RingSpec::Kind::Modular:
      return static_cast<uint32_t>((uint64_t(a) * b) % spec_.m);
    case RingSpec::Kind::Galois:
      return gf_->mul(a, b);
    case RingSpec::Kind::Dual: {
      uint32_t q = gf_->q();
      uint32_t a0 = a % q, a1 = a / q, b0 = b % q, b1 = b / q;
      return gf_->mul(a0, b0) +
             q * gf_->add(gf_->mul(a0, b1), gf_->mul(a1, b0));
    }
    case RingSpec::Kind::Product: {
      uint32_t q = gf_->q(), r = 0, w = 1;
      for (uint32_t i = 0; i < spec_.count; ++i) {
        r += gf_->mul(a % q, b % q) * w;
        a /= q;
        b /= q;
        w *= q;
      }
      return r;
    }
  }
  return 0;
}

uint32_t Ring::add(uint32_t a, uint32_t b) const {
  if (!add_tab_.empty()) return add_tab_[size_t(a) * order_ + b];
  return add_raw(a, b);
}

uint32_t Ring::mul(uint32_t a, uint32_t b) const {
  if (!mul_tab_.empty()) return mul_tab_[size_t(a) * order_ + b];
  return mul_raw(a, b);
}

uint32_t Ring::neg(uint32_t a) const {
  switch (spec_.kind) {
    case RingSpec::Kind::Modular:
      return a ? static_cast<uint32_t>(spec_.m - a) : 0;
    case RingSpec::Kind::Galois:
      return gf_->neg(a);
    case RingSpec::Kind::Dual: {
      uint32_t q = gf_->q();
      return gf_->neg(a % q) + q * gf_->neg(a / q);
    }
    case RingSpec::Kind::Product: {
      uint32_t q = gf_->q(), r = 0, w = 1;
      for (uint32_t i = 0; i < spec_.count; ++i) {
        r += gf_->neg(a % q) * w;
        a /= q;
        w *= q;
      }
      return r;
    }
  }
  return 0;
}

uint32_t Ring::pow(uint32_t a, uint64_t e) const {
  uint32_t r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void Ring::build_fixed_and_units() {
  units_ = Bitset(order_);
  switch (spec_.kind) {
    case RingSpec::Kind::Modular: {
      for (uint32_t a = 0; a < order_; ++a)
        if (std::gcd<uint64_t>(a, spec_.m) == 1) units_.set(a);
      break;
    }
    case RingSpec::Kind::Galois: {
      for (uint32_t a = 1; a < order_; ++a) units_.set(a);
      break;
    }
    case RingSpec::Kind::Dual: {
      uint32_t q = gf_->q();
      for (uint32_t a = 0; a < order_; ++a)
        if (a % q != 0) units_.set(a);
      break;
    }
    case RingSpec::Kind::Product: {
      uint32_t q = gf_->q();
      for (uint32_t a = 0; a < order_; ++a) {
        uint32_t t = a;
        bool unit = true;
        for (uint32_t i = 0; i < spec_.count && unit; ++i) {
          unit = (t % q) != 0;
          t /= q;
        }
        if (unit) units_.set(a);
      }
      break;
    }
  }
}

void Ring::build_ideals() {
  ideals_.clear();
  switch (spec_.kind) {
    case RingSpec::Kind::Modular: {
      uint64_t m = spec_.m;
      for (uint64_t d = 1; d <= m; ++d) {
        if (m % d) continue;
        Ideal id;
        id.elems = Bitset(order_);
        for (uint64_t x = 0; x < m; x += d) id.elems.set(static_cast<uint32_t>(x));
        id.generator = static_cast<uint32_t>(d % m);
        id.is_zero = (d == m);
        id.is_proper = (d != 1);
        id.is_maximal = id.is_proper && is_prime(d);
        ideals_.push_back(std::move(id));
      }
      break;
    }
    case RingSpec::Kind::Galois: {
      Ideal z;
      z.elems = Bitset(order_);
      z.elems.set(0);
      z.generator = 0;
      z.is_zero = true;
      z.is_proper = true;
      z.is_maximal = true;  // {0} is maximal in a field
      ideals_.push_back(std::move(z));
      Ideal r;
      r.elems = Bitset::full(order_);
      r.generator = one_;
      r.is_proper = false;
      ideals_.push_back(std::move(r));
      break;
    }
    case RingSpec::Kind::Dual: {
      uint32_t q = gf_->q();
      Ideal z;
      z.elems = Bitset(order_);
      z.elems.set(0);
      z.generator = 0;
      z.is_zero = true;
      z.is_proper = true;
      ideals_.push_back(std::move(z));
      Ideal eps;
      eps.elems = Bitset(order_);
      for (uint32_t b = 0; b < q; ++b) eps.elems.set(q * b);
      eps.generator = q;  // the nilpotent
      eps.is_proper = true;
      eps.is_maximal = true;
      ideals_.push_back(std::move(eps));
      Ideal r;
      r.elems = Bitset::full(order_);
      r.generator = one_;
      ideals_.push_back(std::move(r));
      break;
    }
    case RingSpec::Kind::Product: {
      uint32_t q = gf_->q(), n = spec_.count;
      std::vector<uint32_t> weight(n, 1);
      for (uint32_t i = 1; i < n; ++i) weight[i] = weight[i - 1] * q;
      for (uint32_t t = 0; t < (1u << n); ++t) {
        Ideal id;
        id.elems = Bitset(order_);
        // enumerate elements supported on coordinate set t
        std::vector<uint32_t> coords;
        for (uint32_t i = 0; i < n; ++i)
          if (t & (1u << i)) coords.push_back(i);
        uint64_t combos = ipow(q, static_cast<uint32_t>(coords.size()));
        for (uint64_t v = 0; v < combos; ++v) {
          uint64_t x = 0, tv = v;
          for (uint32_t c : coords) {
            x += (tv % q) * weight[c];
            tv /= q;
          }
          id.elems.set(static_cast<uint32_t>(x));
        }
        uint32_t gen = 0;
        for (uint32_t c : coords) gen += weight[c];  // ones on the support
        id.generator = gen;
        id.is_zero = (t == 0);
        id.is_proper = (t + 1 != (1u << n));
        id.is_maximal = id.is_proper && coords.size() == n - 1;
        ideals_.push_back(std::move(id));
      }
      break;
    }
  }
  std::sort(ideals_.begin(), ideals_.end(), [](const Ideal& a, const Ideal& b) {
    uint32_t ca = a.elems.count(), cb = b.elems.count();
    if (ca != cb) return ca < cb;
    return a.elems.lex_less(b.elems);
  });
}

void Ring::build_aut_generators() {
  aut_gens_.clear();
  switch (spec_.kind) {
    case RingSpec::Kind::Modular:
      break;  // rigid
    case RingSpec::Kind::Galois: {
      if (spec_.deg >= 2) {
        Perm frob;
        frob.map.resize(order_);
        for (uint32_t a = 0; a < order_; ++a) frob.map[a] = gf_->frobenius(a);
        aut_gens_.push_back(std::move(frob));
      }
      break;
    }
    case RingSpec::Kind::Dual: {
      uint32_t q = gf_->q();
      uint32_t g = gf_->generator();
      if (q > 2) {  // T_g nontrivial only when the unit group is
        Perm tg;
        tg.map.resize(order_);
        for (uint32_t x = 0; x < order_; ++x)
          tg.map[x] = (x % q) + q * gf_->mul(g, x / q);
        aut_gens_.push_back(std::move(tg));
      }
      if (spec_.deg >= 2) {
        Perm sig;
        sig.map.resize(order_);
        for (uint32_t x = 0; x < order_; ++x)
          sig.map[x] = gf_->frobenius(x % q) + q * gf_->frobenius(x / q);
        aut_gens_.push_back(std::move(sig));
      }
      break;
    }
    case RingSpec::Kind::Product: {
      uint32_t q = gf_->q(), n = spec_.count;
      std::vector<uint32_t> weight(n, 1);
      for (uint32_t i = 1; i < n; ++i) weight[i] = weight[i - 1] * q;
      auto digit = [&](uint32_t x, uint32_t i) { return (x / weight[i]) % q; };
      for (uint32_t i = 0; i + 1 < n; ++i) {  // adjacent coordinate swaps
        Perm sw;
        sw.map.resize(order_);
        for (uint32_t x = 0; x < order_; ++x) {
          uint32_t di = digit(x, i), dj = digit(x, i + 1);
          sw.map[x] = x - di * weight[i] - dj * weight[i + 1] + dj * weight[i] +
                      di * weight[i + 1];
        }
        aut_gens_.push_back(std::move(sw));
      }
      if (spec_.deg >= 2) {  // Frobenius on factor 0
        Perm fr;
        fr.map.resize(order_);
        for (uint32_t x = 0; x < order_; ++x) {
          uint32_t d0 = digit(x, 0);
          fr.map[x] = x - d0 + gf_->frobenius(d0);
        }
        aut_gens_.push_back(std::move(fr));
      }
      break;
    }
  }
}

const std::vector<Perm>& Ring::automorphism_group() const {
  std::call_once(aut_once_, [this] {
    if (aut_gens_.empty()) {
      aut_group_ = {Perm::identity(order_)};
    } else {
      aut_group_ = generate_group(aut_gens_, order_, 200000);
    }
  });
  return aut_group_;
}

std::optional<size_t> Ring::ideal_index(const Bitset& elems) const {
  for (size_t i = 0; i < ideals_.size(); ++i)
    if (ideals_[i].elems == elems) return i;
  return std::nullopt;
}

std::vector<size_t> Ring::proper_nonzero_ideals_scan_order() const {
  std::vector<size_t> maximal, rest;
  for (size_t i = 0; i < ideals_.size(); ++i) {
    const Ideal& id = ideals_[i];
    if (!id.is_proper || id.is_zero) continue;
    (id.is_maximal ? maximal : rest).push_back(i);
  }
  maximal.insert(maximal.end(), rest.begin(), rest.end());
  return maximal;
}

bool Ring::is_rigid() const {
  for (const Perm& g : aut_gens_)
    if (!g.is_identity()) return false;
  return true;
}

bool Ring::is_field() const { return ideals_.size() == 2; }

bool Ring::is_local() const {
  size_t maximal = 0;
  for (const Ideal& id : ideals_) maximal += id.is_maximal ? 1 : 0;
  return maximal == 1;
}

std::optional<size_t> Ring::trivial_multiaction_ideal() const {
  auto self = shared_from_this();
  for (size_t i = 0; i < ideals_.size(); ++i) {
    const Ideal& id = ideals_[i];
    if (!id.is_proper || id.is_zero) continue;
    if (quotient(self, i).target->is_rigid()) return i;
  }
  return std::nullopt;
}

Bitset Ring::ideal_generated_by(const Bitset& gens) const {
  Bitset I(order_);
  I.set(0);
  gens.for_each([&](uint32_t g) { I.set(g); });
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = I.to_vector();
    for (uint32_t x : elems)
      for (uint32_t y : elems) {
        uint32_t s = add(x, y);
        if (!I.test(s)) {
          I.set(s);
          changed = true;
        }
      }
    for (uint32_t x : elems)
      for (uint32_t r = 0; r < order_; ++r) {
        uint32_t t = mul(r, x);
        if (!I.test(t)) {
          I.set(t);
          changed = true;
        }
      }
  }
  return I;
}

Bitset Ring::monoid_closure(const Bitset& seed) const {
  Bitset M(order_);
  M.set(one_);
  std::vector<uint32_t> work;
  seed.for_each([&](uint32_t x) {
    if (!M.test(x)) {
      M.set(x);
      work.push_back(x);
    }
  });
  work.push_back(one_);
  while (!work.empty()) {
    uint32_t y = work.back();
    work.pop_back();
    auto elems = M.to_vector();
    for (uint32_t z : elems) {
      uint32_t t = mul(y, z);
      if (!M.test(t)) {
        M.set(t);
        work.push_back(t);
      }
    }
  }
  return M;
}

QuotientView quotient(const RingPtr& ring, const Bitset& ideal_elems) {
  auto idx = ring->ideal_index(ideal_elems);
  require(idx.has_value(), Errc::NotAnIdeal, "element set is not an ideal of " +
                                                 ring->spec_str());
  return quotient(ring, *idx);
}

QuotientView quotient(const RingPtr& ring, size_t ideal_index) {
  require(ideal_index < ring->ideals().size(), Errc::NotAnIdeal, "ideal index out of range");
  const Ideal& id = ring->ideals()[ideal_index];
  require(id.is_proper, Errc::PreconditionViolated,
          "quotient by the full ring is not supported");

  QuotientView qv;
  qv.source = ring;
  qv.ideal_index = ideal_index;

  const RingSpec& spec = ring->spec();
  if (id.is_zero) {
    qv.target = ring;
    qv.proj.resize(ring->order());
    for (uint32_t i = 0; i < ring->order(); ++i) qv.proj[i] = i;
  } else
    switch (spec.kind) {
      case RingSpec::Kind::Modular: {
        // multiples of d with d | m
        uint64_t d = ring->order() / id.elems.count();
        qv.target = Ring::build(RingSpec::modular(d));
        qv.proj.resize(ring->order());
        for (uint32_t x = 0; x < ring->order(); ++x)
          qv.proj[x] = static_cast<uint32_t>(x % d);
        break;
      }
      case RingSpec::Kind::Dual: {
        qv.target = Ring::build(
            RingSpec::galois(spec.p, spec.deg, ring->galois()->modulus()));
        uint32_t q = ring->galois()->q();
        qv.proj.resize(ring->order());
        for (uint32_t x = 0; x < ring->order(); ++x) qv.proj[x] = x % q;
        break;
      }
      case RingSpec::Kind::Product: {
        uint32_t q = ring->galois()->q(), n = spec.count;
        std::vector<uint32_t> weight(n, 1);
        for (uint32_t i = 1; i < n; ++i) weight[i] = weight[i - 1] * q;
        // support coordinates of the ideal, from its generator witness
        std::vector<uint32_t> kept;
        for (uint32_t i = 0; i < n; ++i)
          if ((id.generator / weight[i]) % q == 0) kept.push_back(i);
        qv.target = Ring::build(RingSpec::product(
            spec.p, spec.deg, static_cast<uint32_t>(kept.size()),
            ring->galois()->modulus()));
        qv.proj.resize(ring->order());
        for (uint32_t x = 0; x < ring->order(); ++x) {
          uint32_t y = 0, w = 1;
          for (uint32_t i : kept) {
            y += ((x / weight[i]) % q) * w;
            w *= q;
          }
          qv.proj[x] = y;
        }
        break;
      }
      case RingSpec::Kind::Galois:
        fail(Errc::Internal, "field has no proper nonzero ideal");
    }

  qv.fibers.assign(qv.target->order(), {});
  for (uint32_t x = 0; x < ring->order(); ++x) qv.fibers[qv.proj[x]].push_back(x);
  return qv;
}

}  // namespace monet
