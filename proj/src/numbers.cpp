#include "monet/numbers.hpp"

#include <cmath>
#include <numbers>

#include "monet/error.hpp"

namespace monet {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
  std::vector<std::pair<uint64_t, uint32_t>> out;
  for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    uint32_t e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

uint64_t euler_phi(uint64_t n) {
  require(n >= 1, Errc::PreconditionViolated, "phi of 0");
  uint64_t r = n;
  for (auto& [p, e] : factorize(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

std::vector<uint64_t> primes_upto(uint64_t n) {
  std::vector<uint64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

uint64_t gaussian_binomial(uint32_t n, uint32_t k, uint64_t p) {
  if (k > n) return 0;
  // prod_{i=0..k-1} (p^{n-i} - 1) / (p^{k-i} - 1), computed by alternating
  // multiply/divide to stay integral.
  unsigned __int128 num = 1;
  for (uint32_t i = 0; i < k; ++i) num *= ipow(p, n - i) - 1;
  unsigned __int128 den = 1;
  for (uint32_t i = 0; i < k; ++i) den *= ipow(p, k - i) - 1;
  require(num % den == 0, Errc::Internal, "gaussian binomial not integral");
  unsigned __int128 r = num / den;
  require(r <= UINT64_MAX, Errc::OrderTooLarge, "gaussian binomial overflow");
  return static_cast<uint64_t>(r);
}

double totient_gate_f(double x) {
  double ll = std::log(std::log(x * x + 1.0));
  double egamma = std::exp(std::numbers::egamma);
  return 4.0 * (x + 1.0) / (x * x + 1.0) * (egamma * ll + 3.0 / ll);
}

}  // namespace monet
