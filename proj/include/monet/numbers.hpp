#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace monet {

bool is_prime(uint64_t n);
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);  // trial division
uint64_t euler_phi(uint64_t n);
std::vector<uint64_t> primes_upto(uint64_t n);

/// Count of k-dimensional subspaces of an n-dimensional space over F_p.
uint64_t gaussian_binomial(uint32_t n, uint32_t k, uint64_t p);

/// Lower-bound comparison function for the totient gate:
///   f(x) = 4(x+1)/(x^2+1) * (e^gamma * ln ln(x^2+1) + 3 / ln ln(x^2+1)).
double totient_gate_f(double x);

uint64_t ipow(uint64_t b, uint32_t e);

}  // namespace monet
