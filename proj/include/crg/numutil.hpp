#pragma once

#include <cstdint>
#include <vector>

#include "crg/rational.hpp"

namespace crg {

uint64_t gcd_u64(uint64_t a, uint64_t b);
uint64_t lcm_u64(uint64_t a, uint64_t b);

// Euler totient and the sorted list of positive divisors.
unsigned euler_phi(unsigned m);
std::vector<unsigned> divisors(unsigned m);

bool is_prime_u64(uint64_t n);

// Binomial coefficient and factorial as exact integers.
Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

} // namespace crg
