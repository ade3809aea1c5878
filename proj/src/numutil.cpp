#include "crg/numutil.hpp"

#include <algorithm>

namespace crg {

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u64(a, b) * b;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<unsigned> divisors(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (uint64_t d = 11; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Int binomial(unsigned long n, unsigned long k) {
    Int z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return z;
}

Int factorial(unsigned long n) {
    Int z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

} // namespace crg
