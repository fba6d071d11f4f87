#include "powerslice/mdo.hpp"

#include <algorithm>
#include <atomic>

namespace powerslice {

// Enumerates divisors d of k-1 and keeps d+1 when prime. k-1 can be large
// but has few divisors, so this beats sieving primes up to k.
std::vector<uint64_t> mdo_primes(uint64_t k) {
    require_exponent(k);
    const uint64_t n = k - 1;
    std::vector<uint64_t> divisors;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divisors.push_back(d);
            if (d != n / d) divisors.push_back(n / d);
        }
    }
    std::vector<uint64_t> primes;
    for (uint64_t d : divisors) {
        if (is_prime_u64(d + 1)) primes.push_back(d + 1);
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

BigNat mdo_modulus(uint64_t k) {
    BigNat m = 1;
    for (uint64_t p : mdo_primes(k)) m *= p;
    return m;
}

MdoProfile mdo_profile(uint64_t k) {
    MdoProfile prof;
    prof.exponent = k;
    prof.primes = mdo_primes(k);
    prof.modulus = 1;
    for (uint64_t p : prof.primes) prof.modulus *= p;
    prof.density = Rational(1) / Rational(prof.modulus);
    return prof;
}

bool is_admissible_shift(uint64_t k, const BigInt& h) {
    const BigNat m = mdo_modulus(k);
    return mpz_divisible_p(h.get_mpz_t(), m.get_mpz_t()) != 0;
}

bool holds_fermat_identity(uint64_t k, const BigNat& n, uint64_t residue_cap) {
    require_exponent(k);
    if (sgn(n) <= 0) throw std::invalid_argument("holds_fermat_identity: modulus must be >= 1");
    if (cmp(n, residue_cap) > 0) {
        throw std::domain_error("holds_fermat_identity: modulus too large for exhaustive residue check");
    }
    const uint64_t m = n.get_ui();
    if (m == 1) return true;
    // One counterexample settles it, so threads bail out through a shared
    // flag instead of finishing their ranges.
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static)
    for (uint64_t x = 0; x < m; ++x) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        if (powmod_u64(x, k, m) != x) ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

Rational admissible_density(uint64_t k) {
    return Rational(1) / Rational(mdo_modulus(k));
}

}  // namespace powerslice
