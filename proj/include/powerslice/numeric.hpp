#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace powerslice {

// Unbounded integer. Everything on a decision path is computed in this type;
// no floating point anywhere near a comparison.
using BigNat = mpz_class;

// Same storage, used where a value is allowed to be negative (shifts at API
// boundaries). Search code canonicalizes to |h| plus an orientation flag.
using BigInt = mpz_class;

// Exact rational, kept canonical by GMP.
using Rational = mpq_class;

// Every public operation taking an exponent requires k >= 2.
inline void require_exponent(uint64_t k) {
    if (k < 2) throw std::invalid_argument("exponent must be >= 2");
}

// base^exp, exactly. ipow(x, 0) == 1 for every x, including 0.
BigNat ipow(const BigNat& base, uint64_t exp);

// Largest r with r*r <= n. Rejects negative n.
BigNat isqrt_floor(const BigNat& n);

// Largest t with t^k <= n (k >= 1). Rejects negative n.
BigNat kth_root_floor(const BigNat& n, uint64_t k);

// ceil(num/den); den must be nonzero.
BigNat ceil_div(const BigNat& num, const BigNat& den);

// Deterministic primality test for 64-bit n.
bool is_prime_u64(uint64_t n);

// (x^e) mod m; m must be nonzero. Exact for any 64-bit modulus.
uint64_t powmod_u64(uint64_t x, uint64_t e, uint64_t m);

}  // namespace powerslice
