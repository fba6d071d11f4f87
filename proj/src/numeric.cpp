#include "powerslice/numeric.hpp"

namespace powerslice {

BigNat ipow(const BigNat& base, uint64_t exp) {
    BigNat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigNat isqrt_floor(const BigNat& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt_floor: negative argument");
    BigNat r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

BigNat kth_root_floor(const BigNat& n, uint64_t k) {
    if (k == 0) throw std::invalid_argument("kth_root_floor: k must be >= 1");
    if (sgn(n) < 0) throw std::invalid_argument("kth_root_floor: negative argument");
    BigNat r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

BigNat ceil_div(const BigNat& num, const BigNat& den) {
    if (sgn(den) == 0) throw std::invalid_argument("ceil_div: zero divisor");
    BigNat q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

static inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t x, uint64_t e, uint64_t m) {
    if (m == 0) throw std::invalid_argument("powmod_u64: zero modulus");
    if (m == 1) return 0;
    uint64_t r = 1;
    x %= m;
    while (e > 0) {
        if (e & 1) r = mulmod_u64(r, x, m);
        x = mulmod_u64(x, x, m);
        e >>= 1;
    }
    return r;
}

// Miller-Rabin with the 12-prime base set that decides every 64-bit n.
bool is_prime_u64(uint64_t n) {
    static constexpr uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (uint64_t p : bases) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : bases) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace powerslice
