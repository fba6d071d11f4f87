#pragma once

#include "powerslice/numeric.hpp"

#include <cstdint>
#include <vector>

namespace powerslice {

// Residues holds_fermat_identity will iterate before rejecting the modulus
// as too large to certify exhaustively.
inline constexpr uint64_t kDefaultResidueCap = 10'000'000;

// Divisibility profile of an exponent k: the primes p with (p-1) | (k-1),
// their product M, and the density 1/M of shifts h passing M | h.
struct MdoProfile {
    uint64_t exponent = 0;
    std::vector<uint64_t> primes;  // ascending; 2 is always present
    BigNat modulus;                // squarefree product of the primes
    Rational density;              // 1/modulus
};

// Primes p such that (p-1) divides (k-1), ascending.
std::vector<uint64_t> mdo_primes(uint64_t k);

// Product of mdo_primes(k). Divides the shift of every solution with
// unequal slice sums, so shifts outside its multiples are dead on arrival.
BigNat mdo_modulus(uint64_t k);

MdoProfile mdo_profile(uint64_t k);

// True iff mdo_modulus(k) divides h. Sign of h is irrelevant; h = 0 is
// admissible here, the central slice being a separate concern.
bool is_admissible_shift(uint64_t k, const BigInt& h);

// True iff x^k = x (mod n) for every residue x in [0, n). Exhaustive by
// construction; n beyond residue_cap raises an error rather than sampling.
// Among squarefree n this holds exactly for the divisors of mdo_modulus(k).
bool holds_fermat_identity(uint64_t k, const BigNat& n,
                           uint64_t residue_cap = kDefaultResidueCap);

// 1 / mdo_modulus(k): the fraction of shifts surviving the divisibility test.
Rational admissible_density(uint64_t k);

}  // namespace powerslice
