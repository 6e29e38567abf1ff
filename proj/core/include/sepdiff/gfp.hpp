#pragma once

#include <cstdint>

namespace sepdiff {

// Scalars of GF(p), stored as least nonnegative residues. p is kept small
// enough (< 2^31) that products fit in 64 bits.
using fp_t = std::uint64_t;

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) {
    fp_t s = a + b;
    return s >= p ? s - p : s;
}

inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) { return a >= b ? a - b : a + p - b; }

inline fp_t fp_neg(fp_t a, fp_t p) { return a == 0 ? 0 : p - a; }

inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) { return (a * b) % p; }

fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p);

// Inverse of a nonzero residue (Fermat).
fp_t fp_inv(fp_t a, fp_t p);

bool is_prime_u64(std::uint64_t n);

}  // namespace sepdiff
