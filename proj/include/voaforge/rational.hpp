// Exact rational scalars for the whole engine.  Everything is GMP-backed;
// no floating point appears anywhere downstream of this header.
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace voaforge {

using Rat = mpq_class;
using Int = mpz_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// n! as an exact integer.
inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient, n >= 0.
inline Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

// Falling factorial x(x-1)...(x-m+1); vanishes through a zero factor when
// m exceeds a nonnegative x.
inline Int falling(long x, long m) {
    Int r = 1;
    for (long i = 0; i < m; ++i) r *= (x - i);
    return r;
}

inline int parity_sign(long p) { return (p % 2 == 0) ? 1 : -1; }

// Canonical text form: "p" when the denominator is 1, else "p/q", lowest
// terms, leading '-' for negatives.
inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Combined numerator+denominator bit size; used only for pivot selection.
inline std::size_t rat_bits(const Rat& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace voaforge
