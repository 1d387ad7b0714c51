#pragma once

#include "regge6j/sqrt_rational.hpp"

namespace regge6j::detail {

inline std::int64_t multiplicity(BigInt n, std::int64_t p) {
    std::int64_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

// Core of canonical_sqrt, shared by the map-based public entry point and the
// flat-array evaluator path. ForEach must invoke fn(prime, exponent) for every
// nonzero exponent of the prefactor, primes ascending.
//
// The squarefree radical collects the primes whose exponent in the squared
// value sum^2 * prefactor is odd; whether such a prime lands in the radical's
// numerator or denominator follows the sign of that combined exponent, so the
// sum's own content of the prime matters.
template <typename ForEach>
SqrtRationalValue canonical_sqrt_impl(ForEach&& for_each, const BigRational& sum) {
    if (sum == 0) return SqrtRationalValue{};
    BigInt s_num = 1, s_den = 1, r_num = 1, r_den = 1;
    for_each([&](std::int64_t p, std::int64_t e) {
        std::int64_t delta = 0; // radical exponent, -1, 0 or +1
        if (e & 1) {
            const std::int64_t combined =
                e + 2 * (multiplicity(numerator(sum), p) - multiplicity(denominator(sum), p));
            delta = combined > 0 ? 1 : -1;
            (delta > 0 ? s_num : s_den) *= p;
        }
        const std::int64_t half = (e - delta) / 2;
        if (half > 0)
            r_num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(half));
        else if (half < 0)
            r_den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-half));
    });
    SqrtRationalValue out;
    out.r = sum * BigRational(r_num, r_den);
    out.s = BigRational(s_num, s_den);
    return out;
}

} // namespace regge6j::detail
