#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace regge6j {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Sparse prime factorization with (possibly negative) integer exponents.
// No zero exponents are stored; the empty map represents 1.
struct PrimeExponents {
    std::map<std::int64_t, std::int64_t> exps;

    static PrimeExponents one() { return {}; }

    // Multiplies by prime^e, erasing the entry when the exponent cancels.
    void mul_pow(std::int64_t prime, std::int64_t e);

    PrimeExponents& operator*=(const PrimeExponents& other);
    PrimeExponents& divide_by(const PrimeExponents& other);

    BigRational to_rational() const;
    bool is_positive() const; // as a rational value (always true: primes are positive)

    bool operator==(const PrimeExponents&) const = default;
};

// Primes below 2^16, ascending. Built once, then read-only.
const std::vector<int>& small_primes();

// Prime factorization of n! by Legendre's formula:
// the exponent of p is sum_{k>=1} floor(n / p^k).
// n must lie in [0, 2^16); factorial arguments here never come close.
PrimeExponents factor_factorial(std::int64_t n);

} // namespace regge6j
