#pragma once

#include <string>

#include "regge6j/prime_exponents.hpp"

namespace regge6j {

// An exact value r*sqrt(s) in canonical form: s is a positive rational whose
// numerator and denominator are squarefree, r carries the whole sign, and a
// zero value is always (r=0, s=1). Two equal real values have identical
// fields, so operator== is exact value equality.
struct SqrtRationalValue {
    BigRational r;
    BigRational s = 1;

    bool is_zero() const { return r == 0; }
    BigRational squared() const { return r * r * s; }
    double to_double() const; // lossy, for display and debugging only

    bool operator==(const SqrtRationalValue&) const = default;
};

// Canonicalizes sum * sqrt(prefactor). The prefactor's factorization is
// given, so no integer factoring happens: the squarefree part of the value
// squared is read off the odd prefactor exponents (sum enters squared).
SqrtRationalValue canonical_sqrt(const PrimeExponents& prefactor, const BigRational& sum);

// "-1/2 sqrt(23/7735)", "-3/2", "0"
std::string to_string(const SqrtRationalValue& v);

} // namespace regge6j
