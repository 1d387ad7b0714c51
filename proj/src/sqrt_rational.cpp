#include "regge6j/sqrt_rational.hpp"

#include <cmath>

#include "canonical_sqrt_impl.hpp"

namespace regge6j {

double SqrtRationalValue::to_double() const {
    return static_cast<double>(r) * std::sqrt(static_cast<double>(s));
}

SqrtRationalValue canonical_sqrt(const PrimeExponents& prefactor, const BigRational& sum) {
    return detail::canonical_sqrt_impl(
        [&](auto&& fn) {
            for (const auto& [p, e] : prefactor.exps) fn(p, e);
        },
        sum);
}

std::string to_string(const SqrtRationalValue& v) {
    if (v.is_zero()) return "0";
    std::string out = v.r.str();
    if (v.s != 1) out += " sqrt(" + v.s.str() + ")";
    return out;
}

} // namespace regge6j
