#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regge6j/sqrt_rational.hpp"

namespace regge6j {

// The 16-prime base used by the table encoding.
inline constexpr std::array<int, 16> kBasePrimes{2,  3,  5,  7,  11, 13, 17, 19,
                                                 23, 29, 31, 37, 41, 43, 47, 53};

// Table encoding of a value as  sign_multiplier * sqrt(prod p^e):
// 16 exponents over the base primes 2..53 plus overflow factors for any
// larger primes under the radical. The multiplier keeps the sign and the
// whole (unfactored) numerator; denominator and radical primes go into the
// exponents. Decoding is exact by construction.
struct RotenbergLine {
    BigInt sign_multiplier = 1;
    std::array<std::int64_t, 16> base_exps{};
    std::vector<std::pair<std::int64_t, std::int64_t>> overflow; // (prime > 53, exponent), ascending

    bool operator==(const RotenbergLine&) const = default;
};

RotenbergLine to_rotenberg(const SqrtRationalValue& v);
SqrtRationalValue from_rotenberg(const RotenbergLine& line);

// "e1 .. e16 &mult [p^e ...]"  (exactly the trailing part of a table line)
std::string render(const RotenbergLine& line);
RotenbergLine parse_rotenberg(std::string_view text);

} // namespace regge6j
