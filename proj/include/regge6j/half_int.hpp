#pragma once

#include <compare>
#include <string>

namespace regge6j {

// A spin stored as its doubled integer value, so that half-integers stay
// exact: HalfInt{3} is the spin 3/2, HalfInt{4} is the spin 2.
struct HalfInt {
    int twice = 0;

    constexpr bool is_integer() const noexcept { return (twice & 1) == 0; }
    constexpr bool is_negative() const noexcept { return twice < 0; }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept { return {a.twice + b.twice}; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept { return {a.twice - b.twice}; }
    constexpr auto operator<=>(const HalfInt&) const = default;
};

// "2" for integers, "3/2" for half-integers.
std::string to_string(HalfInt h);

// Accepts "2" or "3/2" (an even numerator over 2 is fine too).
// Throws std::invalid_argument on anything else.
HalfInt parse_half_int(const std::string& text);

} // namespace regge6j
