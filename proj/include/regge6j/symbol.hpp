#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "regge6j/half_int.hpp"

namespace regge6j {

enum class Mode { standard, super };

// The six spins of a {J1 J2 J3; j1 j2 j3} symbol. Construction through
// make_symbol guarantees all spins are nonnegative; triangle validity is
// checked by the evaluators, not here.
struct SixJSymbol {
    HalfInt J1, J2, J3, j1, j2, j3;

    constexpr std::array<int, 6> doubled() const noexcept {
        return {J1.twice, J2.twice, J3.twice, j1.twice, j2.twice, j3.twice};
    }
    constexpr auto operator<=>(const SixJSymbol&) const = default;
};

// The four triangles and three quadrangles of a symbol:
//   p1 = J1+j2+j3   p2 = j1+J2+j3   p3 = j1+j2+J3   p4 = J1+J2+J3
//   q1 = J2+J3+j2+j3   q2 = J1+j1+J3+j3   q3 = J1+j1+J2+j2
// This is the unique assignment with q_l = p_m + p_n - 2 j_l and
// q_l = p_l + p_4 - 2 J_l for (l,m,n) cyclic on [1,2,3].
struct TriangleQuad {
    HalfInt p1, p2, p3, p4;
    HalfInt q1, q2, q3;

    constexpr std::array<int, 4> p_doubled() const noexcept {
        return {p1.twice, p2.twice, p3.twice, p4.twice};
    }
    constexpr std::array<int, 3> q_doubled() const noexcept {
        return {q1.twice, q2.twice, q3.twice};
    }
};

// Doubled spin values, in the order 2J1 2J2 2J3 2j1 2j2 2j3.
// Throws std::domain_error if any input is negative.
SixJSymbol make_symbol(int tJ1, int tJ2, int tJ3, int tj1, int tj2, int tj3);
SixJSymbol make_symbol(const std::array<int, 6>& doubled);

TriangleQuad triangles(const SixJSymbol& s);

// Standard validity: all triangles integer and every q_k - p_i >= 0.
bool is_standard_valid(const SixJSymbol& s);

// Super validity: every q_k - p_i >= 0 (half-integer triangles admitted).
bool is_super_valid(const SixJSymbol& s);

bool is_valid(const SixJSymbol& s, Mode mode);

// First pair (k, i), both 1-based, with q_k - p_i < 0; nullopt when none.
std::optional<std::pair<int, int>> first_triangle_violation(const SixJSymbol& s);

// "{9 8 6; 3/2 9/2 13/2}"
std::string to_string(const SixJSymbol& s);

} // namespace regge6j
