#include "regge6j/symbol.hpp"

#include <stdexcept>

namespace regge6j {

SixJSymbol make_symbol(int tJ1, int tJ2, int tJ3, int tj1, int tj2, int tj3) {
    return make_symbol(std::array<int, 6>{tJ1, tJ2, tJ3, tj1, tj2, tj3});
}

SixJSymbol make_symbol(const std::array<int, 6>& d) {
    for (int v : d)
        if (v < 0)
            throw std::domain_error("spin arguments must be nonnegative, got doubled value " +
                                    std::to_string(v));
    return SixJSymbol{{d[0]}, {d[1]}, {d[2]}, {d[3]}, {d[4]}, {d[5]}};
}

TriangleQuad triangles(const SixJSymbol& s) {
    return TriangleQuad{
        s.J1 + s.j2 + s.j3,
        s.j1 + s.J2 + s.j3,
        s.j1 + s.j2 + s.J3,
        s.J1 + s.J2 + s.J3,
        s.J2 + s.J3 + s.j2 + s.j3,
        s.J1 + s.j1 + s.J3 + s.j3,
        s.J1 + s.j1 + s.J2 + s.j2,
    };
}

bool is_super_valid(const SixJSymbol& s) {
    for (int v : s.doubled())
        if (v < 0) return false;
    const TriangleQuad tq = triangles(s);
    const auto p = tq.p_doubled();
    const auto q = tq.q_doubled();
    int pmax = p[0], qmin = q[0];
    for (int v : p) pmax = pmax < v ? v : pmax;
    for (int v : q) qmin = qmin > v ? v : qmin;
    return qmin >= pmax;
}

bool is_standard_valid(const SixJSymbol& s) {
    const TriangleQuad tq = triangles(s);
    for (int v : tq.p_doubled())
        if (v & 1) return false;
    return is_super_valid(s);
}

bool is_valid(const SixJSymbol& s, Mode mode) {
    return mode == Mode::standard ? is_standard_valid(s) : is_super_valid(s);
}

std::optional<std::pair<int, int>> first_triangle_violation(const SixJSymbol& s) {
    const TriangleQuad tq = triangles(s);
    const auto p = tq.p_doubled();
    const auto q = tq.q_doubled();
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 4; ++i)
            if (q[k] - p[i] < 0) return std::make_pair(k + 1, i + 1);
    return std::nullopt;
}

std::string to_string(const SixJSymbol& s) {
    return "{" + to_string(s.J1) + " " + to_string(s.J2) + " " + to_string(s.J3) + "; " +
           to_string(s.j1) + " " + to_string(s.j2) + " " + to_string(s.j3) + "}";
}

} // namespace regge6j
