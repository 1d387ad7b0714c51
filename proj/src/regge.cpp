#include "regge6j/regge.hpp"

#include <stdexcept>

#include "regge6j/errors.hpp"

namespace regge6j {

namespace {

// The five matrices, entries doubled. Rows map (J1,J2,J3,j1,j2,j3) to the
// primed spins.
constexpr std::array<ReggeMatrix, 5> kMatrices{{
    {1,
     {{{2, 0, 0, 0, 0, 0},
       {0, 1, 1, 0, 1, -1},
       {0, 1, 1, 0, -1, 1},
       {0, 0, 0, 2, 0, 0},
       {0, 1, -1, 0, 1, 1},
       {0, -1, 1, 0, 1, 1}}}},
    {2,
     {{{1, 0, 1, 1, 0, -1},
       {0, 2, 0, 0, 0, 0},
       {1, 0, 1, -1, 0, 1},
       {1, 0, -1, 1, 0, 1},
       {0, 0, 0, 0, 2, 0},
       {-1, 0, 1, 1, 0, 1}}}},
    {3,
     {{{1, 1, 0, 1, -1, 0},
       {1, 1, 0, -1, 1, 0},
       {0, 0, 2, 0, 0, 0},
       {1, -1, 0, 1, 1, 0},
       {-1, 1, 0, 1, 1, 0},
       {0, 0, 0, 0, 0, 2}}}},
    {4,
     {{{0, 1, 1, 0, 1, -1},
       {1, 0, 1, -1, 0, 1},
       {1, 1, 0, 1, -1, 0},
       {0, 1, -1, 0, 1, 1},
       {-1, 0, 1, 1, 0, 1},
       {1, -1, 0, 1, 1, 0}}}},
    {5,
     {{{0, 1, 1, 0, -1, 1},
       {1, 0, 1, 1, 0, -1},
       {1, 1, 0, -1, 1, 0},
       {0, -1, 1, 0, 1, 1},
       {1, 0, -1, 1, 0, 1},
       {-1, 1, 0, 1, 1, 0}}}},
}};

void require_super_valid(const SixJSymbol& s) {
    if (!is_super_valid(s))
        throw std::domain_error("Regge transformation of an invalid symbol " + to_string(s));
}

// A transformation needs q_l/2 as a spin, so every quadrangle it touches
// must be integer (doubled value even); otherwise the image would hold
// quarter-integer spins and the transformation is rejected.
bool rejects(int kappa, const std::array<int, 3>& qd) {
    if (kappa <= 3) return (qd[static_cast<std::size_t>(kappa - 1)] & 1) != 0;
    return ((qd[0] | qd[1] | qd[2]) & 1) != 0;
}

SixJSymbol checked(const SixJSymbol& out) {
    if (!is_super_valid(out))
        throw internal_error("Regge image is not super-valid: " + to_string(out));
    return out;
}

} // namespace

const ReggeMatrix& regge_matrix(int kappa) {
    if (kappa < 1 || kappa > 5)
        throw std::domain_error("Regge index must lie in [1,5], got " + std::to_string(kappa));
    return kMatrices[static_cast<std::size_t>(kappa - 1)];
}

std::optional<SixJSymbol> apply_regge(int kappa, const SixJSymbol& s) {
    if (kappa < 1 || kappa > 5)
        throw std::domain_error("Regge index must lie in [1,5], got " + std::to_string(kappa));
    require_super_valid(s);
    const auto qd = triangles(s).q_doubled();
    if (rejects(kappa, qd)) return std::nullopt;
    const auto d = s.doubled();
    const auto J = [&](int c) { return d[static_cast<std::size_t>(c)]; };
    const auto j = [&](int c) { return d[static_cast<std::size_t>(c + 3)]; };
    if (kappa <= 3) {
        const int l = kappa - 1, m = (l + 1) % 3, n = (l + 2) % 3;
        const int h = qd[static_cast<std::size_t>(l)] / 2; // doubled q_l/2
        return checked(SixJSymbol{{J(l)}, {h - J(m)}, {h - J(n)}, {j(l)}, {h - j(m)}, {h - j(n)}});
    }
    const int h1 = qd[0] / 2, h2 = qd[1] / 2, h3 = qd[2] / 2;
    if (kappa == 4)
        return checked(
            SixJSymbol{{h1 - j(2)}, {h2 - j(0)}, {h3 - j(1)}, {h1 - J(2)}, {h2 - J(0)}, {h3 - J(1)}});
    return checked(
        SixJSymbol{{h1 - j(1)}, {h2 - j(2)}, {h3 - j(0)}, {h1 - J(1)}, {h2 - J(2)}, {h3 - J(0)}});
}

std::optional<SixJSymbol> apply_regge_matrix(int kappa, const SixJSymbol& s) {
    const ReggeMatrix& R = regge_matrix(kappa);
    require_super_valid(s);
    const auto d = s.doubled();
    std::array<int, 6> out{};
    for (std::size_t r = 0; r < 6; ++r) {
        int acc = 0; // four times the output spin
        for (std::size_t c = 0; c < 6; ++c) acc += R.twice_entries[r][c] * d[c];
        if (acc & 1) return std::nullopt;
        out[r] = acc / 2;
    }
    return checked(SixJSymbol{{out[0]}, {out[1]}, {out[2]}, {out[3]}, {out[4]}, {out[5]}});
}

std::vector<int> applicable_set(const SixJSymbol& s, Mode mode) {
    if (!is_valid(s, mode))
        throw std::domain_error("applicable_set of an invalid symbol " + to_string(s));
    const auto qd = triangles(s).q_doubled();
    std::vector<int> out;
    for (int kappa = 1; kappa <= 5; ++kappa)
        if (!rejects(kappa, qd)) out.push_back(kappa);
    return out;
}

} // namespace regge6j
