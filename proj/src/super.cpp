#include "regge6j/super.hpp"

#include <algorithm>
#include <stdexcept>

#include "eval_context.hpp"
#include "regge6j/errors.hpp"

namespace regge6j {

namespace {

// Monomial coefficients (c1, c0) with Pi(z) = c1*z + c0, all in integers.
struct MonoCoeffs {
    std::int64_t c1 = 0;
    std::int64_t c0 = 1;
};

MonoCoeffs mono_coeffs(Parity parity, const SixJSymbol& s) {
    if (parity == Parity::alpha) return {0, 1};
    if (parity == Parity::beta) {
        const BetaLabels b = beta_decomposition(s);
        // -z (qbar + qbar' - p - p' + 1) + (qbar + 1/2)(qbar' + 1/2) - p p'
        const std::int64_t lin2 =
            b.qbar.twice + b.qbar_prime.twice - b.p.twice - b.p_prime.twice + 2;
        const std::int64_t const4 =
            static_cast<std::int64_t>(b.qbar.twice + 1) * (b.qbar_prime.twice + 1) -
            static_cast<std::int64_t>(b.p.twice) * b.p_prime.twice;
        if (lin2 % 2 != 0 || const4 % 4 != 0)
            throw internal_error("beta monomial coefficients are not integers for " + to_string(s));
        return {-lin2 / 2, const4 / 4};
    }
    // gamma: -z + 2 sum J_k j_k + sum of all six spins + 1/2
    const auto d = s.doubled();
    std::int64_t jj4 = 0, sum2 = 0;
    for (int k = 0; k < 3; ++k) jj4 += static_cast<std::int64_t>(d[k]) * d[k + 3];
    for (int v : d) sum2 += v;
    const std::int64_t const2 = jj4 + sum2 + 1;
    if (const2 % 2 != 0)
        throw internal_error("gamma monomial constant is not an integer for " + to_string(s));
    return {-1, const2 / 2};
}

} // namespace

char parity_letter(Parity p) {
    switch (p) {
    case Parity::alpha: return 'a';
    case Parity::beta: return 'b';
    case Parity::gamma: return 'g';
    }
    throw std::domain_error("bad parity tag");
}

std::string parity_marker(Parity p) { return std::string("<") + parity_letter(p) + ">"; }

Parity parity_of(const SixJSymbol& s) {
    const auto pd = triangles(s).p_doubled();
    int half = 0;
    for (int v : pd) half += v & 1;
    switch (half) {
    case 0: return Parity::alpha;
    case 2: return Parity::beta;
    case 4: return Parity::gamma;
    default:
        throw internal_error("odd count of half-integer triangles for " + to_string(s));
    }
}

BetaLabels beta_decomposition(const SixJSymbol& s) {
    if (parity_of(s) != Parity::beta)
        throw std::domain_error("beta decomposition of a non-beta symbol " + to_string(s));
    const TriangleQuad tq = triangles(s);
    BetaLabels out;
    std::vector<int> ints, halves;
    for (int v : tq.p_doubled()) (v & 1 ? halves : ints).push_back(v);
    std::sort(ints.begin(), ints.end());
    std::sort(halves.begin(), halves.end());
    out.p = HalfInt{ints[0]};
    out.p_prime = HalfInt{ints[1]};
    out.pbar = HalfInt{halves[0]};
    out.pbar_prime = HalfInt{halves[1]};
    const auto qd = tq.q_doubled();
    std::vector<int> qbars;
    for (int l = 0; l < 3; ++l) {
        if (qd[static_cast<std::size_t>(l)] & 1) {
            qbars.push_back(qd[static_cast<std::size_t>(l)]);
        } else {
            out.q_int = HalfInt{qd[static_cast<std::size_t>(l)]};
            out.l_star = l + 1;
        }
    }
    if (qbars.size() != 2)
        throw internal_error("beta symbol without a unique integer quadrangle " + to_string(s));
    std::sort(qbars.begin(), qbars.end());
    out.qbar = HalfInt{qbars[0]};
    out.qbar_prime = HalfInt{qbars[1]};
    return out;
}

std::int64_t monomial(Parity parity, const SixJSymbol& s, std::int64_t z) {
    const MonoCoeffs mc = mono_coeffs(parity, s);
    return mc.c1 * z + mc.c0;
}

SqrtRationalValue eval_super_6j(const SixJSymbol& s) {
    if (!is_super_valid(s)) {
        if (auto v = first_triangle_violation(s))
            throw std::domain_error("invalid super 6-j " + to_string(s) + ": q" +
                                    std::to_string(v->first) + " - p" + std::to_string(v->second) +
                                    " is negative");
        throw std::domain_error("invalid super 6-j " + to_string(s) + ": negative spin");
    }
    const TriangleQuad tq = triangles(s);
    const auto pd = tq.p_doubled();
    const auto qd = tq.q_doubled();

    detail::SumSpec spec;
    for (std::size_t i = 0; i < 4; ++i) spec.zp[i] = (pd[i] + 1) / 2; // [p_i + 1/2]
    for (std::size_t k = 0; k < 3; ++k) spec.qz[k] = (qd[k] + 1) / 2; // [q_k + 1/2]

    const MonoCoeffs mc = mono_coeffs(parity_of(s), s);
    spec.c1 = mc.c1;
    spec.c0 = mc.c0;

    // (-1)^{4 sum J_k j_k}: the exponent equals sum (2J_k)(2j_k), an integer.
    const auto d = s.doubled();
    std::int64_t jj4 = 0;
    for (int k = 0; k < 3; ++k) jj4 += static_cast<std::int64_t>(d[k]) * d[k + 3];
    spec.negate = (jj4 & 1) != 0;

    auto& ctx = detail::EvalContext::local();
    int maxarg = 0;
    for (int q : spec.qz) maxarg = std::max(maxarg, q + 1);
    ctx.begin(maxarg);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < 4; ++i) ctx.add_factorial((qd[k] - pd[i]) / 2); // [q_k - p_i]
    for (std::size_t i = 0; i < 4; ++i) ctx.sub_factorial(spec.zp[i]);
    return ctx.eval_sum(spec);
}

} // namespace regge6j
