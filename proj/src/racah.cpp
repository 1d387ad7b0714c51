#include "regge6j/racah.hpp"

#include <stdexcept>

#include "eval_context.hpp"

namespace regge6j {

SqrtRationalValue eval_6j(const SixJSymbol& s) {
    if (!is_standard_valid(s)) {
        if (auto v = first_triangle_violation(s))
            throw std::domain_error("invalid 6-j " + to_string(s) + ": q" +
                                    std::to_string(v->first) + " - p" + std::to_string(v->second) +
                                    " is negative");
        throw std::domain_error("invalid 6-j " + to_string(s) +
                                ": half-integer triangle or negative spin");
    }
    const TriangleQuad tq = triangles(s);
    const auto pd = tq.p_doubled();
    const auto qd = tq.q_doubled();

    detail::SumSpec spec;
    for (int i = 0; i < 4; ++i) spec.zp[static_cast<std::size_t>(i)] = pd[static_cast<std::size_t>(i)] / 2;
    for (int k = 0; k < 3; ++k) spec.qz[static_cast<std::size_t>(k)] = qd[static_cast<std::size_t>(k)] / 2;
    spec.c1 = 1; // (z+1)! = z! * (z+1)
    spec.c0 = 1;

    auto& ctx = detail::EvalContext::local();
    int maxarg = 0;
    for (int q : spec.qz) maxarg = std::max(maxarg, q + 1);
    ctx.begin(maxarg);
    for (int q : spec.qz)
        for (int p : spec.zp) ctx.add_factorial(q - p);
    for (int p : spec.zp) ctx.sub_factorial(p + 1);
    return ctx.eval_sum(spec);
}

} // namespace regge6j
