#include "eval_context.hpp"

#include <algorithm>

#include "canonical_sqrt_impl.hpp"

namespace regge6j::detail {

EvalContext& EvalContext::local() {
    static thread_local EvalContext ctx;
    return ctx;
}

void EvalContext::ensure(int n) {
    if (n <= nmax_) return;
    const int cap = std::max({n, 2 * nmax_, 64});
    primes_.clear();
    for (int p : small_primes()) {
        if (p > cap) break;
        primes_.push_back(p);
    }
    nprimes_ = primes_.size();
    fexp_.assign(static_cast<std::size_t>(cap + 1) * nprimes_, 0);
    fact_.assign(static_cast<std::size_t>(cap + 2), 1);
    for (int m = 1; m <= cap; ++m) {
        auto* row = &fexp_[static_cast<std::size_t>(m) * nprimes_];
        const auto* prev = &fexp_[static_cast<std::size_t>(m - 1) * nprimes_];
        std::copy(prev, prev + nprimes_, row);
        int rest = m;
        for (std::size_t i = 0; i < nprimes_ && rest > 1; ++i) {
            while (rest % primes_[i] == 0) {
                rest /= primes_[i];
                ++row[i];
            }
        }
        fact_[static_cast<std::size_t>(m)] = fact_[static_cast<std::size_t>(m - 1)] * m;
    }
    fact_[static_cast<std::size_t>(cap + 1)] = fact_[static_cast<std::size_t>(cap)] * (cap + 1);
    nmax_ = cap;
}

void EvalContext::begin(int max_factorial_arg) {
    ensure(max_factorial_arg);
    pref_.assign(nprimes_, 0);
}

void EvalContext::axpy(int n, int sign) {
    const auto* row = &fexp_[static_cast<std::size_t>(n) * nprimes_];
    for (std::size_t i = 0; i < nprimes_; ++i) pref_[i] += sign * static_cast<std::int64_t>(row[i]);
}

SqrtRationalValue EvalContext::eval_sum(const SumSpec& spec) {
    const int zmin = *std::max_element(spec.zp.begin(), spec.zp.end());
    const int zmax = *std::min_element(spec.qz.begin(), spec.qz.end());
    if (zmin > zmax) throw internal_error("empty summation range on a valid symbol");

    // The terms share the denominator prod (zmax-zp_i)! (qz_k-zmin)!, which
    // moves under the radical as a squared factor; the sum itself then stays
    // an integer.
    for (int a : spec.zp) axpy(zmax - a, -2);
    for (int b : spec.qz) axpy(b - zmin, -2);

    BigInt num = 0;
    for (int z = zmin; z <= zmax; ++z) {
        const std::int64_t mono = spec.c1 * z + spec.c0;
        if (mono == 0) continue;
        ChunkMul cm;
        for (int a : spec.zp)
            for (int t = z - a + 1; t <= zmax - a; ++t) cm.mul(static_cast<std::uint64_t>(t));
        for (int b : spec.qz)
            for (int t = b - z + 1; t <= b - zmin; ++t) cm.mul(static_cast<std::uint64_t>(t));
        BigInt term = fact_[static_cast<std::size_t>(z)] * cm.value();
        term *= mono;
        if (z & 1)
            num -= term;
        else
            num += term;
    }

    BigRational sum(num);
    if (spec.negate) sum = -sum;
    return canonical_sqrt_impl(
        [&](auto&& fn) {
            for (std::size_t i = 0; i < nprimes_; ++i)
                if (pref_[i]) fn(primes_[i], pref_[i]);
        },
        sum);
}

} // namespace regge6j::detail
