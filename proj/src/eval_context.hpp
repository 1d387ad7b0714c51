#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "regge6j/errors.hpp"
#include "regge6j/prime_exponents.hpp"
#include "regge6j/sqrt_rational.hpp"

namespace regge6j::detail {

// Accumulates a product of small positive factors, spilling into a big
// integer only when the running 64-bit chunk would overflow.
class ChunkMul {
public:
    void mul(std::uint64_t f) {
        if (chunk_ > max_u64 / f) {
            acc_ *= chunk_;
            chunk_ = f;
        } else {
            chunk_ *= f;
        }
    }
    BigInt value() {
        acc_ *= chunk_;
        chunk_ = 1;
        return std::move(acc_);
    }

private:
    static constexpr std::uint64_t max_u64 = ~std::uint64_t{0};
    BigInt acc_ = 1;
    std::uint64_t chunk_ = 1;
};

// One single-sum evaluation:
//   value = sign * sqrt(prefactor) * sum_{z=max zp}^{min qz}
//           (-1)^z z! (c1 z + c0) / (prod_i (z - zp_i)! prod_k (qz_k - z)!)
// The prefactor is staged through add_factorial/sub_factorial between
// begin() and eval_sum().
struct SumSpec {
    std::array<int, 4> zp;
    std::array<int, 3> qz;
    std::int64_t c1 = 0;
    std::int64_t c0 = 1;
    bool negate = false;
};

// Per-thread scratch: prime list, factorial factorizations (Legendre
// prefix table) and big-integer factorials up to the largest argument seen.
class EvalContext {
public:
    static EvalContext& local();

    void begin(int max_factorial_arg);
    void add_factorial(int n) { axpy(n, +1); }
    void sub_factorial(int n) { axpy(n, -1); }
    SqrtRationalValue eval_sum(const SumSpec& spec);

private:
    void ensure(int n);
    void axpy(int n, int sign);

    int nmax_ = -1;
    std::size_t nprimes_ = 0;
    std::vector<int> primes_;
    std::vector<std::int32_t> fexp_; // row n at [n * nprimes_]
    std::vector<BigInt> fact_;
    std::vector<std::int64_t> pref_;
};

} // namespace regge6j::detail
