#include "regge6j/prime_exponents.hpp"

#include <stdexcept>

namespace regge6j {

void PrimeExponents::mul_pow(std::int64_t prime, std::int64_t e) {
    if (e == 0) return;
    auto it = exps.find(prime);
    if (it == exps.end()) {
        exps.emplace(prime, e);
        return;
    }
    it->second += e;
    if (it->second == 0) exps.erase(it);
}

PrimeExponents& PrimeExponents::operator*=(const PrimeExponents& other) {
    for (const auto& [p, e] : other.exps) mul_pow(p, e);
    return *this;
}

PrimeExponents& PrimeExponents::divide_by(const PrimeExponents& other) {
    for (const auto& [p, e] : other.exps) mul_pow(p, -e);
    return *this;
}

BigRational PrimeExponents::to_rational() const {
    BigInt num = 1, den = 1;
    for (const auto& [p, e] : exps) {
        if (e > 0)
            num *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
        else
            den *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(-e));
    }
    return BigRational(num) / BigRational(den);
}

bool PrimeExponents::is_positive() const { return true; }

const std::vector<int>& small_primes() {
    static const std::vector<int> primes = [] {
        constexpr int limit = 1 << 16;
        std::vector<bool> composite(limit, false);
        std::vector<int> out;
        for (int i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (long long j = static_cast<long long>(i) * i; j < limit; j += i)
                composite[static_cast<std::size_t>(j)] = true;
        }
        return out;
    }();
    return primes;
}

PrimeExponents factor_factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial of a negative number");
    if (n >= (1 << 16)) throw std::invalid_argument("factorial argument too large");
    PrimeExponents out;
    for (int p : small_primes()) {
        if (p > n) break;
        std::int64_t e = 0;
        for (std::int64_t q = n / p; q > 0; q /= p) e += q;
        out.exps.emplace(p, e);
    }
    return out;
}

} // namespace regge6j
