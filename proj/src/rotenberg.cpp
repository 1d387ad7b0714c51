#include "regge6j/rotenberg.hpp"

#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "regge6j/errors.hpp"

namespace regge6j {

namespace {

int base_index(std::int64_t p) {
    for (std::size_t i = 0; i < kBasePrimes.size(); ++i)
        if (kBasePrimes[i] == p) return static_cast<int>(i);
    return -1;
}

// Trial division over the small-prime list. Inputs here are built from
// factorial quotients and their squarefree parts, so every factor is small.
void factor_into(BigInt n, std::int64_t weight, std::map<std::int64_t, std::int64_t>& acc) {
    if (n < 0) throw internal_error("factoring a negative encoder component");
    for (int p : small_primes()) {
        if (BigInt(p) * p > n) break;
        std::int64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) acc[p] += weight * e;
    }
    if (n > 1) {
        if (n >= (BigInt(1) << 32))
            throw internal_error("encoder component has a prime factor beyond the supported range");
        acc[static_cast<std::int64_t>(n)] += weight;
    }
}

} // namespace

RotenbergLine to_rotenberg(const SqrtRationalValue& v) {
    RotenbergLine line;
    if (v.is_zero()) {
        line.sign_multiplier = 0;
        return line;
    }
    line.sign_multiplier = numerator(v.r);

    // Radicand exponents contributed by 1/den(r)^2 and by the squarefree s.
    std::map<std::int64_t, std::int64_t> exps;
    factor_into(denominator(v.r), -2, exps);
    factor_into(numerator(v.s), 1, exps);
    factor_into(denominator(v.s), -1, exps);

    for (const auto& [p, e] : exps) {
        if (e == 0) continue;
        if (int idx = base_index(p); idx >= 0)
            line.base_exps[static_cast<std::size_t>(idx)] = e;
        else
            line.overflow.emplace_back(p, e);
    }
    return line;
}

SqrtRationalValue from_rotenberg(const RotenbergLine& line) {
    if (line.sign_multiplier == 0) return SqrtRationalValue{};
    // Decoding re-canonicalizes, so any line with the right radicand decodes
    // to the one (r, s) form, whatever its multiplier's prime content.
    PrimeExponents pre;
    for (std::size_t i = 0; i < kBasePrimes.size(); ++i) pre.mul_pow(kBasePrimes[i], line.base_exps[i]);
    for (const auto& [p, e] : line.overflow) pre.mul_pow(p, e);
    return canonical_sqrt(pre, BigRational(line.sign_multiplier));
}

std::string render(const RotenbergLine& line) {
    std::string out;
    for (std::int64_t e : line.base_exps) {
        out += std::to_string(e);
        out += ' ';
    }
    out += '&';
    out += line.sign_multiplier.str();
    for (const auto& [p, e] : line.overflow) {
        out += ' ';
        out += std::to_string(p);
        out += '^';
        out += std::to_string(e);
    }
    return out;
}

RotenbergLine parse_rotenberg(std::string_view text) {
    std::istringstream in{std::string(text)};
    RotenbergLine line;
    for (auto& e : line.base_exps)
        if (!(in >> e)) throw std::invalid_argument("bad exponent field");
    std::string tok;
    if (!(in >> tok) || tok.empty() || tok[0] != '&')
        throw std::invalid_argument("missing & multiplier");
    line.sign_multiplier = BigInt(tok.substr(1));
    while (in >> tok) {
        const auto caret = tok.find('^');
        if (caret == std::string::npos) throw std::invalid_argument("bad overflow factor: " + tok);
        std::int64_t p = 0, e = 0;
        auto r1 = std::from_chars(tok.data(), tok.data() + caret, p);
        auto r2 = std::from_chars(tok.data() + caret + 1, tok.data() + tok.size(), e);
        if (r1.ec != std::errc{} || r2.ec != std::errc{} || r2.ptr != tok.data() + tok.size())
            throw std::invalid_argument("bad overflow factor: " + tok);
        line.overflow.emplace_back(p, e);
    }
    return line;
}

} // namespace regge6j
