#pragma once

#include <cstdint>
#include <string>

#include "regge6j/sqrt_rational.hpp"
#include "regge6j/symbol.hpp"

namespace regge6j {

// Parity of a super symbol: how many of the four triangles are
// half-integer (alpha: none, beta: two, gamma: all four).
enum class Parity { alpha, beta, gamma };

char parity_letter(Parity p);          // 'a' / 'b' / 'g'
std::string parity_marker(Parity p);   // "<a>" / "<b>" / "<g>"

// The distinguished quantities of a beta symbol: two integer triangles
// p <= p', two half-integer triangles pbar <= pbar', the unique integer
// quadrangle q_int at index l_star (1-based) and the two half-integer
// quadrangles qbar <= qbar'.
struct BetaLabels {
    HalfInt p, p_prime;
    HalfInt pbar, pbar_prime;
    HalfInt q_int;
    int l_star = 0;
    HalfInt qbar, qbar_prime;
};

// The count of half-integer triangles is provably even for spins in (1/2)Z;
// a count of 1 or 3 raises internal_error.
Parity parity_of(const SixJSymbol& s);

// Throws std::domain_error when the symbol is not beta.
BetaLabels beta_decomposition(const SixJSymbol& s);

// The degree-<=1 monomial Pi_pi(z) of the super single-sum formula.
// Always integer-valued; a fractional coefficient raises internal_error.
std::int64_t monomial(Parity parity, const SixJSymbol& s, std::int64_t z);

// Exact super 6-j value:
//   (-1)^{4 sum J_k j_k} sqrt( prod [q_k-p_i]! / prod [p_i+1/2]! )
//     * sum_z (-1)^z z! Pi_pi(z) / ( prod_i (z-[p_i+1/2])! prod_k ([q_k+1/2]-z)! )
// with [.] the integer part and z over [max [p_i+1/2], min [q_k+1/2]].
SqrtRationalValue eval_super_6j(const SixJSymbol& s);

} // namespace regge6j
