#pragma once

#include "regge6j/sqrt_rational.hpp"
#include "regge6j/symbol.hpp"

namespace regge6j {

// Exact standard 6-j value from the single z-sum over [max p_i, min q_k]:
//   sqrt( prod (q_k - p_i)! / prod (p_i + 1)! )
//     * sum_z (-1)^z (z+1)! / ( prod_i (z - p_i)! prod_k (q_k - z)! )
// Throws std::domain_error on invalid symbols, naming the violated
// (k, i) pair when a quadrangle-triangle difference is negative.
SqrtRationalValue eval_6j(const SixJSymbol& s);

} // namespace regge6j
