#pragma once

// Test-only reference implementations, kept deliberately independent of the
// library's evaluation path: plain factorial tables, term-by-term rational
// sums and trial-division squarefree extraction. Slow but unarguable.

#include "regge6j/sqrt_rational.hpp"
#include "regge6j/symbol.hpp"

namespace regge6j::testing {

BigInt oracle_factorial(int n);

// Canonical r*sqrt(s) from the sign of the value and the exact square.
SqrtRationalValue oracle_from_squared(int sign, const BigRational& squared);

SqrtRationalValue oracle_eval_6j(const SixJSymbol& s);
SqrtRationalValue oracle_eval_super_6j(const SixJSymbol& s);

} // namespace regge6j::testing
