#pragma once

#include <array>
#include <optional>
#include <vector>

#include "regge6j/symbol.hpp"

namespace regge6j {

// One of the five Regge transformations as an exact 6x6 matrix acting on
// the spin vector (J1,J2,J3,j1,j2,j3). Entries are half-integers, stored
// doubled so everything stays integral.
struct ReggeMatrix {
    int kappa = 0;
    std::array<std::array<int, 6>, 6> twice_entries{};
};

// The constant matrix R_kappa, kappa in [1,5]. Throws std::domain_error
// for any other kappa.
const ReggeMatrix& regge_matrix(int kappa);

// Applies the kappa-th Regge transformation. Returns nullopt when the
// needed quadrangle is half-integer (the image would contain forbidden
// quarter-integer spins); that is an expected outcome, not a failure.
// For kappa in [1,3] the image is the cyclic q-form
//   { J_l  q_l/2-J_m  q_l/2-J_n ; j_l  q_l/2-j_m  q_l/2-j_n },
// an S4 rearrangement of the matrix product R_kappa J; for kappa in {4,5}
// the image equals the matrix product exactly. Either way the image is
// super-valid and has the same exact value as the input.
std::optional<SixJSymbol> apply_regge(int kappa, const SixJSymbol& s);

// The raw matrix product R_kappa J with the same rejection rule.
std::optional<SixJSymbol> apply_regge_matrix(int kappa, const SixJSymbol& s);

// Which transformations apply: all five for standard symbols and for super
// parities alpha/gamma; exactly one (at the unique integer quadrangle) for
// beta.
std::vector<int> applicable_set(const SixJSymbol& s, Mode mode);

} // namespace regge6j
