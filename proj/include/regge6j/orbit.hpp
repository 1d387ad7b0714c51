#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "regge6j/symbol.hpp"

namespace regge6j {

// The Regge-partition set a symbol belongs to. The index doubles as the
// S4-class count of the closure: 1, 2, 3 or 6 classes (24/48/72/144
// rearranged aspects).
enum class PartitionClass { S0, S1, S2, S5 };

int class_index(PartitionClass c); // 0, 1, 2, 5
std::string to_string(PartitionClass c);

// The closure of a symbol under S4 rearrangements and every applicable
// Regge transformation, reduced to canonical representatives. The input's
// canonical form comes first; the rest follow in ascending order.
struct OrbitReport {
    std::vector<SixJSymbol> representatives;
    std::int64_t closure_size = 0; // always 24 * representatives.size()
    PartitionClass cls = PartitionClass::S0;
};

// The 24 aspects: 3! column permutations composed with the four
// upper/lower exchanges of two columns. Duplicates are kept.
std::array<SixJSymbol, 24> s4_rearrangements(const SixJSymbol& s);

// Lexicographically smallest doubled 6-tuple among the 24 aspects.
SixJSymbol canonical_form(const SixJSymbol& s);
bool is_canonical(const SixJSymbol& s);

// Brute-force closure: transitively applies every applicable Regge
// transformation to every aspect of every representative found.
OrbitReport regge_star(const SixJSymbol& s, Mode mode);

// Partition class from the equality patterns of the triangles and
// quadrangles alone (for beta symbols, of the labelled quantities).
PartitionClass classify(const SixJSymbol& s, Mode mode);

// Ground truth: class read off the closure size. A closure with 4 or 5
// representatives raises internal_error.
PartitionClass classify_oracle(const SixJSymbol& s, Mode mode);

// "canonical-doubled-6-tuple  class  closure-size  representative-count"
std::string report_line(const OrbitReport& report);

} // namespace regge6j
