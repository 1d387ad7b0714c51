#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "regge6j/orbit.hpp"
#include "regge6j/rotenberg.hpp"
#include "regge6j/super.hpp"
#include "regge6j/symbol.hpp"

namespace regge6j {

struct TableConfig {
    HalfInt max_spin{0};
    Mode mode = Mode::super;
    bool classify = false;
    std::filesystem::path output_dir;
    int workers = 1;
};

// Every valid symbol (per mode) with all spins <= max_spin, each exactly
// once as its canonical form, ascending in the doubled 6-tuple order.
std::vector<SixJSymbol> enumerate_symbols(const TableConfig& config);

// "2J1 2J2 2J3 2j1 2j2 2j3 [<a>] e1 .. e16 &mult [p^e ...]"; the parity
// marker is present in super mode only.
std::string render_line(const SixJSymbol& s, const SqrtRationalValue& value,
                        std::optional<Parity> parity);

struct TableLine {
    SixJSymbol symbol;
    SqrtRationalValue value;
    std::optional<Parity> parity;
};

TableLine parse_line(std::string_view line, Mode mode);

std::string table_file_name(Mode mode);                                   // "<mode>table.txt"
std::string class_file_name(Mode mode, Parity parity, PartitionClass cls); // "<mode><parity><class>.txt"

// The (parity, class) pairs that get a file: alpha/gamma x {0,1,2,5} and
// beta x {0,1} in super mode, alpha x {0,1,2,5} in standard mode.
std::vector<std::pair<Parity, PartitionClass>> class_roster(Mode mode);

// Generates the table (and, when configured, the per-class files) under
// output_dir. Output bytes depend only on the configuration, not on the
// worker count. Returns a process exit status; failures are reported on
// stderr. With classification enabled every symbol's predicate class is
// cross-checked against the closure oracle.
int run(const TableConfig& config);

} // namespace regge6j
