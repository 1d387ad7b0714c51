#include <doctest.h>

#include <filesystem>
#include <set>
#include <fstream>
#include <sstream>

#include "regge6j/racah.hpp"
#include "regge6j/table.hpp"

using namespace regge6j;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) : path(fs::temp_directory_path() / tag) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

TableConfig config_for(HalfInt max_spin, Mode mode, bool classify, fs::path out, int workers = 1) {
    TableConfig c;
    c.max_spin = max_spin;
    c.mode = mode;
    c.classify = classify;
    c.output_dir = std::move(out);
    c.workers = workers;
    return c;
}

} // namespace

TEST_CASE("enumerate_symbols") {
    SUBCASE("spin 0, standard: just the all-zero symbol") {
        const auto syms = enumerate_symbols(config_for(HalfInt{0}, Mode::standard, false, {}));
        REQUIRE(syms.size() == 1);
        CHECK(syms[0] == make_symbol(0, 0, 0, 0, 0, 0));
    }
    SUBCASE("spin 1/2, super: five canonical symbols") {
        const auto syms = enumerate_symbols(config_for(HalfInt{1}, Mode::super, false, {}));
        REQUIRE(syms.size() == 5);
        CHECK(syms[0] == make_symbol(0, 0, 0, 0, 0, 0));
        CHECK(syms[1] == make_symbol(0, 0, 0, 1, 1, 1));
        CHECK(syms[2] == make_symbol(0, 1, 1, 0, 1, 1));
        CHECK(syms[3] == make_symbol(0, 1, 1, 1, 1, 1));
        CHECK(syms[4] == make_symbol(1, 1, 1, 1, 1, 1));
    }
    SUBCASE("spin 1, standard: eleven canonical symbols, ascending") {
        const auto syms = enumerate_symbols(config_for(HalfInt{2}, Mode::standard, false, {}));
        CHECK(syms.size() == 11);
        for (std::size_t i = 0; i < syms.size(); ++i) {
            CHECK(is_canonical(syms[i]));
            CHECK(is_standard_valid(syms[i]));
            if (i) CHECK(syms[i - 1] < syms[i]);
        }
    }
    SUBCASE("agrees with a brute-force canonical dedup") {
        for (Mode mode : {Mode::standard, Mode::super}) {
            const int D = 5;
            std::set<SixJSymbol> expected;
            std::array<int, 6> t{};
            for (t[0] = 0; t[0] <= D; ++t[0])
                for (t[1] = 0; t[1] <= D; ++t[1])
                    for (t[2] = 0; t[2] <= D; ++t[2])
                        for (t[3] = 0; t[3] <= D; ++t[3])
                            for (t[4] = 0; t[4] <= D; ++t[4])
                                for (t[5] = 0; t[5] <= D; ++t[5]) {
                                    const SixJSymbol s = make_symbol(t);
                                    if (is_valid(s, mode)) expected.insert(canonical_form(s));
                                }
            const auto syms = enumerate_symbols(config_for(HalfInt{D}, mode, false, {}));
            CHECK(syms == std::vector<SixJSymbol>(expected.begin(), expected.end()));
        }
    }
}

TEST_CASE("render_line worked examples") {
    SUBCASE("all-zero super line") {
        const auto line = render_line(make_symbol(0, 0, 0, 0, 0, 0), SqrtRationalValue{1, 1},
                                      Parity::alpha);
        CHECK(line == "0 0 0 0 0 0 <a> 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 &1");
    }
    SUBCASE("worked standard value") {
        const SixJSymbol s = make_symbol(18, 16, 12, 3, 9, 13);
        const auto line = render_line(s, eval_6j(s), std::nullopt);
        CHECK(line == "18 16 12 3 9 13 -2 0 -1 -1 0 -1 -1 0 1 0 0 0 0 0 0 0 &-1");
    }
    SUBCASE("overflow factor") {
        const auto line =
            render_line(make_symbol(0, 0, 0, 0, 0, 0), SqrtRationalValue{3, 59}, std::nullopt);
        CHECK(line == "0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 &3 59^1");
    }
}

TEST_CASE("parse_line inverts render_line") {
    const SixJSymbol s = make_symbol(18, 16, 12, 3, 9, 13);
    const auto value = eval_6j(s);
    const TableLine parsed = parse_line(render_line(s, value, std::nullopt), Mode::standard);
    CHECK(parsed.symbol == s);
    CHECK(parsed.value == value);
    CHECK(!parsed.parity.has_value());

    const TableLine sup =
        parse_line(render_line(s, value, Parity::alpha), Mode::super);
    CHECK(sup.parity == Parity::alpha);
    CHECK(sup.value == value);

    CHECK_THROWS_AS(parse_line("1 2 3", Mode::standard), std::invalid_argument);
}

TEST_CASE("file naming and roster") {
    CHECK(table_file_name(Mode::super) == "supertable.txt");
    CHECK(table_file_name(Mode::standard) == "standardtable.txt");
    CHECK(class_file_name(Mode::super, Parity::beta, PartitionClass::S1) == "superb1.txt");
    CHECK(class_file_name(Mode::standard, Parity::alpha, PartitionClass::S5) == "standarda5.txt");
    CHECK(class_roster(Mode::super).size() == 10);
    CHECK(class_roster(Mode::standard).size() == 4);
}

TEST_CASE("run writes the spin-0 roster") {
    TempDir dir("regge6j_test_run0");
    CHECK(run(config_for(HalfInt{0}, Mode::super, true, dir.path)) == 0);
    const auto table = lines_of(slurp(dir.path / "supertable.txt"));
    REQUIRE(table.size() == 1);
    CHECK(table[0] == "0 0 0 0 0 0 <a> 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 &1");
    CHECK(lines_of(slurp(dir.path / "supera0.txt")).size() == 1);
    for (const auto& [parity, cls] : class_roster(Mode::super)) {
        const auto file = dir.path / class_file_name(Mode::super, parity, cls);
        REQUIRE(fs::exists(file));
        if (file.filename() != "supera0.txt") CHECK(slurp(file).empty());
    }
}

TEST_CASE("run output is byte-identical across worker counts") {
    TempDir one("regge6j_test_w1");
    TempDir four("regge6j_test_w4");
    REQUIRE(run(config_for(HalfInt{4}, Mode::super, true, one.path, 1)) == 0);
    REQUIRE(run(config_for(HalfInt{4}, Mode::super, true, four.path, 4)) == 0);
    CHECK(slurp(one.path / "supertable.txt") == slurp(four.path / "supertable.txt"));
    for (const auto& [parity, cls] : class_roster(Mode::super)) {
        const auto name = class_file_name(Mode::super, parity, cls);
        CHECK(slurp(one.path / name) == slurp(four.path / name));
    }
    // class files partition the table
    std::size_t class_lines = 0;
    for (const auto& [parity, cls] : class_roster(Mode::super))
        class_lines += lines_of(slurp(one.path / class_file_name(Mode::super, parity, cls))).size();
    CHECK(class_lines == lines_of(slurp(one.path / "supertable.txt")).size());
}

TEST_CASE("run reports unwritable output") {
    TempDir dir("regge6j_test_unwritable");
    const fs::path blocker = dir.path / "blocker";
    std::ofstream(blocker).put('x');
    CHECK(run(config_for(HalfInt{0}, Mode::super, false, blocker / "sub")) != 0);
}

TEST_CASE("standard-mode table round trip") {
    TempDir dir("regge6j_test_std");
    REQUIRE(run(config_for(HalfInt{4}, Mode::standard, true, dir.path)) == 0);
    const auto table = lines_of(slurp(dir.path / "standardtable.txt"));
    CHECK(table.size() == 65);
    for (const auto& line : table) {
        const TableLine parsed = parse_line(line, Mode::standard);
        CHECK(parsed.value == eval_6j(parsed.symbol));
    }
    for (const auto& [parity, cls] : class_roster(Mode::standard))
        CHECK(fs::exists(dir.path / class_file_name(Mode::standard, parity, cls)));
}
