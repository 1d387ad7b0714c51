#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "regge6j/orbit.hpp"
#include "regge6j/racah.hpp"
#include "regge6j/super.hpp"

using namespace regge6j;

namespace {

std::mt19937 rng(1357);

SixJSymbol random_symbol(int max_twice) {
    std::uniform_int_distribution<int> d(0, max_twice);
    return make_symbol(d(rng), d(rng), d(rng), d(rng), d(rng), d(rng));
}

} // namespace

TEST_CASE("s4_rearrangements") {
    const auto zero_aspects = s4_rearrangements(make_symbol(0, 0, 0, 0, 0, 0));
    for (const auto& a : zero_aspects) CHECK(a == make_symbol(0, 0, 0, 0, 0, 0));

    const auto ones = s4_rearrangements(make_symbol(2, 2, 2, 2, 2, 2));
    for (const auto& a : ones) CHECK(a == make_symbol(2, 2, 2, 2, 2, 2));

    // the S4-equivalent aspect used in the worked orbit example
    const auto aspects = s4_rearrangements(make_symbol(18, 16, 12, 3, 9, 13));
    CHECK(std::count(aspects.begin(), aspects.end(), make_symbol(18, 9, 13, 3, 16, 12)) == 1);
    CHECK(aspects.size() == 24);
}

TEST_CASE("canonical_form") {
    // both symbols of the worked pair share one canonical form
    CHECK(canonical_form(make_symbol(18, 9, 13, 3, 16, 12)) ==
          canonical_form(make_symbol(18, 16, 12, 3, 9, 13)));

    CHECK(canonical_form(make_symbol(0, 0, 0, 0, 0, 0)) == make_symbol(0, 0, 0, 0, 0, 0));

    // idempotence
    const SixJSymbol c = canonical_form(make_symbol(2, 4, 6, 6, 4, 2));
    CHECK(canonical_form(c) == c);
    CHECK(is_canonical(c));
}

TEST_CASE("canonical forms coincide exactly on S4-equivalent symbols") {
    for (int it = 0; it < 500; ++it) {
        const SixJSymbol s = random_symbol(9);
        const auto aspects = s4_rearrangements(s);
        const SixJSymbol c = canonical_form(s);
        for (const auto& a : aspects) CHECK(canonical_form(a) == c);

        // a symbol outside the aspect set gets a different canonical form
        const SixJSymbol t = random_symbol(9);
        const bool related = std::count(aspects.begin(), aspects.end(), t) > 0;
        CHECK((canonical_form(t) == c) == related);
    }
}

TEST_CASE("regge_star worked orbits") {
    const OrbitReport r = regge_star(make_symbol(18, 16, 12, 3, 9, 13), Mode::standard);
    CHECK(r.representatives.size() == 3);
    CHECK(r.closure_size == 72);
    CHECK(r.cls == PartitionClass::S2);
    CHECK(r.representatives.front() == canonical_form(make_symbol(18, 16, 12, 3, 9, 13)));
    const std::set<SixJSymbol> reps(r.representatives.begin(), r.representatives.end());
    CHECK(reps.count(canonical_form(make_symbol(20, 16, 10, 5, 9, 11))) == 1);
    CHECK(reps.count(canonical_form(make_symbol(20, 14, 12, 5, 7, 13))) == 1);

    const OrbitReport aaa = regge_star(make_symbol(6, 6, 6, 6, 6, 6), Mode::standard);
    CHECK(aaa.representatives.size() == 1);
    CHECK(aaa.closure_size == 24);
    CHECK(aaa.cls == PartitionClass::S0);

    // all p and all q distinct: the full 144-aspect closure
    const OrbitReport big = regge_star(make_symbol(12, 10, 6, 2, 8, 10), Mode::standard);
    CHECK(big.representatives.size() == 6);
    CHECK(big.closure_size == 144);
    CHECK(big.cls == PartitionClass::S5);

    CHECK(report_line(r) == "3 9 12 18 16 13 S2 72 3");
}

TEST_CASE("classify worked examples") {
    CHECK(classify(make_symbol(18, 16, 12, 3, 9, 13), Mode::standard) == PartitionClass::S2);
    CHECK(classify(make_symbol(6, 6, 6, 6, 6, 6), Mode::standard) == PartitionClass::S0);
    CHECK(classify(make_symbol(12, 10, 6, 2, 8, 10), Mode::standard) == PartitionClass::S5);
    CHECK(classify(make_symbol(1, 1, 2, 1, 2, 1), Mode::super) == PartitionClass::S0);
    CHECK(classify_oracle(make_symbol(18, 16, 12, 3, 9, 13), Mode::standard) == PartitionClass::S2);
    CHECK(classify_oracle(make_symbol(0, 0, 0, 0, 0, 0), Mode::standard) == PartitionClass::S0);
    CHECK(classify_oracle(make_symbol(12, 10, 6, 2, 8, 10), Mode::standard) == PartitionClass::S5);
}

TEST_CASE("classify agrees with the closure oracle on random symbols") {
    int done = 0;
    while (done < 120) {
        const SixJSymbol s = random_symbol(8);
        if (!is_super_valid(s)) continue;
        ++done;
        CHECK(classify(s, Mode::super) == classify_oracle(s, Mode::super));
        if (is_standard_valid(s))
            CHECK(classify(s, Mode::standard) == classify_oracle(s, Mode::standard));
    }
}

TEST_CASE("classification and values are constant on a closure") {
    int done = 0;
    while (done < 40) {
        const SixJSymbol s = random_symbol(7);
        if (!is_standard_valid(s)) continue;
        ++done;
        const OrbitReport r = regge_star(s, Mode::standard);
        const auto value = eval_6j(s);
        for (const SixJSymbol& rep : r.representatives) {
            CHECK(classify(rep, Mode::standard) == r.cls);
            CHECK(eval_6j(rep) == value);
            CHECK(is_canonical(rep));
        }
    }
}
