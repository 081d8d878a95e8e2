#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "triuniv/achievability.hpp"
#include "triuniv/catalog.hpp"
#include "triuniv/oracles.hpp"
#include "triuniv/reduction.hpp"

using namespace triuniv;

namespace {

TriSum sum_of(std::initializer_list<std::int64_t> coeffs) {
    return TriSum::canonicalize(std::vector<std::int64_t>(coeffs));
}

// 3-adic exclusion m = 3^(2u+1) * (3v + r): odd power of 3 times a residue-r
// cofactor.
bool excluded_power_of_three(std::uint64_t m, std::uint64_t r) {
    std::size_t e = 0;
    while (m % 3 == 0) {
        m /= 3;
        ++e;
    }
    return e % 2 == 1 && m % 3 == r;
}

}  // namespace

TEST_CASE("shifted target is 16n plus the coefficient sum") {
    for (std::uint64_t n : {0ull, 1ull, 7ull, 500ull})
        CHECK(shifted_target(sum_of({1, 1, 8}), n) == 16 * n + 10);
    CHECK(shifted_target(sum_of({1, 1, 6, 6}), 0) == 14);
    CHECK(shifted_target(sum_of({2, 2, 3, 3}), 0) == 10);
}

TEST_CASE("substitution exists exactly when one coefficient is odd") {
    CHECK(TernarySectionForm({2, 2, 3}).has_substitution());
    CHECK(TernarySectionForm({2, 2, 5}).has_substitution());
    CHECK(TernarySectionForm({2, 6, 7}).has_substitution());
    CHECK_FALSE(TernarySectionForm({1, 1, 8}).has_substitution());   // two odd
    CHECK_FALSE(TernarySectionForm({1, 3, 5}).has_substitution());   // three odd
    CHECK_FALSE(TernarySectionForm({2, 4, 6}).has_substitution());   // none odd
    CHECK(TernarySectionForm({2, 2, 3}).parity_pattern() == std::array<int, 3>{0, 0, 1});
    CHECK_THROWS_AS(TernarySectionForm({1, 1, 8}).substituted_form(), std::logic_error);
}

TEST_CASE("solutions of the substituted form induce all-odd diagonal values") {
    const TernarySectionForm section({2, 2, 5});
    for (std::uint64_t n = 0; n <= 120; ++n) {
        const std::uint64_t m = 16 * n + 9;  // coefficient sum of (2,2,5)
        const auto witness = section.diagonal_witness(m);
        if (!witness) continue;
        for (std::int64_t y : *witness) CHECK(((y % 2) + 2) % 2 == 1);
        const auto& [y1, y2, y3] = *witness;
        CHECK(2 * y1 * y1 + 2 * y2 * y2 + 5 * y3 * y3 == static_cast<std::int64_t>(m));
    }
}

TEST_CASE("substitution route agrees with the direct odd-variable search") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<std::uint64_t> even_coeff(1, 12), odd_coeff(0, 12);
    for (int iter = 0; iter < 40; ++iter) {
        const std::array<std::uint64_t, 3> coeffs{even_coeff(rng) * 2, even_coeff(rng) * 2,
                                                  odd_coeff(rng) * 2 + 1};
        const TernarySectionForm section(coeffs);
        REQUIRE(section.has_substitution());
        for (std::uint64_t target = 0; target <= 600; ++target)
            CHECK(section.represents_with_odd_variables(target) ==
                  diagonal_all_odd_solvable(coeffs, target));
    }
}

TEST_CASE("the x^2+(2y+z)^2+8z^2 companion form covers 16n+10") {
    const WeightedSquareForm form({1, 1, 8}, {{{{1, 0, 0}}, {{0, 2, 1}}, {{0, 0, 1}}}});
    CHECK(form.evaluate({1, 0, 1}) == 10);
    for (std::uint64_t n = 0; n <= 500; ++n) CHECK(form.solvable(16 * n + 10));
}

TEST_CASE("the 2(4x+y)^2+2y^2+3z^2 companion form covers 7 mod 8") {
    const WeightedSquareForm form({2, 2, 3}, {{{{4, 1, 0}}, {{0, 1, 0}}, {{0, 0, 1}}}});
    for (std::uint64_t m = 7; m <= 4000; m += 8) {
        if (excluded_power_of_three(m, 2)) {
            CHECK_FALSE(form.solvable(m));
            continue;
        }
        CHECK(form.solvable(m));
    }
}

TEST_CASE("weighted square forms reject degenerate input") {
    CHECK_THROWS_AS(WeightedSquareForm({1, 1, 1}, {{{{1, 0, 0}}, {{1, 0, 0}}, {{0, 1, 0}}}}),
                    std::invalid_argument);
}

TEST_CASE("tail search finds the smallest odd tails") {
    const auto t1 = tail_search(sum_of({1, 1, 6, 6}), 0);
    REQUIRE(t1.has_value());
    CHECK(t1->values == std::vector<std::int64_t>{1});
    CHECK(t1->residual == 8);

    const auto t2 = tail_search(sum_of({2, 2, 3, 3}), 0);
    REQUIRE(t2.has_value());
    CHECK(t2->values == std::vector<std::int64_t>{1});
    CHECK(t2->residual == 7);

    const auto t3 = tail_search(sum_of({1, 1, 7, 7}), 0);
    REQUIRE(t3.has_value());
    CHECK(t3->values == std::vector<std::int64_t>{1});
    CHECK(t3->residual == 9);

    CHECK_THROWS_AS(tail_search(sum_of({1, 1, 6}), 0), std::invalid_argument);
}

TEST_CASE("tail search consults the supplied oracle") {
    std::size_t calls = 0;
    const TernaryOracle reject = [&](const std::array<std::uint64_t, 3>&, std::uint64_t) {
        ++calls;
        return false;
    };
    CHECK_FALSE(tail_search(sum_of({1, 1, 6, 6}), 0, reject).has_value());
    CHECK(calls > 0);
}

TEST_CASE("reduction solver spot values") {
    CHECK_FALSE(reduction_solver(sum_of({2, 2, 5, 6}), 16));
    for (const auto& [arity, sums] : catalog::table1_expected())
        for (const TriSum& sum : sums) CHECK(reduction_solver(sum, 0));
    CHECK_THROWS_AS(reduction_solver(sum_of({1, 1}), 4), std::invalid_argument);
    CHECK_THROWS_AS(reduction_solver(sum_of({1, 1, 1}), 3), std::invalid_argument);
}

TEST_CASE("reduction solver is sound against the sweep on 1,1,6,6") {
    const TriSum sum = sum_of({1, 1, 6, 6});
    const auto seq = AchievabilitySequence::compute(sum, 2000);
    for (std::uint64_t target = 0; target <= 2000; target += 2) {
        if (reduction_solver(sum, target)) CHECK(seq.contains(target));
    }
}

TEST_CASE("reduction solver is exact on mixed ternaries in range") {
    std::mt19937_64 rng(83);
    std::uniform_int_distribution<std::int64_t> coeff(1, 9);
    for (int iter = 0; iter < 25; ++iter) {
        std::vector<std::int64_t> coeffs{coeff(rng), coeff(rng), coeff(rng), coeff(rng)};
        const TriSum sum = TriSum::canonicalize(coeffs);
        const auto seq = AchievabilitySequence::compute(sum, 600);
        for (std::uint64_t target = 0; target <= 600; target += 2)
            if (reduction_solver(sum, target)) CHECK(seq.contains(target));
    }
}
