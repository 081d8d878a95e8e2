#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "triuniv/achievability.hpp"
#include "triuniv/oracles.hpp"

using namespace triuniv;

namespace {

TriSum sum_of(std::initializer_list<std::int64_t> coeffs) {
    return TriSum::canonicalize(std::vector<std::int64_t>(coeffs));
}

TriSum random_sum(std::mt19937_64& rng, std::size_t max_arity, std::int64_t max_coeff) {
    std::uniform_int_distribution<std::size_t> arity(1, max_arity);
    std::uniform_int_distribution<std::int64_t> coeff(1, max_coeff);
    std::vector<std::int64_t> coeffs(arity(rng));
    for (auto& c : coeffs) c = coeff(rng);
    return TriSum::canonicalize(coeffs);
}

}  // namespace

TEST_CASE("achievability matches the frozen brute-force sets") {
    // Pairs from {0,1,3,6,10,15}: evens reachable by T+T up to 16.
    const auto pair_seq = AchievabilitySequence::compute(sum_of({1, 1}), 16);
    const std::set<std::uint64_t> even_expected{0, 2, 4, 6, 10, 12, 16};
    for (std::uint64_t n = 0; n <= 16; n += 2)
        CHECK(pair_seq.contains(n) == (even_expected.count(n) > 0));

    const auto unary = AchievabilitySequence::compute(sum_of({1}), 6);
    CHECK(unary.values_up_to(6) == std::vector<std::uint64_t>{0, 1, 3, 6});

    // Sums of three triangular numbers cover everything.
    const auto gauss = AchievabilitySequence::compute(sum_of({1, 1, 1}), 2000);
    for (std::uint64_t n = 0; n <= 2000; ++n) CHECK(gauss.contains(n));
}

TEST_CASE("bits[0] is set for every sum") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const TriSum sum = random_sum(rng, 6, 60);
        CHECK(AchievabilitySequence::compute(sum, 64).contains(0));
    }
    CHECK(AchievabilitySequence::compute(TriSum{}, 64).contains(0));
    CHECK(AchievabilitySequence::compute(TriSum{}, 64).values_up_to(64) ==
          std::vector<std::uint64_t>{0});
}

TEST_CASE("represents knows the classic small non-representable targets") {
    CHECK_FALSE(represents(sum_of({1}), 2));
    CHECK_FALSE(represents(sum_of({2}), 4));
    CHECK_FALSE(represents(sum_of({1, 2}), 4));
    CHECK(represents(sum_of({1, 1, 1}), 12345));
}

TEST_CASE("coefficient extension is the union of shifted copies") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> coeff(1, 20);
    const std::uint64_t bound = 300;
    for (int iter = 0; iter < 30; ++iter) {
        const TriSum base = random_sum(rng, 4, 20);
        const std::uint64_t c = static_cast<std::uint64_t>(coeff(rng));
        const TriSum extended = base.appended(c);
        const auto base_seq = AchievabilitySequence::compute(base, bound);
        const auto ext_seq = AchievabilitySequence::compute(extended, bound);
        for (std::uint64_t n = 0; n <= bound; ++n) {
            bool expected = false;
            for (std::int64_t j = 0; !expected; ++j) {
                const std::uint64_t shift = c * triangular(j);
                if (shift > n) break;
                expected = base_seq.contains(n - shift);
            }
            CHECK(ext_seq.contains(n) == expected);
        }
    }
}

TEST_CASE("doubling every coefficient exactly doubles the represented set") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> coeff(1, 50);
    const std::uint64_t bound = 1000;
    for (int iter = 0; iter < 25; ++iter) {
        const std::int64_t a = coeff(rng), b = coeff(rng), c = coeff(rng);
        const TriSum base = TriSum::canonicalize({a, b, c});
        const TriSum doubled = TriSum::canonicalize({2 * a, 2 * b, 2 * c});
        const auto base_seq = AchievabilitySequence::compute(base, bound);
        const auto doubled_seq = AchievabilitySequence::compute(doubled, 2 * bound);
        for (std::uint64_t n = 0; n <= bound; ++n)
            CHECK(doubled_seq.contains(2 * n) == base_seq.contains(n));
        for (std::uint64_t n = 1; n <= 2 * bound; n += 2) CHECK_FALSE(doubled_seq.contains(n));
    }
}

TEST_CASE("odd-square oracle matches the sweep on even targets") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 20; ++iter) {
        const TriSum sum = random_sum(rng, 5, 12);
        const auto seq = AchievabilitySequence::compute(sum, 400);
        for (std::uint64_t target = 0; target <= 400; target += 2)
            CHECK(represents_even_via_odd_squares(sum, target) == seq.contains(target));
    }
}

TEST_CASE("odd-square instances keep the mod-16 shift invariant") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 30; ++iter) {
        const TriSum sum = random_sum(rng, 6, 40);
        const std::uint64_t target = 2 * (rng() % 500);
        const auto instance = OddSquareInstance::of(sum, target);
        CHECK(instance.shifted % 16 == sum.coefficient_sum() % 16);
        CHECK(instance.shifted >= sum.coefficient_sum());
        CHECK(instance.shifted == 16 * (target / 2) + sum.coefficient_sum());
    }
}

TEST_CASE("odd-square oracle spot values") {
    CHECK(represents_even_via_odd_squares(sum_of({1, 1, 8}), 0));
    CHECK(represents_even_via_odd_squares(sum_of({2, 3, 4, 7}), 0));
    CHECK_FALSE(represents_even_via_odd_squares(sum_of({1, 1}), 8));
    // x^2 + y^2 + 8z^2 = 16n + 10 with xyz odd, for the first few n.
    for (std::uint64_t n = 0; n <= 50; ++n)
        CHECK(represents_even_via_odd_squares(sum_of({1, 1, 8}), 2 * n));
    CHECK_THROWS_AS(represents_even_via_odd_squares(sum_of({1, 1}), 3),
                    std::invalid_argument);
}

TEST_CASE("representation_count spot values and equivalence with represents") {
    CHECK(representation_count(sum_of({1}), 6) == 1);
    CHECK(representation_count(sum_of({1, 1}), 2) == 1);
    CHECK(representation_count(sum_of({1, 2}), 4) == 0);
    CHECK(representation_count(sum_of({1, 1}), 4) == 2);  // (1,3) and (3,1)

    std::mt19937_64 rng(53);
    for (int iter = 0; iter < 20; ++iter) {
        const TriSum sum = random_sum(rng, 4, 15);
        const auto seq = AchievabilitySequence::compute(sum, 150);
        for (std::uint64_t n = 0; n <= 150; ++n)
            CHECK((representation_count(sum, n) > 0) == seq.contains(n));
    }
}

TEST_CASE("representation_count honours its budget") {
    CHECK_THROWS_AS(representation_count(sum_of({1, 1, 1, 1, 1, 1}), 100000, 1000),
                    BudgetError);
}

TEST_CASE("achievability rejects bounds over the budget") {
    CHECK_THROWS_AS(AchievabilitySequence::compute(sum_of({1}), 1 << 20, 1 << 10), BudgetError);
    CHECK_THROWS_AS(AchievabilitySequence::compute(sum_of({1}), 0), std::invalid_argument);
}

TEST_CASE("cache serialisation is byte-exact and round-trips") {
    AchievabilityCache cache;
    cache.get_or_compute(sum_of({1}), 7);
    std::ostringstream out;
    cache.save(out);
    CHECK(out.str() == "TRIUNIV1\nsum=1 N=7\n4b\n");

    AchievabilityCache loaded;
    std::istringstream in(out.str());
    loaded.load(in);
    auto seq = loaded.get_or_compute(sum_of({1}), 7);
    CHECK(seq->values_up_to(7) == std::vector<std::uint64_t>{0, 1, 3, 6});

    std::istringstream bad("NOTMAGIC\n");
    AchievabilityCache other;
    CHECK_THROWS_AS(other.load(bad), ParseError);

    std::istringstream short_payload("TRIUNIV1\nsum=1 N=7\n4b4b\n");
    AchievabilityCache other2;
    CHECK_THROWS_AS(other2.load(short_payload), ParseError);

    std::istringstream bad_hex("TRIUNIV1\nsum=1 N=7\nzz\n");
    AchievabilityCache other3;
    CHECK_THROWS_AS(other3.load(bad_hex), ParseError);
}

TEST_CASE("cache round-trips a multi-word record") {
    AchievabilityCache cache;
    const TriSum sum = sum_of({2, 3, 7});
    auto fresh = cache.get_or_compute(sum, 500);
    std::ostringstream out;
    cache.save(out);
    AchievabilityCache loaded;
    std::istringstream in(out.str());
    loaded.load(in);
    auto back = loaded.get_or_compute(sum, 500);
    for (std::uint64_t n = 0; n <= 500; ++n) CHECK(back->contains(n) == fresh->contains(n));
}

TEST_CASE("larger cache entries subsume smaller requests") {
    AchievabilityCache cache;
    auto big = cache.get_or_compute(sum_of({1, 5}), 2048);
    auto small = cache.get_or_compute(sum_of({1, 5}), 100);
    CHECK(big.get() == small.get());
    CHECK(cache.size() == 1);
}

TEST_CASE("concurrent readers see identical results") {
    AchievabilityCache cache;
    const TriSum sum = sum_of({1, 1, 7});
    std::array<std::vector<std::uint64_t>, 4> results;
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t] {
            results[t] = cache.get_or_compute(sum, 5000)->values_up_to(5000);
        });
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(results[t] == results[0]);
}
