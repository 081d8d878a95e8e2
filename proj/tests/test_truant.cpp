#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "triuniv/catalog.hpp"
#include "triuniv/truant.hpp"

using namespace triuniv;

namespace {

TriSum sum_of(std::initializer_list<std::int64_t> coeffs) {
    return TriSum::canonicalize(std::vector<std::int64_t>(coeffs));
}

}  // namespace

TEST_CASE("truant spot values") {
    CHECK(truant(sum_of({1, 1, 6, 9}), 10'000).value() == 5);
    CHECK_FALSE(truant(sum_of({1, 1, 1}), 10'000).found());
    CHECK(truant(sum_of({2}), 10'000).value() == 1);
    CHECK(truant(sum_of({1}), 10'000).value() == 2);
}

TEST_CASE("even truant spot values") {
    CHECK(even_truant(sum_of({2, 2}), 10'000).value() == 10);
    CHECK(even_truant(sum_of({1, 1, 7}), 10'000).value() == 26);
    CHECK(even_truant(sum_of({1, 1, 7, 14, 35}), 10'000).value() == 40);
    CHECK_FALSE(even_truant(sum_of({1, 1, 2}), 10'000).found());
}

TEST_CASE("the empty root misses 1 and 2 first") {
    CHECK(truant(TriSum{}, 100).value() == 1);
    CHECK(even_truant(TriSum{}, 100).value() == 2);
}

TEST_CASE("bound preconditions") {
    CHECK_THROWS_AS(even_truant(sum_of({1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(even_truant(sum_of({1}), 9), std::invalid_argument);
    CHECK_THROWS_AS(truant(sum_of({1}), 0), std::invalid_argument);
}

TEST_CASE("found truants have every smaller target represented") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<std::size_t> arity(1, 5);
    std::uniform_int_distribution<std::int64_t> coeff(1, 30);
    for (int iter = 0; iter < 40; ++iter) {
        std::vector<std::int64_t> coeffs(arity(rng));
        for (auto& c : coeffs) c = coeff(rng);
        const TriSum sum = TriSum::canonicalize(coeffs);

        const TruantReport all = truant(sum, 2000);
        if (all.found())
            for (std::uint64_t t = 0; t < all.value(); ++t) CHECK(represents(sum, t));

        const TruantReport even = even_truant(sum, 2000);
        if (even.found()) {
            CHECK(even.value() % 2 == 0);
            for (std::uint64_t t = 0; t < even.value(); t += 2) CHECK(represents(sum, t));
        }

        // An even truant equals the truant when the latter is even, and
        // exceeds it when the latter is odd.
        if (all.found() && even.found()) {
            if (all.value() % 2 == 0)
                CHECK(even.value() == all.value());
            else
                CHECK(even.value() > all.value());
        }
    }
}

TEST_CASE("classify certifies and fails per the criterion") {
    const auto& e8 = catalog::e8_even();
    const UniversalityStatus ok = classify(sum_of({1, 1, 2}), e8, 100'000);
    CHECK(ok.kind == UniversalityStatus::Kind::CriterionCertified);
    CHECK(ok.criterion == "E8-even");

    const UniversalityStatus fail1 = classify(sum_of({1, 1, 7, 21, 21}), e8, 100'000);
    CHECK(fail1.kind == UniversalityStatus::Kind::FailsAt);
    CHECK(fail1.value == 26);

    const UniversalityStatus fail2 = classify(sum_of({2, 3, 4, 7}), e8, 100'000);
    CHECK(fail2.kind == UniversalityStatus::Kind::FailsAt);
    CHECK(fail2.value == 8);
}

TEST_CASE("classify raises on a bogus criterion set") {
    // {4} is far too weak to certify even universality; the cross-check
    // against the direct scan has to notice.
    CriterionSet bogus{"bogus", {4}, TargetParity::Even, "test-only"};
    CHECK_THROWS_AS(classify(sum_of({1, 1}), bogus, 1000), InconsistencyError);
}

TEST_CASE("verify_up_to never certifies") {
    const UniversalityStatus ok = verify_up_to(sum_of({1, 1, 1}), TargetParity::All, 50'000);
    CHECK(ok.kind == UniversalityStatus::Kind::BoundVerified);
    CHECK(ok.value == 50'000);

    const UniversalityStatus miss = verify_up_to(sum_of({1, 1}), TargetParity::All, 1000);
    CHECK(miss.kind == UniversalityStatus::Kind::FailsAt);
    CHECK(miss.value == 5);

    const UniversalityStatus odd = verify_up_to(sum_of({2}), TargetParity::Odd, 1000);
    CHECK(odd.kind == UniversalityStatus::Kind::FailsAt);
    CHECK(odd.value == 1);
}

TEST_CASE("BK8 certification tracks full universality on the small candidates") {
    CHECK(classify(sum_of({1, 1, 1}), catalog::bk8(), 10'000).certified_ok());
    CHECK(classify(sum_of({1, 2, 4}), catalog::bk8(), 10'000).certified_ok());
    const UniversalityStatus s = classify(sum_of({1, 1, 3}), catalog::bk8(), 10'000);
    CHECK(s.kind == UniversalityStatus::Kind::FailsAt);
    CHECK(s.value == 8);
}
