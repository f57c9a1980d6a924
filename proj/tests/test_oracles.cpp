#include <doctest.h>

#include <stdexcept>

#include "singline/counter.hpp"
#include "singline/oracles.hpp"

using namespace singline;

TEST_CASE("planes_count_closed") {
    CHECK(planes_count_closed(1) == 0);
    CHECK(planes_count_closed(2) == 10);
    CHECK(planes_count_closed(3) == 175);
    CHECK(planes_count_closed(4) == 1330);
    CHECK_THROWS_AS(planes_count_closed(0), std::invalid_argument);
}

TEST_CASE("planes_count_cases") {
    // k = 2: only two triples fit, 6! / (3! 3! 2).
    CHECK(planes_count_cases(2) == 720 / 72);
    CHECK(planes_count_cases(3) == 175);
    CHECK(planes_count_cases(4) == count_closed_form(SurfaceQuery(4, 4)));
    CHECK(planes_count_cases(4) == 1330);
    CHECK(planes_count_cases(1) == 0);
    for (long k = 1; k <= 40; ++k) {
        CHECK(planes_count_cases(k) == planes_count_closed(k));
    }
    for (long k = 2; k <= 40; ++k) {
        CHECK(planes_count_closed(k) == count_closed_form(SurfaceQuery(k, k)));
    }
}

TEST_CASE("rank_monomial_oracle") {
    CHECK(rank_monomial_oracle(3, 1) == 16);
    CHECK(rank_monomial_oracle(2, 2) == 3);
    for (long d = 1; d <= 20; ++d) {
        CHECK(rank_monomial_oracle(d, d) == d + 1);
        for (long k = 1; k <= d; ++k) {
            long expected = 0;
            for (long m = k; m <= d; ++m) {
                expected += (m + 1) * (d - m + 1);
            }
            CHECK(rank_monomial_oracle(d, k) == expected);
        }
    }
    CHECK_THROWS_AS(rank_monomial_oracle(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(rank_monomial_oracle(2, 0), std::invalid_argument);
}

TEST_CASE("reference_table") {
    const ReferenceTable& t = reference_table();
    CHECK(t.entries().size() == 27);
    CHECK(t.lookup(6, 6) == 24150);
    CHECK(t.lookup(7, 1) == 29960);
    CHECK(t.lookup(2, 1) == 0);
    CHECK(t.lookup(7, 3) == 5224695);
    CHECK_FALSE(t.lookup(1, 1).has_value());
    CHECK_FALSE(t.lookup(8, 1).has_value());
}

TEST_CASE("count_by_localization") {
    CHECK(count_by_localization(2, 2) == 10);
    CHECK(count_by_localization(3, 1) == 27);
    CHECK(count_by_localization(2, 1) == 0);
    for (long d = 1; d <= 8; ++d) {
        for (long k = 1; k <= d; ++k) {
            const Scalar n = count_by_localization(d, k);
            CHECK(is_integral(n));
            CHECK(n == count_by_localization(d, k, {5, -3, 2, 17}));
        }
    }
    CHECK_THROWS_AS(count_by_localization(3, 1, {1, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(count_by_localization(1, 2), std::invalid_argument);
}
