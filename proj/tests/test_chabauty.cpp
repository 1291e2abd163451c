#include <doctest.h>

#include <algorithm>

#include "chabgraph/chabauty.hpp"
#include "chabgraph/errors.hpp"

using namespace chabgraph;

namespace {

// Direct scan of the defining inequality with a caller-supplied horizon.
i64 delta_reference(const LocalArithmetic& local, i64 n, i64 horizon) {
    const i64 base = local.e * vp(n + 1, local.p);
    i64 best = 0;
    for (i64 d = 0; d <= horizon; ++d) {
        if (base + d <= local.e * vp(n + d + 1, local.p)) {
            best = d;
        }
    }
    return best;
}

} // namespace

TEST_CASE("p-adic valuation") {
    CHECK(vp(1, 5) == 0);
    CHECK(vp(5, 5) == 1);
    CHECK(vp(72, 2) == 3);
    CHECK(vp(72, 3) == 2);
    CHECK_THROWS_AS(vp(0, 5), InputError);
    CHECK_THROWS_AS(vp(-3, 5), InputError);
    CHECK_THROWS_AS(vp(10, 6), InputError);
}

TEST_CASE("local arithmetic validation") {
    CHECK_THROWS_AS(LocalArithmetic(6, 1), InputError);
    CHECK_THROWS_AS(LocalArithmetic(1, 1), InputError);
    CHECK_THROWS_AS(LocalArithmetic(5, 0), InputError);
    CHECK_NOTHROW(LocalArithmetic(2, 7));
}

TEST_CASE("delta fixtures") {
    CHECK(delta(LocalArithmetic(5, 1), 0) == 0);
    CHECK(delta(LocalArithmetic(3, 1), 1) == 1);
    CHECK(delta(LocalArithmetic(3, 1), 2) == 0);
    CHECK_THROWS_AS(delta(LocalArithmetic(3, 1), -1), InputError);
}

TEST_CASE("delta agrees with a long direct scan, including heavy ramification") {
    for (const i64 p : {2, 3, 5}) {
        for (i64 e = 1; e <= 6; ++e) {
            const LocalArithmetic local(p, e);
            for (i64 n = 0; n <= 30; ++n) {
                CHECK(delta(local, n) == delta_reference(local, n, 5000));
            }
        }
    }
}

TEST_CASE("residue class bounds") {
    CHECK(residue_class_bound(LocalArithmetic(5, 1), 0) == 1);
    CHECK(residue_class_bound(LocalArithmetic(3, 1), 1) == 3);
    CHECK(residue_class_bound(LocalArithmetic(7, 1), 2) == 3);
    for (const i64 p : {2, 3, 7, 11}) {
        for (i64 e = 1; e <= 4; ++e) {
            for (i64 n = 0; n <= 20; ++n) {
                CHECK(residue_class_bound(LocalArithmetic(p, e), n) >= 1);
            }
        }
    }
}

TEST_CASE("chabauty bound fixtures") {
    SUBCASE("sharp genus-3 example") {
        const auto report = chabauty_bound({3, 1, LocalArithmetic(5, 1), 5, std::nullopt});
        CHECK(report.bound == 7);
        CHECK(report.theorem == BoundTheorem::stoll_main);
    }
    SUBCASE("rank zero") {
        const auto report = chabauty_bound({2, 0, LocalArithmetic(7, 1), 9, std::nullopt});
        CHECK(report.bound == 9);
    }
    SUBCASE("small prime falls back to the delta-corrected bound") {
        const auto report = chabauty_bound({3, 1, LocalArithmetic(3, 1), 4, std::nullopt});
        CHECK(report.bound == 8);
        CHECK(report.theorem == BoundTheorem::general_delta);

        // The aggregated bound covers the exhaustive per-class maximum: any
        // order profile with sum <= 2r costs at most 4 extra points here.
        i64 worst = 0;
        const LocalArithmetic local(3, 1);
        const std::vector<std::vector<i64>> profiles = {{}, {1}, {2}, {1, 1}};
        for (const auto& profile : profiles) {
            i64 cost = 0;
            for (const i64 n : profile) {
                cost += n + delta(local, n);
            }
            worst = std::max(worst, cost);
        }
        CHECK(worst == 4);
        CHECK(report.bound == 4 + worst);
    }
    SUBCASE("large primes give exactly N + 2r") {
        for (const i64 p : {11, 13, 101, 997}) {
            const auto report = chabauty_bound({4, 2, LocalArithmetic(p, 1), 12, std::nullopt});
            CHECK(report.bound == 12 + 4);
            CHECK(report.theorem == BoundTheorem::stoll_main);
        }
    }
}

TEST_CASE("chabauty bound input validation") {
    CHECK_THROWS_AS(chabauty_bound({2, 2, LocalArithmetic(7, 1), 5, std::nullopt}), InputError);
    CHECK_THROWS_AS(chabauty_bound({1, 0, LocalArithmetic(7, 1), 5, std::nullopt}), InputError);
    CHECK_THROWS_AS(chabauty_bound({3, 1, LocalArithmetic(7, 1), -1, std::nullopt}), InputError);
    // p = 2, e = 2: every hypothesis set fails.
    CHECK_THROWS_AS(chabauty_bound({2, 0, LocalArithmetic(2, 2), 5, std::nullopt}), InputError);
}

TEST_CASE("per-class orders") {
    SUBCASE("orders summing to zero add nothing") {
        const auto report =
            chabauty_bound({3, 1, LocalArithmetic(5, 1), 5, std::vector<i64>{0, 0}});
        REQUIRE(report.orders_bound.has_value());
        CHECK(*report.orders_bound == 5);
    }
    SUBCASE("the worked small-prime profile") {
        const auto report =
            chabauty_bound({3, 1, LocalArithmetic(3, 1), 4, std::vector<i64>{1, 1}});
        REQUIRE(report.orders_bound.has_value());
        CHECK(*report.orders_bound == 8);
    }
    SUBCASE("orders beyond 2r are rejected") {
        CHECK_THROWS_AS(chabauty_bound({3, 1, LocalArithmetic(5, 1), 5, std::vector<i64>{2, 1}}),
                        InputError);
        CHECK_THROWS_AS(chabauty_bound({3, 1, LocalArithmetic(5, 1), 5, std::vector<i64>{-1}}),
                        InputError);
    }
}

TEST_CASE("bounds are monotone in rank and point count") {
    for (i64 r = 0; r + 1 < 5; ++r) {
        const auto lo = chabauty_bound({5, r, LocalArithmetic(13, 1), 9, std::nullopt});
        const auto hi = chabauty_bound({5, r + 1, LocalArithmetic(13, 1), 9, std::nullopt});
        CHECK(lo.bound <= hi.bound);
    }
    for (i64 n = 0; n < 12; n += 3) {
        const auto lo = chabauty_bound({3, 1, LocalArithmetic(5, 1), n, std::nullopt});
        const auto hi = chabauty_bound({3, 1, LocalArithmetic(5, 1), n + 3, std::nullopt});
        CHECK(lo.bound <= hi.bound);
    }
}

TEST_CASE("delta property audit") {
    SUBCASE("large prime: all zero below the p > n+e+1 line") {
        const auto audit = delta_property_audit(LocalArithmetic(5, 1), 2);
        CHECK(audit.bounded_claims_checked);
        CHECK(audit.pass);
        for (const auto& row : audit.rows) {
            CHECK(row.delta_value == 0);
            CHECK(row.zero_forced);
        }
        // At the boundary p = n + e + 1 the correction can wake up:
        // vp(5 + 0 + ... ) picks up a factor exactly at n = 3.
        CHECK(delta(LocalArithmetic(5, 1), 3) == 1);
    }
    SUBCASE("p = 3 table") {
        const auto audit = delta_property_audit(LocalArithmetic(3, 1), 10);
        CHECK(audit.pass);
        CHECK(audit.rows[1].delta_value == 1);
    }
    SUBCASE("heavily ramified: raw table only") {
        const auto audit = delta_property_audit(LocalArithmetic(3, 3), 10);
        CHECK_FALSE(audit.bounded_claims_checked);
        CHECK(audit.pass);
        CHECK(audit.rows.size() == 11);
    }
}
