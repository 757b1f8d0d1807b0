#include <sstream>

#include "doctest.h"
#include "ternrep/io.hpp"
#include "ternrep/oracle.hpp"

using namespace ternrep;
using Kind = EligibilityVerdict::Kind;

TEST_CASE("brute_force_ternary examples") {
    CHECK_FALSE(brute_force_ternary(TernaryForm::D122, 7).has_value());
    CHECK(brute_force_ternary(TernaryForm::D117, 11) == Vec3{0, 2, 1});
    CHECK(brute_force_ternary(TernaryForm::D112, 1) == Vec3{0, 1, 0});
    CHECK(brute_force_ternary(TernaryForm::D122, 2) == Vec3{0, 0, 1});
    CHECK_FALSE(brute_force_ternary(TernaryForm::D117, 3).has_value());
}

TEST_CASE("brute_force_ternary returns the lexicographically first solution") {
    for (TernaryForm f : kAllForms) {
        const auto [c1, c2, c3] = coefficients(f);
        for (std::int64_t m = 1; m <= 600; ++m) {
            std::optional<Vec3> first;
            for (std::int64_t x = 0; c1 * x * x <= m && !first; ++x)
                for (std::int64_t y = 0; c1 * x * x + c2 * y * y <= m && !first; ++y)
                    for (std::int64_t z = 0; c1 * x * x + c2 * y * y + c3 * z * z <= m; ++z)
                        if (c1 * x * x + c2 * y * y + c3 * z * z == m) {
                            first = Vec3{x, y, z};
                            break;
                        }
            REQUIRE(brute_force_ternary(f, m) == first);
        }
    }
}

TEST_CASE("brute_force_binary examples") {
    CHECK(brute_force_binary(2, 3) == BinaryRep{1, 1, 2});
    CHECK_FALSE(brute_force_binary(7, 2).has_value());
    CHECK(brute_force_binary(3, 4) == BinaryRep{1, 1, 3});
    CHECK(brute_force_binary(7, 0) == BinaryRep{0, 0, 7});
}

TEST_CASE("scan_compare examples") {
    ScanReport r = scan_compare(TernaryForm::D122, 1, 100);
    CHECK(r.rows.size() == 100);
    CHECK(r.disagreements() == 0);
    for (const auto& row : r.rows) CHECK(row.agree);

    r = scan_compare(TernaryForm::D117, 1, 100);
    CHECK(r.disagreements() == 0);
    const ScanRow& three = r.rows[2];
    CHECK(three.m == 3);
    CHECK(three.verdict == Kind::OutsideCoveredCases);
    CHECK_FALSE(three.pipeline_found);
    CHECK_FALSE(three.oracle_found);
    const ScanRow& eleven = r.rows[10];
    CHECK(eleven.verdict == Kind::OutsideCoveredCases);
    CHECK_FALSE(eleven.pipeline_found);
    CHECK(eleven.oracle_found);
    CHECK(eleven.agree);

    r = scan_compare(TernaryForm::D112, 14, 14);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].verdict == Kind::Obstructed);
    CHECK_FALSE(r.rows[0].oracle_found);
    CHECK(r.rows[0].agree);
}

TEST_CASE("scan rows satisfy the agreement rule") {
    for (TernaryForm f : kAllForms) {
        const ScanReport r = scan_compare(f, 1, 3000);
        REQUIRE(r.rows.size() == 3000);
        const bool exact = f == TernaryForm::D122 || f == TernaryForm::D112;
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            const ScanRow& row = r.rows[i];
            REQUIRE(row.m == static_cast<std::int64_t>(i) + 1);
            const bool expected = exact ? row.pipeline_found == row.oracle_found
                                        : (!row.pipeline_found || row.oracle_found);
            REQUIRE(row.agree == expected);
            REQUIRE(row.agree);
            REQUIRE(row.pipeline_found == row.representation.has_value());
            if (row.representation) REQUIRE(evaluate(f, *row.representation) == row.m);
            REQUIRE(row.elapsed_micros == 0);
            REQUIRE(row.error.empty());
        }
        CHECK(r.flagged() == 0);
    }
}

TEST_CASE("scan output does not depend on the number of jobs") {
    for (TernaryForm f : kAllForms) {
        std::ostringstream one, four, seven;
        write_scan_csv(one, scan_compare(f, 1, 1500, {.jobs = 1}));
        write_scan_csv(four, scan_compare(f, 1, 1500, {.jobs = 4}));
        write_scan_csv(seven, scan_compare(f, 1, 1500, {.jobs = 7}));
        CHECK(one.str() == four.str());
        CHECK(one.str() == seven.str());
    }
}

TEST_CASE("a tiny prime budget flags rows instead of aborting") {
    ScanOptions opts;
    opts.build.max_prime_candidates = 1;
    const ScanReport r = scan_compare(TernaryForm::D122, 1, 50, opts);
    CHECK(r.rows.size() == 50);
    CHECK(r.flagged() > 0);
    for (const auto& row : r.rows) {
        if (row.resource_cap) CHECK_FALSE(row.error.empty());
    }
}
