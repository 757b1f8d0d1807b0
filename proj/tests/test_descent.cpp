#include "doctest.h"
#include "ternrep/arith.hpp"
#include "ternrep/descent.hpp"
#include "ternrep/errors.hpp"
#include "ternrep/oracle.hpp"

using namespace ternrep;

TEST_CASE("cornacchia_prime examples") {
    CHECK(cornacchia_prime(11, 7) == BinaryRep{2, 1, 7});
    CHECK(cornacchia_prime(3, 2) == BinaryRep{1, 1, 2});
    CHECK(cornacchia_prime(13, 3) == BinaryRep{1, 2, 3});
    CHECK(cornacchia_prime(7, 7) == BinaryRep{0, 1, 7});
    CHECK(cornacchia_prime(3, 3) == BinaryRep{0, 1, 3});
    CHECK_THROWS_AS(cornacchia_prime(5, 2), NotRepresentable);
    CHECK_THROWS_AS(cornacchia_prime(11, 5), std::invalid_argument);
}

TEST_CASE("cornacchia_prime on every split prime below 2*10^4") {
    for (int c : {2, 3, 7}) {
        for (std::int64_t p = 3; p < 20'000; p += 2) {
            if (!is_prime(static_cast<std::uint64_t>(p)) || p == c || jacobi(-c, p) != 1) continue;
            const BinaryRep r = cornacchia_prime(p, c);
            REQUIRE(r.a >= 0);
            REQUIRE(r.beta >= 0);
            REQUIRE(r.value() == p);
        }
    }
}

TEST_CASE("compose") {
    // (1,1)*(1,1) with c = 2: branches (-1, 2) and (3, 0)
    CHECK(compose({1, 1, 2}, {1, 1, 2}) == BinaryRep{1, 2, 2});
    CHECK(compose({5, 0, 3}, {2, 3, 3}) == BinaryRep{10, 15, 3});
    CHECK(compose({0, 1, 7}, {0, 1, 7}) == BinaryRep{7, 0, 7});
    CHECK_THROWS_AS(compose({1, 1, 2}, {1, 1, 3}), std::invalid_argument);

    for (int c : {2, 3, 7}) {
        for (std::int64_t a1 = -6; a1 <= 6; ++a1) {
            for (std::int64_t b1 = -6; b1 <= 6; ++b1) {
                const BinaryRep u{a1, b1, c};
                const BinaryRep v{b1 + 2, a1 - 1, c};
                const BinaryRep w = compose(u, v);
                REQUIRE(w.value() == u.value() * v.value());
                REQUIRE(w.a >= 0);
                REQUIRE(w.beta >= 0);
            }
        }
    }
}

TEST_CASE("represent_binary examples") {
    CHECK(represent_binary(9, 2) == BinaryRep{1, 2, 2});
    CHECK_THROWS_AS(represent_binary(5, 2), NotRepresentable);
    CHECK_FALSE(brute_force_binary(2, 5).has_value());
    CHECK(represent_binary(8, 7) == BinaryRep{1, 1, 7});
    for (int c : {2, 3, 7}) {
        CHECK(represent_binary(1, c) == BinaryRep{1, 0, c});
        CHECK(represent_binary(0, c) == BinaryRep{0, 0, c});
    }
    CHECK_THROWS_AS(represent_binary(2, 7), NotRepresentable);
    CHECK_THROWS_AS(represent_binary(2, 3), NotRepresentable);
    CHECK_THROWS_AS(represent_binary(4, 5), std::invalid_argument);
}

TEST_CASE("represent_binary succeeds exactly when brute force does (n <= 10^5)") {
    for (int c : {2, 3, 7}) {
        for (std::int64_t n = 0; n <= 100'000; ++n) {
            const bool expected = brute_force_binary(c, n).has_value();
            bool got = true;
            try {
                const BinaryRep r = represent_binary(n, c);
                REQUIRE(r.c == c);
                REQUIRE(r.value() == n);
            } catch (const NotRepresentable&) {
                got = false;
            }
            REQUIRE_MESSAGE(got == expected, "c=" << c << " n=" << n);
        }
    }
}

TEST_CASE("represent_binary on large inputs") {
    const std::int64_t p = 1'099'511'627'873;  // = 1 mod 8, so split for c = 2
    REQUIRE(jacobi(-2, p) == 1);
    CHECK(represent_binary(p, 2).value() == p);
    CHECK(represent_binary(p * 9, 2).value() == p * 9);
}
