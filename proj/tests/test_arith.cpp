#include <vector>

#include "doctest.h"
#include "ternrep/arith.hpp"
#include "ternrep/errors.hpp"

using namespace ternrep;

namespace {

// Legendre symbol by listing the squares mod p.
int legendre_by_enumeration(std::int64_t a, std::int64_t p) {
    a = ((a % p) + p) % p;
    if (a == 0) return 0;
    for (std::int64_t x = 1; x < p; ++x) {
        if (x * x % p == a) return 1;
    }
    return -1;
}

// Jacobi symbol as a product of Legendre symbols over a trial-division
// factorization of n.
int jacobi_by_factoring(std::int64_t a, std::int64_t n) {
    int result = 1;
    for (std::int64_t p = 3; n > 1; p += 2) {
        while (n % p == 0) {
            result *= legendre_by_enumeration(a, p);
            n /= p;
        }
    }
    return result;
}

std::vector<bool> sieve(std::size_t n) {
    std::vector<bool> prime(n + 1, true);
    prime[0] = prime[1] = false;
    for (std::size_t i = 2; i * i <= n; ++i) {
        if (prime[i]) {
            for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
        }
    }
    return prime;
}

}  // namespace

TEST_CASE("jacobi examples") {
    CHECK(jacobi(1, 9) == 1);
    CHECK(jacobi(2, 7) == 1);
    CHECK(jacobi(-1, 5) == 1);
    CHECK(legendre_by_enumeration(2, 3) == -1);
    CHECK(jacobi(2, 3) == -1);
    CHECK(jacobi(0, 1) == 1);
    CHECK(jacobi(12345, 1) == 1);
    CHECK(jacobi(6, 9) == 0);
}

TEST_CASE("jacobi rejects even or nonpositive denominators") {
    CHECK_THROWS_AS(jacobi(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(jacobi(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi agrees with a product of enumerated Legendre symbols") {
    for (std::int64_t n = 1; n < 300; n += 2) {
        for (std::int64_t a = -60; a <= 60; ++a) {
            REQUIRE_MESSAGE(jacobi(a, n) == jacobi_by_factoring(a, n), "a=" << a << " n=" << n);
        }
    }
}

TEST_CASE("quadratic reciprocity for odd coprime pairs below 1000") {
    for (std::int64_t a = 1; a < 1000; a += 2) {
        for (std::int64_t n = 1; n < 1000; n += 2) {
            if (gcd(a, n) != 1) {
                CHECK(jacobi(a, n) == 0);
                continue;
            }
            const int expected = (((a - 1) / 2) * ((n - 1) / 2)) % 2 == 0 ? 1 : -1;
            REQUIRE_MESSAGE(jacobi(a, n) * jacobi(n, a) == expected, "a=" << a << " n=" << n);
        }
    }
}

TEST_CASE("is_prime examples") {
    CHECK(is_prime(73));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    const auto prime = sieve(1'000'000);
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        REQUIRE_MESSAGE(is_prime(n) == prime[n], "n=" << n);
    }
}

TEST_CASE("is_prime on large inputs and strong pseudoprimes") {
    CHECK(is_prime((std::uint64_t{1} << 61) - 1));
    CHECK(is_prime(1'099'511'627'791ULL));  // smallest prime above 2^40
    CHECK_FALSE(is_prime(1'099'511'627'776ULL));
    CHECK_FALSE(is_prime(3'215'031'751ULL));              // spsp(2,3,5,7)
    CHECK_FALSE(is_prime(3'825'123'056'546'413'051ULL));  // spsp(2..23)
    CHECK_FALSE(is_prime(4'611'686'014'132'420'609ULL));  // (2^31-1)^2
}

TEST_CASE("sqrt_mod_prime examples") {
    CHECK(sqrt_mod_prime(2, 7) == 3);
    CHECK(17 * 17 == 3 * 73 + 70);
    CHECK(sqrt_mod_prime(70, 73) == 17);
    CHECK_THROWS_AS(sqrt_mod_prime(2, 5), NonResidue);
    CHECK(sqrt_mod_prime(0, 13) == 0);
    CHECK(sqrt_mod_prime(26, 13) == 0);
    CHECK(sqrt_mod_prime(-1, 5) == 2);
}

TEST_CASE("sqrt_mod_prime round trip for every residue of every odd prime below 10^4") {
    const auto prime = sieve(10'000);
    for (std::int64_t p = 3; p < 10'000; p += 2) {
        if (!prime[static_cast<std::size_t>(p)]) continue;
        std::vector<bool> is_residue(static_cast<std::size_t>(p), false);
        for (std::int64_t x = 0; x < p; ++x) is_residue[static_cast<std::size_t>(x * x % p)] = true;
        for (std::int64_t a = 0; a < p; ++a) {
            if (!is_residue[static_cast<std::size_t>(a)]) {
                if (a % 97 == 0) CHECK_THROWS_AS(sqrt_mod_prime(a, p), NonResidue);
                continue;
            }
            const std::int64_t r = sqrt_mod_prime(a, p);
            REQUIRE(r * r % p == a);
            REQUIRE(r <= (p - 1) / 2);
        }
    }
}

TEST_CASE("sqrt_mod_prime near 2^40") {
    const std::int64_t p = 1'099'511'627'791;  // 2^40 + 15, = 3 mod 4
    const std::int64_t q = 1'099'511'627'873;  // smallest prime = 1 mod 16 above 2^40
    REQUIRE(is_prime(static_cast<std::uint64_t>(q)));
    for (std::int64_t x : {std::int64_t{2}, std::int64_t{123456789}, p - 5}) {
        const std::int64_t a = mul_mod(x, x, p);
        const std::int64_t r = sqrt_mod_prime(a, p);
        CHECK(mul_mod(r, r, p) == a);
        const std::int64_t aq = mul_mod(x, x, q);
        const std::int64_t rq = sqrt_mod_prime(aq, q);
        CHECK(mul_mod(rq, rq, q) == aq);
        CHECK(rq <= (q - 1) / 2);
    }
}

TEST_CASE("inv_mod examples and errors") {
    CHECK(inv_mod(2, 7) == 4);
    CHECK(146 % 3 == 2);
    CHECK(inv_mod(146, 3) == 2);
    CHECK(inv_mod(5, 1) == 0);
    CHECK(inv_mod(-1, 7) == 6);
    CHECK_THROWS_AS(inv_mod(6, 9), NotInvertible);
    CHECK_THROWS_AS(inv_mod(0, 5), NotInvertible);
}

TEST_CASE("inv_mod round trip for all coprime pairs with n < 10^4") {
    for (std::int64_t n = 1; n < 10'000; ++n) {
        for (std::int64_t a = 0; a < n; ++a) {
            if (gcd(a, n) != 1) continue;
            const std::int64_t x = inv_mod(a, n);
            if (x < 0 || x >= n || (a * x) % n != 1 % n) {
                FAIL("a=" << a << " n=" << n);
            }
        }
    }
}

TEST_CASE("crt examples") {
    const std::vector<Congruence> s1{{1, 2}, {2, 3}};
    CHECK(crt(s1) == 5);
    const std::vector<Congruence> s2{{0, 1}};
    CHECK(crt(s2) == 0);

    // oracle: scan 0..34
    std::int64_t scanned = -1;
    for (std::int64_t x = 0; x < 35 && scanned < 0; ++x) {
        if (x % 5 == 3 && x % 7 == 4) scanned = x;
    }
    CHECK(scanned == 18);
    const std::vector<Congruence> s3{{3, 5}, {4, 7}};
    CHECK(crt(s3) == 18);

    const std::vector<Congruence> negative{{-1, 5}, {-1, 7}};
    CHECK(crt(negative) == 34);

    const std::vector<Congruence> bad{{1, 6}, {1, 4}};
    CHECK_THROWS_AS(crt(bad), NonCoprimeModuli);
}

TEST_CASE("crt matches a scan for random small systems") {
    const std::vector<std::int64_t> moduli{3, 5, 7, 11, 13};
    for (std::int64_t r1 = 0; r1 < 3; ++r1) {
        for (std::int64_t r2 = 0; r2 < 11; ++r2) {
            for (std::int64_t r3 = 0; r3 < 13; ++r3) {
                const std::vector<Congruence> sys{{r1, 3}, {r2, 11}, {r3, 13}};
                std::int64_t x = crt(sys);
                CHECK(x < 429);
                CHECK(x % 3 == r1);
                CHECK(x % 11 == r2);
                CHECK(x % 13 == r3);
            }
        }
    }
}

TEST_CASE("isqrt and floor/ceil division") {
    CHECK(isqrt(std::uint64_t{0}) == 0);
    CHECK(isqrt(std::uint64_t{15}) == 3);
    CHECK(isqrt(std::uint64_t{16}) == 4);
    CHECK(isqrt(~std::uint64_t{0}) == 4294967295ULL);
    const u128 big = static_cast<u128>(1) << 100;
    CHECK(isqrt(big) == static_cast<u128>(1) << 50);
    CHECK(isqrt(big - 1) == (static_cast<u128>(1) << 50) - 1);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(7, 2) == 3);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(floor_div(-6, 3) == -2);
}
