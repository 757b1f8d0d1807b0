#include "ternrep/descent.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ternrep/arith.hpp"
#include "ternrep/errors.hpp"

namespace ternrep {

std::int64_t BinaryRep::value() const {
    i128 v = static_cast<i128>(a) * a + static_cast<i128>(c) * beta * beta;
    if (v > INT64_MAX) throw std::overflow_error("BinaryRep::value exceeds 2^63");
    return static_cast<std::int64_t>(v);
}

bool is_supported_binary_constant(int c) { return c == 2 || c == 3 || c == 7; }

namespace {

void require_constant(int c) {
    if (!is_supported_binary_constant(c)) {
        throw std::invalid_argument("binary constant must be 2, 3 or 7, got " + std::to_string(c));
    }
}

BinaryRep scaled(BinaryRep r, std::int64_t factor) {
    r.a *= factor;
    r.beta *= factor;
    return r;
}

}  // namespace

BinaryRep cornacchia_prime(std::int64_t p, int c) {
    require_constant(c);
    if (p == c) return {0, 1, c};
    if (p < 3 || p % 2 == 0 || p % c == 0) {
        throw std::invalid_argument("cornacchia_prime: " + std::to_string(p) +
                                    " is not an odd prime coprime to " + std::to_string(c));
    }
    if (jacobi(-c, p) != 1) {
        throw NotRepresentable(std::to_string(p) + " is inert for x^2 + " + std::to_string(c) + "y^2");
    }

    // Start the Euclidean descent from the root in (p/2, p).
    std::int64_t r = p - sqrt_mod_prime(-c, p);
    std::int64_t prev = p;
    while (static_cast<i128>(r) * r >= p) {
        std::int64_t next = prev % r;
        prev = r;
        r = next;
    }
    std::int64_t rest = p - r * r;
    std::uint64_t beta = 0;
    if (rest % c != 0 || !is_square(static_cast<std::uint64_t>(rest / c), &beta)) {
        throw InternalError("cornacchia_prime: descent failed for p = " + std::to_string(p) +
                            ", c = " + std::to_string(c));
    }
    return {r, static_cast<std::int64_t>(beta), c};
}

BinaryRep compose(const BinaryRep& u, const BinaryRep& v) {
    if (u.c != v.c) throw std::invalid_argument("compose: mismatched binary constants");
    const int c = u.c;
    auto fit = [](i128 x) {
        if (x < 0) x = -x;
        if (x > INT64_MAX) throw std::overflow_error("compose: component exceeds 2^63");
        return static_cast<std::int64_t>(x);
    };
    const i128 aa = static_cast<i128>(u.a) * v.a;
    const i128 bb = static_cast<i128>(c) * u.beta * v.beta;
    const i128 ab = static_cast<i128>(u.a) * v.beta;
    const i128 ba = static_cast<i128>(v.a) * u.beta;
    BinaryRep first{fit(aa - bb), fit(ab + ba), c};
    BinaryRep second{fit(aa + bb), fit(ab - ba), c};
    return std::tie(second.a, second.beta) < std::tie(first.a, first.beta) ? second : first;
}

BinaryRep represent_binary(std::int64_t n, int c, const FactorBudget& budget) {
    require_constant(c);
    if (n < 0) throw std::invalid_argument("represent_binary: n must be nonnegative");
    if (n == 0) return {0, 0, c};

    auto refuse = [&](std::uint64_t p, int e) {
        return NotRepresentable(std::to_string(n) + " is not represented by x^2 + " +
                                std::to_string(c) + "y^2 (prime " + std::to_string(p) +
                                " to the power " + std::to_string(e) + ")");
    };

    BinaryRep acc{1, 0, c};
    for (const auto& [prime, e] : factorize(static_cast<std::uint64_t>(n), budget)) {
        const auto p = static_cast<std::int64_t>(prime);
        std::int64_t half = 1;
        for (int i = 0; i < e / 2; ++i) half *= p;

        if (p == 2 && c != 2) {
            if (e % 2 == 0) {
                acc = scaled(acc, half);
            } else if (c == 7 && e >= 3) {
                // 8 = 1 + 7, and 2^e = 8 * 4^((e-3)/2)
                acc = compose(acc, BinaryRep{half / 2, half / 2, c});
            } else {
                throw refuse(prime, e);
            }
        } else if (p == c || (p != 2 && jacobi(-c, p) == 1) || (p == 2 && c == 2)) {
            const BinaryRep unit = p == c || p == 2 ? BinaryRep{0, 1, c} : cornacchia_prime(p, c);
            for (int i = 0; i < e; ++i) acc = compose(acc, unit);
        } else if (e % 2 == 0) {
            acc = scaled(acc, half);
        } else {
            throw refuse(prime, e);
        }
    }
    if (acc.value() != n) {
        throw InternalError("represent_binary: composed value does not match " + std::to_string(n));
    }
    return acc;
}

}  // namespace ternrep
