#pragma once

/**
 * @file descent.hpp
 * @brief Constructive representations by the binary forms x^2 + c*y^2,
 *        c in {2, 3, 7}.
 *
 * Each of these forms is alone in its genus, so representability is decided
 * prime by prime: split primes come from Cornacchia's algorithm, inert primes
 * must occur to an even power, and the pieces are multiplied together with
 * the Brahmagupta identity.
 */

#include <cstdint>

#include "ternrep/factor.hpp"

namespace ternrep {

struct BinaryRep {
    std::int64_t a = 0;
    std::int64_t beta = 0;
    int c = 2;

    std::int64_t value() const;
    friend bool operator==(const BinaryRep&, const BinaryRep&) = default;
};

bool is_supported_binary_constant(int c);

/// p = a^2 + c*beta^2 with a, beta >= 0, for an odd prime p with
/// (-c/p) = 1, or p = c (giving (0, 1)).
BinaryRep cornacchia_prime(std::int64_t p, int c);

/// Product of two representations. Both Brahmagupta branches are formed and
/// the one with lexicographically smaller (|a|, |beta|) is returned.
BinaryRep compose(const BinaryRep& u, const BinaryRep& v);

/// Throws NotRepresentable when x^2 + c*y^2 = n has no integer solution.
BinaryRep represent_binary(std::int64_t n, int c, const FactorBudget& budget = {});

}  // namespace ternrep
