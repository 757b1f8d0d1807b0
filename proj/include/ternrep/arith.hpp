#pragma once

/**
 * @file arith.hpp
 * @brief Exact modular arithmetic on 64-bit integers.
 *
 * All products are formed in 128-bit intermediates, so every routine is
 * exact for moduli below 2^63. Nothing here is randomized: primality uses
 * a fixed Miller-Rabin witness set that is a proof for every 64-bit input.
 */

#include <cstdint>
#include <span>

namespace ternrep {

using i128 = __int128;
using u128 = unsigned __int128;

/// Least nonnegative residue of a modulo n (n >= 1).
std::int64_t mod(i128 a, std::int64_t n);

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n);

std::uint64_t isqrt(std::uint64_t n);
u128 isqrt(u128 n);

/// True iff n is a perfect square; writes the root to *root when given.
bool is_square(std::uint64_t n, std::uint64_t* root = nullptr);

/// Floor and ceiling of a / b for b > 0.
i128 floor_div(i128 a, i128 b);
i128 ceil_div(i128 a, i128 b);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Jacobi symbol (a/n) for odd n >= 1. (a/1) = 1.
/// Throws std::invalid_argument for even or nonpositive n.
int jacobi(std::int64_t a, std::int64_t n);

/// Deterministic primality for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Square root of a modulo an odd prime p (Tonelli-Shanks). Returns the
/// root r with 0 <= r <= (p-1)/2. Throws NonResidue when (a/p) = -1.
std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p);

/// Inverse of a modulo n in [0, n). inv_mod(a, 1) = 0.
/// Throws NotInvertible when gcd(a, n) > 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t n);

struct Congruence {
    std::int64_t residue;
    std::int64_t modulus;
};

/// Smallest nonnegative x with x = r_i (mod m_i) for every congruence.
/// Throws NonCoprimeModuli if two moduli share a factor and
/// std::overflow_error if the product of the moduli exceeds 2^63.
std::int64_t crt(std::span<const Congruence> system);

}  // namespace ternrep
