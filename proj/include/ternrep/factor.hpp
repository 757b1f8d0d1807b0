#pragma once

#include <cstdint>
#include <vector>

namespace ternrep {

struct PrimePower {
    std::uint64_t prime;
    int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization sorted by strictly increasing prime. Empty for 1.
using Factorization = std::vector<PrimePower>;

/// Limits on factorize. The defaults comfortably cover every value the
/// representation pipeline produces for m <= 2^40.
struct FactorBudget {
    std::uint64_t max_input = std::uint64_t{1} << 62;
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t max_rho_steps = 50'000'000;
};

/// Trial division up to budget.trial_limit, then Brent's variant of Pollard
/// rho on f(x) = x^2 + c with x0 = 2 and c = 1, 2, 3, ... on failure.
/// Throws ResourceCap when n exceeds the budget.
Factorization factorize(std::uint64_t n, const FactorBudget& budget = {});

std::uint64_t multiply_out(const Factorization& f);

struct SquarefreeSplit {
    std::uint64_t square_root;  // s
    std::uint64_t core;         // squarefree, n = s^2 * core
};

SquarefreeSplit squarefree_decompose(std::uint64_t n, const FactorBudget& budget = {});

/// Largest e with p^e | n, for n >= 1 and p >= 2.
int ord_p(std::uint64_t n, std::uint64_t p);

}  // namespace ternrep
