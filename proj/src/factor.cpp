#include "ternrep/factor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ternrep/arith.hpp"
#include "ternrep/errors.hpp"

namespace ternrep {

namespace {

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t step(std::uint64_t x, std::uint64_t c, std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<u128>(x) * x + c) % n);
}

std::uint64_t diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's cycle detection with batched gcds. Returns a proper divisor of the
// composite n, or 0 if the step budget runs out.
std::uint64_t brent(std::uint64_t n, std::uint64_t c, std::uint64_t& steps_left) {
    constexpr std::uint64_t kBatch = 128;
    std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
    std::uint64_t r = 1;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y, c, n);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(kBatch, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = step(y, c, n);
                q = static_cast<std::uint64_t>(static_cast<u128>(q) * diff(x, y) % n);
            }
            g = gcd_u(q, n);
            k += lim;
            if (steps_left < lim) return 0;
            steps_left -= lim;
        }
        r *= 2;
    }
    if (g == n) {
        // The batch overshot; replay one step at a time.
        do {
            ys = step(ys, c, n);
            g = gcd_u(diff(x, ys), n);
        } while (g == 1);
    }
    return g;
}

void split(std::uint64_t n, std::map<std::uint64_t, int>& out, std::uint64_t& steps_left) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t root = 0;
    if (is_square(n, &root)) {
        split(root, out, steps_left);
        split(root, out, steps_left);
        return;
    }
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t d = brent(n, c, steps_left);
        if (d == 0) throw ResourceCap("factorize: Pollard rho step budget exhausted");
        if (d != n) {
            split(d, out, steps_left);
            split(n / d, out, steps_left);
            return;
        }
    }
}

}  // namespace

Factorization factorize(std::uint64_t n, const FactorBudget& budget) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    if (n > budget.max_input) {
        throw ResourceCap("factorize: " + std::to_string(n) + " exceeds the factoring budget");
    }
    Factorization result;
    auto take = [&](std::uint64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) result.push_back({p, e});
    };
    take(2);
    take(3);
    // 6k +- 1 wheel
    for (std::uint64_t p = 5; p <= budget.trial_limit && p * p <= n; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1) {
        if (n < budget.trial_limit * budget.trial_limit || is_prime(n)) {
            result.push_back({n, 1});
        } else {
            std::map<std::uint64_t, int> large;
            std::uint64_t steps_left = budget.max_rho_steps;
            split(n, large, steps_left);
            for (auto [p, e] : large) result.push_back({p, e});
        }
    }
    return result;
}

std::uint64_t multiply_out(const Factorization& f) {
    std::uint64_t n = 1;
    for (const auto& pp : f) {
        for (int i = 0; i < pp.exponent; ++i) n *= pp.prime;
    }
    return n;
}

SquarefreeSplit squarefree_decompose(std::uint64_t n, const FactorBudget& budget) {
    SquarefreeSplit out{1, 1};
    for (const auto& pp : factorize(n, budget)) {
        for (int i = 0; i < pp.exponent / 2; ++i) out.square_root *= pp.prime;
        if (pp.exponent % 2 == 1) out.core *= pp.prime;
    }
    return out;
}

int ord_p(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("ord_p: n must be positive");
    if (p < 2) throw std::invalid_argument("ord_p: p must be at least 2");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

}  // namespace ternrep
