#include "ternrep/arith.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ternrep/errors.hpp"

namespace ternrep {

std::int64_t mod(i128 a, std::int64_t n) {
    i128 r = a % n;
    if (r < 0) r += n;
    return static_cast<std::int64_t>(r);
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
    return mod(static_cast<i128>(a) * b, n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n) {
    if (n == 1) return 0;
    std::int64_t result = 1;
    base = mod(base, n);
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return result;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

u128 isqrt(u128 n) {
    if (n < (u128{1} << 64)) return isqrt(static_cast<std::uint64_t>(n));
    // Newton iteration from an upper estimate; the sequence decreases
    // monotonically to floor(sqrt(n)).
    auto guess = static_cast<u128>(std::sqrt(static_cast<long double>(n))) + 2;
    u128 x = guess;
    while (true) {
        u128 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_square(std::uint64_t n, std::uint64_t* root) {
    std::uint64_t r = isqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && (a > 0)) ++q;
    return q;
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int jacobi(std::int64_t a, std::int64_t n) {
    if (n <= 0 || n % 2 == 0) {
        throw std::invalid_argument("jacobi: denominator must be odd and positive, got " +
                                    std::to_string(n));
    }
    std::int64_t x = mod(a, n);
    std::int64_t y = n;
    int sign = 1;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            std::int64_t r = y % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) sign = -sign;
        x %= y;
    }
    return y == 1 ? sign : 0;
}

namespace {

std::uint64_t mul_mod_u(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod_u(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mul_mod_u(result, base, n);
        base = mul_mod_u(base, base, n);
        exp >>= 1;
    }
    return result;
}

// The first twelve primes as bases decide primality for every n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : kWitnesses) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t x = pow_mod_u(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod_u(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::int64_t sqrt_mod_prime(std::int64_t a, std::int64_t p) {
    if (p < 3 || p % 2 == 0) {
        throw std::invalid_argument("sqrt_mod_prime: modulus must be an odd prime");
    }
    a = mod(a, p);
    if (a == 0) return 0;
    if (jacobi(a, p) != 1) {
        throw NonResidue(std::to_string(a) + " is not a square modulo " + std::to_string(p));
    }

    std::int64_t r;
    if (p % 4 == 3) {
        r = pow_mod(a, static_cast<std::uint64_t>(p + 1) / 4, p);
    } else {
        // p - 1 = q * 2^s with q odd
        std::int64_t q = p - 1;
        int s = 0;
        while (q % 2 == 0) {
            q /= 2;
            ++s;
        }
        std::int64_t z = 2;
        while (jacobi(z, p) != -1) ++z;

        std::int64_t c = pow_mod(z, static_cast<std::uint64_t>(q), p);
        std::int64_t t = pow_mod(a, static_cast<std::uint64_t>(q), p);
        r = pow_mod(a, static_cast<std::uint64_t>(q + 1) / 2, p);
        int m = s;
        while (t != 1) {
            int i = 0;
            std::int64_t t2 = t;
            while (t2 != 1) {
                t2 = mul_mod(t2, t2, p);
                ++i;
            }
            std::int64_t b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
            r = mul_mod(r, b, p);
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            m = i;
        }
    }
    return std::min(r, p - r);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("inv_mod: modulus must be positive");
    if (n == 1) return 0;
    i128 old_r = mod(a, n), r = n;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        i128 quot = old_r / r;
        i128 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw NotInvertible(std::to_string(a) + " has no inverse modulo " + std::to_string(n));
    }
    return mod(old_s, n);
}

std::int64_t crt(std::span<const Congruence> system) {
    i128 x = 0;
    i128 modulus = 1;
    for (const Congruence& c : system) {
        if (c.modulus < 1) throw std::invalid_argument("crt: moduli must be positive");
        if (gcd(static_cast<std::int64_t>(modulus), c.modulus) != 1) {
            throw NonCoprimeModuli("crt: modulus " + std::to_string(c.modulus) +
                                   " is not coprime to the others");
        }
        i128 combined = modulus * c.modulus;
        if (combined > INT64_MAX) throw std::overflow_error("crt: product of moduli exceeds 2^63");
        // x + modulus * k = residue (mod c.modulus)
        std::int64_t m64 = static_cast<std::int64_t>(modulus);
        std::int64_t diff = mod(static_cast<i128>(c.residue) - x, c.modulus);
        std::int64_t k = mul_mod(diff, inv_mod(m64, c.modulus), c.modulus);
        x += modulus * k;
        modulus = combined;
        x = mod(x, static_cast<std::int64_t>(modulus));
    }
    return static_cast<std::int64_t>(x);
}

}  // namespace ternrep
