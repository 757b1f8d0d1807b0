#include "ternrep/selftest.hpp"

#include <random>
#include <sstream>

#include "ternrep/ankeny.hpp"
#include "ternrep/arith.hpp"
#include "ternrep/descent.hpp"
#include "ternrep/errors.hpp"
#include "ternrep/factor.hpp"
#include "ternrep/oracle.hpp"

namespace ternrep {

namespace {

SelftestResult check(std::string name, const std::function<std::string()>& body) {
    std::string failure;
    try {
        failure = body();
    } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
    }
    return {std::move(name), failure.empty(), failure};
}

std::vector<bool> sieve(std::size_t n) {
    std::vector<bool> prime(n + 1, true);
    prime[0] = false;
    if (n >= 1) prime[1] = false;
    for (std::size_t i = 2; i * i <= n; ++i) {
        if (!prime[i]) continue;
        for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
    }
    return prime;
}

}  // namespace

std::vector<SelftestResult> run_selftest() {
    std::vector<SelftestResult> out;

    out.push_back(check("jacobi reciprocity (odd pairs < 200)", [] {
        for (std::int64_t a = 1; a < 200; a += 2) {
            for (std::int64_t n = 1; n < 200; n += 2) {
                if (gcd(a, n) != 1) continue;
                int sign = ((a - 1) / 2 * ((n - 1) / 2)) % 2 == 0 ? 1 : -1;
                if (jacobi(a, n) * jacobi(n, a) != sign) return "a=" + std::to_string(a) + " n=" + std::to_string(n);
            }
        }
        return std::string();
    }));

    out.push_back(check("is_prime agrees with a sieve below 10^5", [] {
        auto prime = sieve(100000);
        for (std::uint64_t n = 0; n <= 100000; ++n) {
            if (is_prime(n) != prime[n]) return "n=" + std::to_string(n);
        }
        return std::string();
    }));

    out.push_back(check("sqrt_mod_prime round trip (p < 2000)", [] {
        auto prime = sieve(2000);
        for (std::int64_t p = 3; p < 2000; p += 2) {
            if (!prime[static_cast<std::size_t>(p)]) continue;
            for (std::int64_t a = 0; a < p; ++a) {
                if (a != 0 && jacobi(a, p) != 1) continue;
                std::int64_t r = sqrt_mod_prime(a, p);
                if (mul_mod(r, r, p) != a || r > (p - 1) / 2) return "p=" + std::to_string(p);
            }
        }
        return std::string();
    }));

    out.push_back(check("factorization reconstructs n <= 10^5", [] {
        for (std::uint64_t n = 1; n <= 100000; ++n) {
            if (multiply_out(factorize(n)) != n) return "n=" + std::to_string(n);
        }
        return std::string();
    }));

    out.push_back(check("represent_binary matches brute force (n <= 20000)", [] {
        for (int c : {2, 3, 7}) {
            for (std::int64_t n = 0; n <= 20000; ++n) {
                bool expected = brute_force_binary(c, n).has_value();
                bool got = true;
                try {
                    if (represent_binary(n, c).value() != n) return "bad value n=" + std::to_string(n);
                } catch (const NotRepresentable&) {
                    got = false;
                }
                if (got != expected) return "c=" + std::to_string(c) + " n=" + std::to_string(n);
            }
        }
        return std::string();
    }));

    for (TernaryForm form : kAllForms) {
        std::string name = "pipeline vs oracle for " + std::string(form_name(form)) + " (m <= 3000)";
        out.push_back(check(name, [form] {
            ScanOptions opts;
            opts.keep_witnesses = true;
            ScanReport report = scan_compare(form, 1, 3000, opts);
            std::mt19937_64 rng(0x5eed);
            std::uniform_int_distribution<std::int64_t> coord(-1'000'000, 1'000'000);
            for (const auto& row : report.rows) {
                if (!row.agree || !row.error.empty()) return "m=" + std::to_string(row.m);
                const bool covered = row.verdict == EligibilityVerdict::Kind::Eligible;
                if (covered != row.pipeline_found) return "eligible but not built: m=" + std::to_string(row.m);
                if (!row.witness) continue;
                const ComposedForm f = composed_form(*row.witness);
                for (int i = 0; i < 20; ++i) {
                    if (f.residue(coord(rng), coord(rng), coord(rng)) != 0) {
                        return "F not divisible by target: m=" + std::to_string(row.m);
                    }
                }
            }
            return std::string();
        }));
    }

    out.push_back(check("golden witness for m = 3", [] {
        auto w = std::get<AnkenyWitness>(build_witness(TernaryForm::D122, 3));
        if (w.q != 73 || w.t != 1 || w.b != 17 || w.h != 2 || !(w.point == Vec3{1, -4, -2}) || w.r1 != -1 ||
            w.binary_value != 1 || w.binary_rep.a != 1 || w.binary_rep.beta != 0) {
            return std::string("witness differs from the frozen fixture");
        }
        return std::string();
    }));

    return out;
}

}  // namespace ternrep
