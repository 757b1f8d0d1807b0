#include "ternrep/ankeny.hpp"

#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "ternrep/errors.hpp"

namespace ternrep {

namespace {

using enum CaseId;
using enum Assembly;
constexpr auto kD122 = TernaryForm::D122;
constexpr auto kD112 = TernaryForm::D112;
constexpr auto kOdd = Parity::Odd;
constexpr auto kEven = Parity::Even;
constexpr auto kFree = Parity::Free;
constexpr auto kM2Q = Character::MinusTwoQ;
constexpr auto kMQ = Character::MinusQ;

// clang-format off
//  id   form               deleg  even   q mod    char  tden gam bpar  d  hodd  al rho  A  B  C  c  sub    assembly
constexpr std::array<CaseProfile, 11> kTable = {{
    {T1A, kD122,             false, false, 1,  8,  kM2Q, 2,  1,  kOdd,  2, false, 1, 2,  1, 2, 2, 2, false, A_Beta_R},
    {T1B, kD122,             false, false, 1,  8,  kMQ,  4,  1,  kOdd,  2, false, 2, 2,  2, 2, 1, 2, false, A_Beta_R},
    {T1C, kD122,             false, true,  1,  8,  kM2Q, 2,  2,  kEven, 2, false, 2, 1,  2, 2, 1, 2, true,  TwoBeta_A_R},
    {T1D, kD122,             false, true,  5,  8,  kM2Q, 2,  2,  kEven, 2, false, 2, 1,  2, 2, 1, 2, true,  TwoBeta_A_R},
    {T1E, kD122,             false, true,  3,  8,  kM2Q, 2,  2,  kEven, 2, false, 2, 1,  2, 2, 1, 2, true,  TwoBeta_A_R},
    {T2A, kD112,             false, false, 1,  8,  kM2Q, 2,  2,  kEven, 2, false, 2, 1,  2, 2, 1, 2, false, R_A_Beta},
    {T2B, kD112,             false, false, 3,  8,  kM2Q, 2,  2,  kEven, 2, false, 2, 1,  2, 2, 1, 2, false, R_A_Beta},
    {T2C, kD112,             false, false, 1,  8,  kMQ,  1,  2,  kFree, 1, false, 1, 1,  1, 2, 1, 2, false, R_A_Beta},
    {T2D, kD112,             true,  true,  1,  8,  kM2Q, 2,  2,  kEven, 2, false, 2, 1,  2, 2, 1, 2, true,  TwoBeta_A_R},
    {T3A, TernaryForm::D117, false, false, 1,  28, kMQ,  4,  7,  kOdd,  4, true,  2, 1,  1, 1, 1, 7, false, A_R_Beta},
    {T3B, TernaryForm::D113, false, false, 1,  12, kMQ,  4,  3,  kOdd,  4, true,  2, 1,  1, 1, 1, 3, false, A_R_Beta},
}};
// clang-format on

std::string str(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (u > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    return neg ? "-" + s : s;
}

std::int64_t narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw InternalError(std::string(what) + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

std::vector<std::uint64_t> odd_primes_of(std::int64_t n) {
    std::vector<std::uint64_t> primes;
    for (const auto& pp : factorize(static_cast<std::uint64_t>(n))) {
        if (pp.prime != 2) primes.push_back(pp.prime);
    }
    return primes;
}

bool parity_ok(Parity want, std::int64_t v) {
    switch (want) {
        case Parity::Odd: return v % 2 != 0;
        case Parity::Even: return v % 2 == 0;
        case Parity::Free: return true;
    }
    return false;
}

Vec3 assemble(Assembly how, std::int64_t r1, const BinaryRep& br) {
    switch (how) {
        case A_Beta_R: return {br.a, br.beta, r1};
        case TwoBeta_A_R: return {2 * br.beta, br.a, r1};
        case R_A_Beta: return {r1, br.a, br.beta};
        case A_R_Beta: return {br.a, r1, br.beta};
    }
    return {};
}

Vec3 absolute(Vec3 v) { return {std::llabs(v.x), std::llabs(v.y), std::llabs(v.z)}; }

Vec3 scale(Vec3 v, int k, std::int64_t s) {
    const std::int64_t f = s << k;
    return {v.x * f, v.y * f, v.z * f};
}

}  // namespace

std::string_view case_name(CaseId id) {
    switch (id) {
        case T1A: return "T1A";
        case T1B: return "T1B";
        case T1C: return "T1C";
        case T1D: return "T1D";
        case T1E: return "T1E";
        case T2A: return "T2A";
        case T2B: return "T2B";
        case T2C: return "T2C";
        case T2D: return "T2D";
        case T3A: return "T3A";
        case T3B: return "T3B";
    }
    return "?";
}

std::span<const CaseProfile> case_table() { return kTable; }

const CaseProfile& profile(CaseId id) {
    for (const auto& p : kTable) {
        if (p.id == id) return p;
    }
    throw std::invalid_argument("profile: unknown case id");
}

const CaseProfile& select_case(TernaryForm form, std::int64_t core) {
    const bool odd = core % 2 != 0;
    const std::int64_t m1 = odd ? core : core / 2;
    const std::int64_t r = m1 % 8;
    switch (form) {
        case TernaryForm::D122:
            if (odd && r == 3) return profile(T1A);
            if (odd && (r == 1 || r == 5)) return profile(T1B);
            if (!odd && (r == 1 || r == 3)) return profile(T1C);
            if (!odd && r == 5) return profile(T1D);
            if (!odd && r == 7) return profile(T1E);
            break;
        case TernaryForm::D112:
            if (odd && r == 3) return profile(T2A);
            if (odd && r == 7) return profile(T2B);
            if (odd && (r == 1 || r == 5)) return profile(T2C);
            if (!odd && r != 7) return profile(T2D);
            break;
        case TernaryForm::D117:
            if (odd && r == 5 && core % 7 != 0) return profile(T3A);
            break;
        case TernaryForm::D113:
            if (odd && r == 1 && core % 3 != 0) return profile(T3B);
            break;
    }
    throw InternalError("select_case: no profile for core " + std::to_string(core) + " of " +
                        std::string(form_name(form)));
}

std::int64_t target_of(const CaseProfile& p, std::int64_t core) {
    return p.even_core ? core / 2 : core;
}

bool q_admissible(const CaseProfile& p, std::int64_t q, std::span<const std::uint64_t> odd_primes) {
    if (q % p.q_modulus != p.q_residue) return false;
    if (!is_prime(static_cast<std::uint64_t>(q))) return false;
    const std::int64_t numerator = p.character == Character::MinusTwoQ ? -2 : -1;
    for (std::uint64_t prime : odd_primes) {
        const auto pr = static_cast<std::int64_t>(prime);
        if (jacobi(mul_mod(numerator, q, pr), pr) != 1) return false;
    }
    return true;
}

std::int64_t find_q(const CaseProfile& p, std::int64_t core, std::int64_t cap) {
    if (cap <= 0) throw std::invalid_argument("find_q: candidate cap must be positive");
    const auto primes = odd_primes_of(core);
    const std::int64_t floor_value = std::max<std::int64_t>(core, 2);
    // first member of the residue class strictly above floor_value
    std::int64_t q = floor_value + 1;
    q += mod(static_cast<i128>(p.q_residue) - q, p.q_modulus);
    for (std::int64_t examined = 0; examined < cap; ++examined, q += p.q_modulus) {
        if (q_admissible(p, q, primes)) return q;
    }
    throw ResourceCap("find_q: no admissible prime among " + std::to_string(cap) +
                      " candidates for core " + std::to_string(core));
}

std::int64_t solve_t(const CaseProfile& p, std::int64_t modulus, std::int64_t q) {
    if (modulus == 1) return 0;
    std::vector<Congruence> system;
    for (const auto& pp : factorize(static_cast<std::uint64_t>(modulus))) {
        if (pp.exponent != 1) throw std::invalid_argument("solve_t: modulus must be squarefree");
        const auto pr = static_cast<std::int64_t>(pp.prime);
        const std::int64_t target = mod(-static_cast<i128>(inv_mod(mul_mod(p.t_den, q, pr), pr)), pr);
        std::int64_t root = target;  // squares mod 2 are themselves
        if (pr != 2) {
            try {
                root = sqrt_mod_prime(target, pr);
            } catch (const NonResidue&) {
                throw InternalError("solve_t: -1/(" + std::to_string(p.t_den) + "q) is not a square mod " +
                                    std::to_string(pr) + " for q = " + std::to_string(q));
            }
        }
        system.push_back({root, pr});
    }
    return crt(system);
}

BH solve_bh(const CaseProfile& p, std::int64_t n0, std::int64_t q) {
    const i128 gn = static_cast<i128>(p.gamma) * n0;
    std::int64_t r;
    try {
        r = sqrt_mod_prime(mod(-gn, q), q);
    } catch (const NonResidue&) {
        throw InternalError("solve_bh: -" + std::to_string(p.gamma) + "*" + std::to_string(n0) +
                            " is not a square mod " + std::to_string(q));
    }
    // r and q - r have opposite parity since q is odd
    std::int64_t b = parity_ok(p.b_parity, r) ? r : q - r;
    const i128 d = static_cast<i128>(p.d_factor) * q;
    const i128 num = static_cast<i128>(b) * b + gn;
    if (num % d != 0) {
        throw InternalError("solve_bh: b^2 + gamma*n0 = " + str(num) + " is not divisible by " + str(d));
    }
    const std::int64_t h = narrow(num / d, "h");
    if (p.h_odd && h % 2 == 0) throw InternalError("solve_bh: h = " + std::to_string(h) + " is even");
    return {b, h};
}

ComposedForm ComposedForm::make(const CaseProfile& p, std::int64_t n0, std::int64_t q, std::int64_t t,
                                std::int64_t b, std::int64_t h) {
    ComposedForm f{};
    f.r_x = static_cast<i128>(p.r_alpha) * t * q;
    f.r_y = static_cast<i128>(b) * t;
    f.r_z = n0;
    f.rho = p.rho;
    f.a = static_cast<i128>(p.bin_a_q) * q;
    f.b = static_cast<i128>(p.bin_b_b) * b;
    f.c = static_cast<i128>(p.bin_c_h) * h;
    f.target = n0;
    return f;
}

std::int64_t ComposedForm::residue(std::int64_t x, std::int64_t y, std::int64_t z) const {
    const std::int64_t n = target;
    const i128 xr = mod(x, n), yr = mod(y, n), zr = mod(z, n);
    const i128 rv = mod(mod(r_x, n) * xr + mod(r_y, n) * yr + mod(r_z, n) * zr, n);
    const i128 bin = mod(mod(a, n) * xr % n * xr + mod(b, n) * xr % n * yr + mod(c, n) * yr % n * yr, n);
    return mod(rho * rv % n * rv + bin, n);
}

std::int64_t ComposedForm::y_limit() const {
    const i128 disc = disc_abs();
    if (disc <= 0) throw InternalError("binary part of F is not positive definite");
    const i128 bound = (8 * a * target - 1) / disc;
    return narrow(static_cast<i128>(isqrt(static_cast<u128>(bound))), "y limit");
}

Vec3 enumerate_point(const ComposedForm& f) {
    const i128 n = f.target;
    const i128 disc = f.disc_abs();
    const std::int64_t ylim = f.y_limit();

    for (std::int64_t step = 0; step <= 2 * ylim; ++step) {
        const i128 y = step % 2 == 1 ? (step + 1) / 2 : -(step / 2);
        // binary(x, y) <= n  <=>  (2a x + b y)^2 <= 4a n - disc y^2
        const i128 room = 4 * f.a * n - disc * y * y;
        if (room < 0) continue;
        const i128 s = static_cast<i128>(isqrt(static_cast<u128>(room)));
        const i128 xlo = ceil_div(-s - f.b * y, 2 * f.a);
        const i128 xhi = floor_div(s - f.b * y, 2 * f.a);
        for (i128 x = xlo; x <= xhi; ++x) {
            const i128 bin = f.binary(x, y);
            if (bin > n) continue;
            const i128 rem = n - bin;
            if (rem % f.rho != 0) continue;
            const u128 r_sq = static_cast<u128>(rem / f.rho);
            const i128 rmax = static_cast<i128>(isqrt(r_sq));
            if (static_cast<u128>(rmax * rmax) != r_sq) continue;
            const i128 partial = f.r_x * x + f.r_y * y;
            const i128 zlo = ceil_div(-rmax - partial, n);
            const i128 zhi = floor_div(rmax - partial, n);
            for (i128 z = zlo; z <= zhi; ++z) {
                const i128 r = partial + n * z;
                if (f.rho * r * r + bin != n) continue;
                if (x == 0 && y == 0 && z == 0) continue;
                Vec3 v{narrow(x, "x"), narrow(y, "y"), narrow(z, "z")};
                const std::int64_t lead = v.x != 0 ? v.x : (v.y != 0 ? v.y : v.z);
                if (lead < 0) v = {-v.x, -v.y, -v.z};
                return v;
            }
        }
    }
    throw InternalError("enumerate_point: no lattice point with F = " + std::to_string(f.target));
}

Vec3 to_lattice(const CaseProfile& p, const Vec3& search) {
    return p.x_sublattice ? Vec3{2 * search.x, search.y, search.z} : search;
}

Vec3 to_search(const CaseProfile& p, const Vec3& lattice) {
    if (!p.x_sublattice) return lattice;
    if (lattice.x % 2 != 0) throw std::invalid_argument("to_search: lattice point has odd x");
    return {lattice.x / 2, lattice.y, lattice.z};
}

namespace {

AnkenyWitness build_eligible(TernaryForm form, std::int64_t m, const BuildOptions& options) {
    const CoreReduction red = reduce_to_core(form, m);
    const CaseProfile& prof = select_case(form, red.core);

    AnkenyWitness w{};
    w.form = form;
    w.m = m;
    w.k = red.k;
    w.s = red.s;
    w.core = red.core;
    w.case_id = prof.id;

    Vec3 core_vec;
    if (prof.delegates) {
        const std::int64_t m1 = red.core / 2;
        auto inner = std::make_shared<const AnkenyWitness>(build_eligible(TernaryForm::D122, m1, options));
        const Vec3& u = inner->representation;
        core_vec = {2 * u.y, 2 * u.z, u.x};
        w.q = inner->q;
        w.t = inner->t;
        w.b = inner->b;
        w.h = inner->h;
        w.point = inner->point;
        w.r1 = inner->r1;
        w.binary_value = inner->binary_value;
        w.binary_rep = inner->binary_rep;
        w.delegate = std::move(inner);
    } else {
        const std::int64_t n0 = target_of(prof, red.core);
        w.q = find_q(prof, red.core, options.max_prime_candidates);
        w.t = solve_t(prof, n0, w.q);
        const BH bh = solve_bh(prof, n0, w.q);
        w.b = bh.b;
        w.h = bh.h;

        const ComposedForm f = ComposedForm::make(prof, n0, w.q, w.t, w.b, w.h);
        const Vec3 search = enumerate_point(f);
        w.point = to_lattice(prof, search);
        w.r1 = narrow(f.r(search.x, search.y, search.z), "R1");
        w.binary_value = narrow(f.binary(search.x, search.y), "binary value");
        try {
            w.binary_rep = represent_binary(w.binary_value, prof.binary_c, options.factor_budget);
        } catch (const NotRepresentable& e) {
            throw InternalError(std::string("descent failed: ") + e.what());
        }
        core_vec = absolute(assemble(prof.assembly, w.r1, w.binary_rep));
    }

    const Representation core_rep(form, red.core, core_vec);
    w.representation = lift_representation(core_rep, red.k, red.s).vec();
    if (evaluate(form, w.representation) != m) {
        throw InternalError("build_witness: final representation does not evaluate to m");
    }
    return w;
}

}  // namespace

BuildResult build_witness(TernaryForm form, std::int64_t m, const BuildOptions& options) {
    EligibilityVerdict verdict = eligibility(form, m);
    if (!verdict.eligible()) return verdict;
    return build_eligible(form, m, options);
}

ComposedForm composed_form(const AnkenyWitness& w) {
    const CaseProfile& prof = profile(w.case_id);
    if (prof.delegates) {
        if (!w.delegate) throw std::invalid_argument("composed_form: delegated witness has no inner witness");
        return composed_form(*w.delegate);
    }
    return ComposedForm::make(prof, target_of(prof, w.core), w.q, w.t, w.b, w.h);
}

WitnessCheck verify_witness(const AnkenyWitness& w) {
    WitnessCheck check;
    if (w.m < 1) {
        check.fail("m < 1");
        return check;
    }
    if (!eligibility(w.form, w.m).eligible()) {
        check.fail("m is not eligible for the form");
        return check;
    }
    const CoreReduction red = reduce_to_core(w.form, w.m);
    if (red.k != w.k || red.s != w.s || red.core != w.core) check.fail("m != 4^k s^2 core");

    const CaseProfile* prof = nullptr;
    try {
        prof = &select_case(w.form, red.core);
    } catch (const InternalError& e) {
        check.fail(e.what());
        return check;
    }
    if (prof->id != w.case_id) check.fail("case id does not match the core");

    const Vec3& rep = w.representation;
    if (rep.x < 0 || rep.y < 0 || rep.z < 0) check.fail("representation has a negative component");
    if (evaluate(w.form, rep) != w.m) check.fail("evaluate(form, representation) != m");

    if (prof->delegates) {
        if (!w.delegate) {
            check.fail("delegated case without inner witness");
            return check;
        }
        const AnkenyWitness& in = *w.delegate;
        if (in.form != TernaryForm::D122 || in.m != red.core / 2) {
            check.fail("inner witness is not for x2+2y2+2z2 at core/2");
        }
        WitnessCheck inner = verify_witness(in);
        for (auto& r : inner.reasons) check.fail("inner: " + r);
        if (in.q != w.q || in.t != w.t || in.b != w.b || in.h != w.h || !(in.point == w.point) ||
            in.r1 != w.r1 || in.binary_value != w.binary_value || !(in.binary_rep == w.binary_rep)) {
            check.fail("delegated fields differ from the inner witness");
        }
        const Vec3& u = in.representation;
        if (!(scale({2 * u.y, 2 * u.z, u.x}, red.k, red.s) == rep)) {
            check.fail("representation is not the image of the inner representation");
        }
        return check;
    }

    const std::int64_t n0 = target_of(*prof, red.core);
    const auto primes = odd_primes_of(red.core);

    if (!is_prime(static_cast<std::uint64_t>(w.q))) check.fail("q is not prime");
    if (w.q <= std::max<std::int64_t>(red.core, 2)) check.fail("q <= core");
    if (w.q % prof->q_modulus != prof->q_residue) check.fail("q is outside its residue class");
    if (!q_admissible(*prof, w.q, primes)) check.fail("character condition fails for q");
    if (w.q <= 2) return check;

    if (w.t < 0 || (n0 > 1 && w.t >= n0) || (n0 == 1 && w.t != 0)) check.fail("t out of range");
    if (mod(static_cast<i128>(w.t) * w.t % n0 * prof->t_den % n0 * w.q + 1, n0) != 0) {
        check.fail("t^2 != -1/(den) mod n0");
    }

    const i128 gn = static_cast<i128>(prof->gamma) * n0;
    if (static_cast<i128>(w.b) * w.b + gn != static_cast<i128>(prof->d_factor) * w.q * w.h) {
        check.fail("b^2+gamma*n0 != d*h");
    }
    if (w.b < 0 || !parity_ok(prof->b_parity, w.b)) check.fail("b parity");
    if (prof->h_odd && w.h % 2 == 0) check.fail("h is even");

    const ComposedForm f = ComposedForm::make(*prof, n0, w.q, w.t, w.b, w.h);
    if (f.disc_abs() != prof->disc_multiplier() * gn) check.fail("binary discriminant mismatch");

    if (w.point.is_zero()) {
        check.fail("lattice point is zero");
        return check;
    }
    if (prof->x_sublattice && w.point.x % 2 != 0) {
        check.fail("lattice point has odd x");
        return check;
    }
    const Vec3 s = to_search(*prof, w.point);
    if (f.value(s.x, s.y, s.z) != n0) check.fail("F(point) != target");
    if (f.r(s.x, s.y, s.z) != w.r1) check.fail("R1 != R(point)");
    if (f.binary(s.x, s.y) != w.binary_value) check.fail("binary value != binary part of F");
    if (w.binary_rep.c != prof->binary_c) check.fail("binary constant mismatch");
    if (w.binary_rep.value() != w.binary_value) check.fail("a^2 + c*beta^2 != n");

    const Vec3 assembled = scale(absolute(assemble(prof->assembly, w.r1, w.binary_rep)), red.k, red.s);
    if (!(assembled == rep)) check.fail("representation is not the assembled vector");
    return check;
}

}  // namespace ternrep
