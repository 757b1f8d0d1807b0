#pragma once

/**
 * @file ankeny.hpp
 * @brief Constructive geometry-of-numbers representation pipeline.
 *
 * For an eligible squarefree core the pipeline picks an auxiliary prime q in
 * a residue class with a quadratic-character condition over the primes of
 * the core, solves t^2 = -1/(den) modulo the core and b^2 = -gamma*n0
 * modulo q, and then searches the ellipsoid
 *
 *     F(x, y, z) = rho * R(x, y, z)^2 + A x^2 + B xy + C y^2  =  n0
 *
 * where R = alpha*t*q*x + b*t*y + n0*z. F is divisible by n0 for every
 * integer triple, and a convex-body volume count guarantees a nonzero point
 * with F < 2*n0, so the first point found has F = n0 exactly. The binary part
 * A x^2 + B xy + C y^2 is then split as a^2 + c*beta^2 and the pieces are
 * assembled into a representation of the core, which homogeneity lifts back
 * to m.
 *
 * Everything is integer arithmetic; the irrational linear map behind F is
 * never formed.
 */

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ternrep/arith.hpp"
#include "ternrep/descent.hpp"
#include "ternrep/factor.hpp"
#include "ternrep/forms.hpp"

namespace ternrep {

enum class CaseId { T1A, T1B, T1C, T1D, T1E, T2A, T2B, T2C, T2D, T3A, T3B };

std::string_view case_name(CaseId id);

/// Which character every odd prime p of the target must satisfy:
/// (-2q/p) = 1 or (-q/p) = 1.
enum class Character { MinusTwoQ, MinusQ };

enum class Parity { Odd, Even, Free };

/// How (R1, a, beta) become the (x, y, z) of the core's representation.
enum class Assembly {
    A_Beta_R,      // (a, beta, R)
    TwoBeta_A_R,   // (2 beta, a, R)
    R_A_Beta,      // (R, a, beta)
    A_R_Beta,      // (a, R, beta)
};

/// One row of the construction table. Coefficients that scale with q or b
/// are stored as small integer multipliers.
struct CaseProfile {
    CaseId id;
    TernaryForm form;
    bool delegates;       // T2D: reuse the D122 pipeline on core / 2
    bool even_core;       // n0 = core / 2 instead of core
    int q_residue;        // q = q_residue (mod q_modulus)
    int q_modulus;
    Character character;
    int t_den;            // t^2 = -(t_den * q)^-1 (mod n0)
    int gamma;            // b^2 = -gamma * n0 (mod q)
    Parity b_parity;
    int d_factor;         // b^2 + gamma*n0 = (d_factor*q) * h
    bool h_odd;
    int r_alpha;          // R = r_alpha*t*q*x + b*t*y + n0*z
    int rho;              // weight of R^2 in F
    int bin_a_q;          // A = bin_a_q * q
    int bin_b_b;          // B = bin_b_b * b
    int bin_c_h;          // C = bin_c_h * h
    int binary_c;         // binary value = a^2 + binary_c * beta^2
    bool x_sublattice;    // search x = 2x' (lattice point has even x)
    Assembly assembly;

    /// |B^2 - 4AC| of the binary part as a multiple of gamma*n0.
    int disc_multiplier() const { return bin_b_b == 2 ? 4 : 1; }
};

std::span<const CaseProfile> case_table();
const CaseProfile& profile(CaseId id);

/// Unique profile for an eligible squarefree core. Throws InternalError if
/// the table has no row for it.
const CaseProfile& select_case(TernaryForm form, std::int64_t core);

/// The modulus of the t congruence and the target of F.
std::int64_t target_of(const CaseProfile& p, std::int64_t core);

/// Does q satisfy the profile's residue class and character over the odd
/// primes of `odd_primes`?
bool q_admissible(const CaseProfile& p, std::int64_t q, std::span<const std::uint64_t> odd_primes);

/// Smallest prime q > max(core, 2) admissible for the profile, scanning at
/// most `cap` members of the residue class. Throws ResourceCap.
std::int64_t find_q(const CaseProfile& p, std::int64_t core, std::int64_t cap);

/// 0 <= t < modulus with t^2 = -(t_den*q)^-1 (mod modulus), assembled from
/// canonical per-prime roots. solve_t(., 1, q) = 0.
std::int64_t solve_t(const CaseProfile& p, std::int64_t modulus, std::int64_t q);

struct BH {
    std::int64_t b;
    std::int64_t h;
};

BH solve_bh(const CaseProfile& p, std::int64_t n0, std::int64_t q);

/// The integer ternary form F and linear form R for one instance, in the
/// search coordinates (x' instead of x for the sublattice cases).
struct ComposedForm {
    i128 r_x, r_y, r_z;   // R = r_x*x + r_y*y + r_z*z
    int rho;
    i128 a, b, c;         // binary part a x^2 + b xy + c y^2
    std::int64_t target;

    static ComposedForm make(const CaseProfile& p, std::int64_t n0, std::int64_t q, std::int64_t t,
                             std::int64_t b, std::int64_t h);

    i128 r(i128 x, i128 y, i128 z) const { return r_x * x + r_y * y + r_z * z; }
    i128 binary(i128 x, i128 y) const { return a * x * x + b * x * y + c * y * y; }
    i128 value(i128 x, i128 y, i128 z) const {
        i128 rv = r(x, y, z);
        return rho * rv * rv + binary(x, y);
    }
    /// F(x, y, z) mod target, exact for arbitrary 64-bit inputs.
    std::int64_t residue(std::int64_t x, std::int64_t y, std::int64_t z) const;
    /// 4ac - b^2 (positive for a definite binary part).
    i128 disc_abs() const { return 4 * a * c - b * b; }
    /// Largest |y| allowed by the body F < 2*target.
    std::int64_t y_limit() const;
};

/// First nonzero integer point with F = target in the fixed scan order
/// (y = 0, 1, -1, 2, -2, ...; x ascending; z ascending), negated if needed so
/// that its first nonzero coordinate is positive. Returned in search
/// coordinates. Throws InternalError if none exists.
Vec3 enumerate_point(const ComposedForm& f);

/// Lattice point from search coordinates.
Vec3 to_lattice(const CaseProfile& p, const Vec3& search);
Vec3 to_search(const CaseProfile& p, const Vec3& lattice);

struct AnkenyWitness {
    TernaryForm form;
    std::int64_t m;
    int k;
    std::int64_t s;
    std::int64_t core;
    CaseId case_id;
    std::int64_t q, t, b, h;
    Vec3 point;                 // lattice coordinates
    std::int64_t r1;
    std::int64_t binary_value;  // n
    BinaryRep binary_rep;
    Vec3 representation;        // of m, nonnegative components
    /// T2D only: the D122 witness for core / 2 that this one was built from.
    std::shared_ptr<const AnkenyWitness> delegate;
};

struct BuildOptions {
    std::int64_t max_prime_candidates = 1'000'000;
    FactorBudget factor_budget{};
};

using BuildResult = std::variant<AnkenyWitness, EligibilityVerdict>;

/// Full pipeline for any m >= 1. Throws ResourceCap or InternalError.
BuildResult build_witness(TernaryForm form, std::int64_t m, const BuildOptions& options = {});

struct WitnessCheck {
    bool ok = true;
    std::vector<std::string> reasons;

    explicit operator bool() const { return ok; }
    void fail(std::string reason) {
        ok = false;
        reasons.push_back(std::move(reason));
    }
};

/// Recomputes every identity of the witness from scratch.
WitnessCheck verify_witness(const AnkenyWitness& w);

/// F for the witness, rebuilt from its recorded parameters.
ComposedForm composed_form(const AnkenyWitness& w);

}  // namespace ternrep
