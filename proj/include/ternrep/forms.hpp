#pragma once

/**
 * @file forms.hpp
 * @brief The four diagonal ternary forms and their local conditions.
 *
 *   D122: x^2 + 2y^2 + 2z^2     D112: x^2 + y^2 + 2z^2
 *   D113: x^2 + y^2 + 3z^2      D117: x^2 + y^2 + 7z^2
 *
 * For D122 and D112 the eligibility test is exact: a positive integer is
 * represented iff it is not obstructed. For D113 and D117 only a sufficient
 * condition is known, so those forms never report Obstructed.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace ternrep {

enum class TernaryForm { D122, D112, D113, D117 };

inline constexpr std::array<TernaryForm, 4> kAllForms = {TernaryForm::D122, TernaryForm::D112,
                                                         TernaryForm::D113, TernaryForm::D117};

struct Coefficients {
    int c1, c2, c3;
};

constexpr Coefficients coefficients(TernaryForm form) {
    switch (form) {
        case TernaryForm::D122: return {1, 2, 2};
        case TernaryForm::D112: return {1, 1, 2};
        case TernaryForm::D113: return {1, 1, 3};
        case TernaryForm::D117: return {1, 1, 7};
    }
    return {0, 0, 0};
}

/// Command-line spelling, e.g. "x2+2y2+2z2".
std::string_view form_name(TernaryForm form);
std::optional<TernaryForm> parse_form(std::string_view name);
/// Short identifier, e.g. "D122".
std::string_view form_id(TernaryForm form);

struct Vec3 {
    std::int64_t x = 0, y = 0, z = 0;

    friend bool operator==(const Vec3&, const Vec3&) = default;
    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

/// c1*x^2 + c2*y^2 + c3*z^2. Throws std::overflow_error past 2^63.
std::int64_t evaluate(TernaryForm form, const Vec3& v);

/// A vector certified to represent `value` by `form`; the constructor
/// checks the identity and throws InternalError if it fails.
class Representation {
public:
    Representation(TernaryForm form, std::int64_t value, Vec3 vec);

    TernaryForm form() const { return form_; }
    std::int64_t value() const { return value_; }
    const Vec3& vec() const { return vec_; }

private:
    TernaryForm form_;
    std::int64_t value_;
    Vec3 vec_;
};

struct EligibilityVerdict {
    enum class Kind { Eligible, Obstructed, OutsideCoveredCases };
    Kind kind;
    std::string detail;

    bool eligible() const { return kind == Kind::Eligible; }
};

std::string_view verdict_name(EligibilityVerdict::Kind kind);

/// Arithmetic eligibility test; never searches. Throws std::invalid_argument
/// for m = 0.
EligibilityVerdict eligibility(TernaryForm form, std::int64_t m);

/// m = 4^k * s^2 * core with s odd and core squarefree (odd, or twice odd).
struct CoreReduction {
    int k;
    std::int64_t s;
    std::int64_t core;
};

CoreReduction reduce_to_core(TernaryForm form, std::int64_t m);

/// Scales every coordinate by 2^k * s.
Representation lift_representation(const Representation& rep, int k, std::int64_t s);

}  // namespace ternrep
