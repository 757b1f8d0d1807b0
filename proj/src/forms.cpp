#include "ternrep/forms.hpp"

#include <stdexcept>
#include <string>

#include "ternrep/arith.hpp"
#include "ternrep/errors.hpp"
#include "ternrep/factor.hpp"

namespace ternrep {

std::string_view form_name(TernaryForm form) {
    switch (form) {
        case TernaryForm::D122: return "x2+2y2+2z2";
        case TernaryForm::D112: return "x2+y2+2z2";
        case TernaryForm::D113: return "x2+y2+3z2";
        case TernaryForm::D117: return "x2+y2+7z2";
    }
    return "?";
}

std::string_view form_id(TernaryForm form) {
    switch (form) {
        case TernaryForm::D122: return "D122";
        case TernaryForm::D112: return "D112";
        case TernaryForm::D113: return "D113";
        case TernaryForm::D117: return "D117";
    }
    return "?";
}

std::optional<TernaryForm> parse_form(std::string_view name) {
    for (TernaryForm f : kAllForms) {
        if (name == form_name(f) || name == form_id(f)) return f;
    }
    return std::nullopt;
}

std::int64_t evaluate(TernaryForm form, const Vec3& v) {
    auto [c1, c2, c3] = coefficients(form);
    i128 value = static_cast<i128>(c1) * v.x * v.x + static_cast<i128>(c2) * v.y * v.y +
                 static_cast<i128>(c3) * v.z * v.z;
    if (value > INT64_MAX) throw std::overflow_error("evaluate: value exceeds 2^63");
    return static_cast<std::int64_t>(value);
}

Representation::Representation(TernaryForm form, std::int64_t value, Vec3 vec)
    : form_(form), value_(value), vec_(vec) {
    if (evaluate(form, vec) != value) {
        throw InternalError("representation of " + std::to_string(value) + " by " +
                            std::string(form_name(form)) + " does not evaluate correctly");
    }
}

std::string_view verdict_name(EligibilityVerdict::Kind kind) {
    switch (kind) {
        case EligibilityVerdict::Kind::Eligible: return "Eligible";
        case EligibilityVerdict::Kind::Obstructed: return "Obstructed";
        case EligibilityVerdict::Kind::OutsideCoveredCases: return "OutsideCoveredCases";
    }
    return "?";
}

namespace {

std::int64_t strip_fours(std::int64_t m) {
    while (m % 4 == 0) m /= 4;
    return m;
}

}  // namespace

EligibilityVerdict eligibility(TernaryForm form, std::int64_t m) {
    using Kind = EligibilityVerdict::Kind;
    if (m <= 0) throw std::invalid_argument("eligibility: m must be positive");
    const std::int64_t stripped = strip_fours(m);
    const std::string ms = std::to_string(m);

    switch (form) {
        case TernaryForm::D122:
            if (stripped % 8 == 7) {
                return {Kind::Obstructed, ms + " is of the form 4^k(8l+7)"};
            }
            return {Kind::Eligible, ms + " is not of the form 4^k(8l+7)"};
        case TernaryForm::D112:
            if (stripped % 16 == 14) {
                return {Kind::Obstructed, ms + " is of the form 4^k(16l+14)"};
            }
            return {Kind::Eligible, ms + " is not of the form 4^k(16l+14)"};
        case TernaryForm::D117: {
            const bool residue = stripped % 8 == 5;
            const bool even_ord = ord_p(static_cast<std::uint64_t>(m), 7) % 2 == 0;
            if (residue && even_ord) {
                return {Kind::Eligible, ms + " is of the form 4^k(8l+5) with ord_7 even"};
            }
            return {Kind::OutsideCoveredCases,
                    ms + (residue ? " has odd ord_7" : " is not of the form 4^k(8l+5)") +
                        "; representability is not decided by the covered cases"};
        }
        case TernaryForm::D113: {
            const bool residue = stripped % 8 == 1;
            const bool even_ord = ord_p(static_cast<std::uint64_t>(m), 3) % 2 == 0;
            if (residue && even_ord) {
                return {Kind::Eligible, ms + " is of the form 4^k(8l+1) with ord_3 even"};
            }
            return {Kind::OutsideCoveredCases,
                    ms + (residue ? " has odd ord_3" : " is not of the form 4^k(8l+1)") +
                        "; representability is not decided by the covered cases"};
        }
    }
    throw std::invalid_argument("eligibility: unknown form");
}

CoreReduction reduce_to_core(TernaryForm form, std::int64_t m) {
    if (!eligibility(form, m).eligible()) {
        throw std::invalid_argument("reduce_to_core: " + std::to_string(m) + " is not eligible for " +
                                    std::string(form_name(form)));
    }
    CoreReduction r{0, 1, 0};
    while (m % 4 == 0) {
        m /= 4;
        ++r.k;
    }
    // At most one factor of 2 remains, so the square part is odd.
    auto split = squarefree_decompose(static_cast<std::uint64_t>(m));
    r.s = static_cast<std::int64_t>(split.square_root);
    r.core = static_cast<std::int64_t>(split.core);
    return r;
}

Representation lift_representation(const Representation& rep, int k, std::int64_t s) {
    if (k < 0 || s < 1) throw std::invalid_argument("lift_representation: need k >= 0, s >= 1");
    i128 scale = static_cast<i128>(s) << k;
    i128 value = static_cast<i128>(rep.value()) * scale * scale;
    if (scale > INT64_MAX || value > INT64_MAX) {
        throw std::overflow_error("lift_representation: scaled value exceeds 2^63");
    }
    auto sc = static_cast<std::int64_t>(scale);
    const Vec3& v = rep.vec();
    return Representation(rep.form(), static_cast<std::int64_t>(value),
                          Vec3{v.x * sc, v.y * sc, v.z * sc});
}

}  // namespace ternrep
