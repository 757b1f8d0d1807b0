#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ternrep/ankeny.hpp"
#include "ternrep/descent.hpp"
#include "ternrep/forms.hpp"

namespace ternrep {

/// Lexicographically first (x, y, z) with x, y, z >= 0 and
/// evaluate(form, (x, y, z)) = m, scanning x, then y, then z.
std::optional<Vec3> brute_force_ternary(TernaryForm form, std::int64_t m);

/// First (a, beta) with a, beta >= 0 and a^2 + c*beta^2 = n, a ascending.
std::optional<BinaryRep> brute_force_binary(int c, std::int64_t n);

struct ScanRow {
    std::int64_t m = 0;
    EligibilityVerdict::Kind verdict = EligibilityVerdict::Kind::Eligible;
    bool pipeline_found = false;
    bool oracle_found = false;
    bool agree = false;
    std::optional<Vec3> representation;  // pipeline output
    std::optional<std::int64_t> q;
    std::int64_t elapsed_micros = 0;
    std::string error;  // non-empty when the row hit ResourceCap or InternalError
    bool resource_cap = false;
    std::shared_ptr<const AnkenyWitness> witness;
};

struct ScanReport {
    TernaryForm form;
    std::vector<ScanRow> rows;

    std::size_t disagreements() const;
    std::size_t flagged() const;
};

struct ScanOptions {
    BuildOptions build{};
    unsigned jobs = 1;
    /// Record wall-clock time per row; off keeps the report reproducible.
    bool timing = false;
    /// Keep every witness on its row (used by audits).
    bool keep_witnesses = false;
};

/// For D122/D112 agree means pipeline_found == oracle_found; for D113/D117
/// it means pipeline_found implies oracle_found. Rows are ordered by m
/// regardless of the number of jobs.
ScanReport scan_compare(TernaryForm form, std::int64_t lo, std::int64_t hi, const ScanOptions& options = {});

/// Single row of scan_compare.
ScanRow compare_one(TernaryForm form, std::int64_t m, const ScanOptions& options = {});

}  // namespace ternrep
