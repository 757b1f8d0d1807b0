#pragma once

/**
 * @file io.hpp
 * @brief Machine-readable output: witness JSON and scan CSV.
 *
 * Witness JSON fields, in order: form, m, eligible, verdict, case, k, s,
 * core, q, t, b, h, point, R, binary_value, binary_rep, representation,
 * verified. Fields that do not apply are null.
 *
 * Scan CSV header: m,verdict,pipeline_found,oracle_found,agree,x,y,z,q,elapsed_micros
 */

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "ternrep/ankeny.hpp"
#include "ternrep/oracle.hpp"

namespace ternrep {

using Json = nlohmann::ordered_json;

inline constexpr const char* kScanCsvHeader =
    "m,verdict,pipeline_found,oracle_found,agree,x,y,z,q,elapsed_micros";

Json witness_json(const AnkenyWitness& w);
Json verdict_json(TernaryForm form, std::int64_t m, const EligibilityVerdict& v);
/// Outside-covered-cases result answered by exhaustive search instead.
Json oracle_fallback_json(TernaryForm form, std::int64_t m, const EligibilityVerdict& v,
                          const std::optional<Vec3>& found);
Json result_json(TernaryForm form, std::int64_t m, const BuildResult& r);

/// Multi-line human-readable audit trail.
std::string witness_text(const AnkenyWitness& w);

std::string csv_row(const ScanRow& row);
void write_scan_csv(std::ostream& out, const ScanReport& report);

}  // namespace ternrep
