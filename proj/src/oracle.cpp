#include "ternrep/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "ternrep/arith.hpp"
#include "ternrep/errors.hpp"

namespace ternrep {

std::optional<Vec3> brute_force_ternary(TernaryForm form, std::int64_t m) {
    if (m < 0) return std::nullopt;
    const auto [c1, c2, c3] = coefficients(form);
    for (std::int64_t x = 0; c1 * x * x <= m; ++x) {
        const std::int64_t after_x = m - c1 * x * x;
        for (std::int64_t y = 0; c2 * y * y <= after_x; ++y) {
            const std::int64_t rest = after_x - c2 * y * y;
            std::uint64_t z = 0;
            if (rest % c3 == 0 && is_square(static_cast<std::uint64_t>(rest / c3), &z)) {
                return Vec3{x, y, static_cast<std::int64_t>(z)};
            }
        }
    }
    return std::nullopt;
}

std::optional<BinaryRep> brute_force_binary(int c, std::int64_t n) {
    if (n < 0 || c < 1) return std::nullopt;
    for (std::int64_t a = 0; a * a <= n; ++a) {
        const std::int64_t rest = n - a * a;
        std::uint64_t beta = 0;
        if (rest % c == 0 && is_square(static_cast<std::uint64_t>(rest / c), &beta)) {
            return BinaryRep{a, static_cast<std::int64_t>(beta), c};
        }
    }
    return std::nullopt;
}

std::size_t ScanReport::disagreements() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.agree; }));
}

std::size_t ScanReport::flagged() const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const ScanRow& r) { return !r.error.empty(); }));
}

ScanRow compare_one(TernaryForm form, std::int64_t m, const ScanOptions& options) {
    using Clock = std::chrono::steady_clock;
    ScanRow row;
    row.m = m;
    const auto start = Clock::now();
    try {
        BuildResult result = build_witness(form, m, options.build);
        if (auto* w = std::get_if<AnkenyWitness>(&result)) {
            row.verdict = EligibilityVerdict::Kind::Eligible;
            WitnessCheck check = verify_witness(*w);
            row.pipeline_found = check.ok;
            if (!check.ok) row.error = "witness failed verification: " + check.reasons.front();
            row.representation = w->representation;
            row.q = w->q;
            if (options.keep_witnesses) row.witness = std::make_shared<const AnkenyWitness>(std::move(*w));
        } else {
            row.verdict = std::get<EligibilityVerdict>(result).kind;
        }
    } catch (const ResourceCap& e) {
        row.verdict = eligibility(form, m).kind;
        row.error = e.what();
        row.resource_cap = true;
    } catch (const InternalError& e) {
        row.verdict = eligibility(form, m).kind;
        row.error = e.what();
    }
    if (options.timing) {
        row.elapsed_micros =
            std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
    }

    row.oracle_found = brute_force_ternary(form, m).has_value();
    const bool exact = form == TernaryForm::D122 || form == TernaryForm::D112;
    row.agree = exact ? row.pipeline_found == row.oracle_found : (!row.pipeline_found || row.oracle_found);
    return row;
}

ScanReport scan_compare(TernaryForm form, std::int64_t lo, std::int64_t hi, const ScanOptions& options) {
    if (lo < 1 || hi < lo) throw std::invalid_argument("scan_compare: need 1 <= lo <= hi");
    ScanReport report{form, {}};
    const auto count = static_cast<std::size_t>(hi - lo + 1);
    report.rows.resize(count);

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(count)));
    auto work = [&](unsigned worker) {
        // interleaved partition keeps per-worker cost balanced as m grows
        for (std::size_t i = worker; i < count; i += jobs) {
            report.rows[i] = compare_one(form, lo + static_cast<std::int64_t>(i), options);
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    }
    return report;
}

}  // namespace ternrep
