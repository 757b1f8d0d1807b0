#include "ternrep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <vector>

#include "CLI11.hpp"
#include "ternrep/ankeny.hpp"
#include "ternrep/errors.hpp"
#include "ternrep/io.hpp"
#include "ternrep/oracle.hpp"
#include "ternrep/selftest.hpp"

namespace ternrep::cli {

namespace {

constexpr std::int64_t kMaxSupportedM = std::int64_t{1} << 40;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string form;
    std::int64_t m = 0;
    bool json = false;
    bool fallback_oracle = false;
    std::int64_t max_prime_candidates = 1'000'000;
    std::int64_t lo = 1;
    std::int64_t hi = 1;
    std::string out_file;
    unsigned jobs = 1;
    bool timing = false;
};

TernaryForm require_form(const std::string& name) {
    if (auto f = parse_form(name)) return *f;
    throw UsageError("unknown form '" + name + "' (expected x2+2y2+2z2, x2+y2+2z2, x2+y2+3z2 or x2+y2+7z2)");
}

void require_m(std::int64_t m) {
    if (m < 1 || m > kMaxSupportedM) {
        throw UsageError("--m must be between 1 and 2^40, got " + std::to_string(m));
    }
}

int code_for(EligibilityVerdict::Kind kind) {
    switch (kind) {
        case EligibilityVerdict::Kind::Eligible: return kRepresentable;
        case EligibilityVerdict::Kind::Obstructed: return kObstructed;
        case EligibilityVerdict::Kind::OutsideCoveredCases: return kOutsideCoveredCases;
    }
    return kInternalError;
}

std::string vec_text(const Vec3& v) {
    return "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " + std::to_string(v.z) + ")";
}

int run_represent(const Args& a, bool full_audit, std::ostream& out) {
    const TernaryForm form = require_form(a.form);
    require_m(a.m);
    const bool partial = form == TernaryForm::D113 || form == TernaryForm::D117;
    if (a.fallback_oracle && !partial) {
        throw UsageError("--fallback-oracle only applies to x2+y2+3z2 and x2+y2+7z2");
    }
    if (a.max_prime_candidates < 1) throw UsageError("--max-prime-candidates must be positive");

    BuildOptions opts;
    opts.max_prime_candidates = a.max_prime_candidates;
    const BuildResult result = build_witness(form, a.m, opts);

    if (const auto* w = std::get_if<AnkenyWitness>(&result)) {
        const bool ok = verify_witness(*w).ok;
        if (a.json) {
            out << witness_json(*w).dump() << '\n';
        } else if (full_audit) {
            out << witness_text(*w);
        } else {
            out << a.m << " = " << form_name(form) << " at " << vec_text(w->representation) << "  [case "
                << case_name(w->case_id) << ", q = " << w->q << "]\n";
        }
        return ok ? kRepresentable : kInternalError;
    }

    const auto& verdict = std::get<EligibilityVerdict>(result);
    if (verdict.kind == EligibilityVerdict::Kind::OutsideCoveredCases && a.fallback_oracle) {
        const auto found = brute_force_ternary(form, a.m);
        if (a.json) {
            out << oracle_fallback_json(form, a.m, verdict, found).dump() << '\n';
        } else if (found) {
            out << a.m << " = " << form_name(form) << " at " << vec_text(*found) << "  [exhaustive search]\n";
        } else {
            out << a.m << " is not represented by " << form_name(form) << " [exhaustive search]\n";
        }
        return found ? kRepresentable : kObstructed;
    }
    if (a.json) {
        out << verdict_json(form, a.m, verdict).dump() << '\n';
    } else if (verdict.kind == EligibilityVerdict::Kind::Obstructed) {
        out << a.m << " is not represented by " << form_name(form) << ": " << verdict.detail << "\n";
    } else {
        out << a.m << " is outside the covered cases for " << form_name(form) << ": " << verdict.detail << "\n";
    }
    return code_for(verdict.kind);
}

int run_check(const Args& a, std::ostream& out) {
    const TernaryForm form = require_form(a.form);
    require_m(a.m);
    const EligibilityVerdict v = eligibility(form, a.m);
    if (a.json) {
        Json j;
        j["form"] = std::string(form_name(form));
        j["m"] = a.m;
        j["verdict"] = std::string(verdict_name(v.kind));
        j["detail"] = v.detail;
        out << j.dump() << '\n';
    } else {
        out << verdict_name(v.kind) << ": " << v.detail << "\n";
    }
    return code_for(v.kind);
}

int run_oracle(const Args& a, std::ostream& out) {
    const TernaryForm form = require_form(a.form);
    require_m(a.m);
    const auto found = brute_force_ternary(form, a.m);
    if (a.json) {
        Json j;
        j["form"] = std::string(form_name(form));
        j["m"] = a.m;
        j["representation"] = found ? Json::array({found->x, found->y, found->z}) : Json(nullptr);
        out << j.dump() << '\n';
    } else if (found) {
        out << vec_text(*found) << "\n";
    } else {
        out << "none\n";
    }
    return found ? kRepresentable : kObstructed;
}

int run_scan(const Args& a, std::ostream& out, std::ostream& err) {
    const TernaryForm form = require_form(a.form);
    if (a.lo < 1 || a.hi < a.lo || a.hi > kMaxSupportedM) throw UsageError("scan needs 1 <= --lo <= --hi <= 2^40");
    if (a.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (a.max_prime_candidates < 1) throw UsageError("--max-prime-candidates must be positive");

    ScanOptions opts;
    opts.jobs = a.jobs;
    opts.timing = a.timing;
    opts.build.max_prime_candidates = a.max_prime_candidates;
    const ScanReport report = scan_compare(form, a.lo, a.hi, opts);

    if (a.out_file.empty()) {
        write_scan_csv(out, report);
    } else {
        std::ofstream file(a.out_file, std::ios::binary);
        if (!file) throw UsageError("cannot open " + a.out_file + " for writing");
        write_scan_csv(file, report);
    }

    const std::size_t bad = report.disagreements();
    const std::size_t capped = static_cast<std::size_t>(
        std::count_if(report.rows.begin(), report.rows.end(), [](const ScanRow& r) { return r.resource_cap; }));
    err << "scanned " << report.rows.size() << " values of " << form_name(form) << ": " << bad
        << " disagreements, " << report.flagged() << " flagged\n";
    if (bad > capped) return kInternalError;
    if (capped > 0) return kResourceCap;
    return kRepresentable;
}

int run_selftest_command(std::ostream& out) {
    bool all = true;
    for (const auto& r : run_selftest()) {
        out << (r.passed ? "ok    " : "FAIL  ") << r.name;
        if (!r.passed) out << ": " << r.detail;
        out << "\n";
        all = all && r.passed;
    }
    return all ? kRepresentable : kInternalError;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructive representations by x2+2y2+2z2, x2+y2+2z2, x2+y2+3z2 and x2+y2+7z2", "ternrep"};
    app.require_subcommand(1);
    Args a;

    auto add_form_m = [&](CLI::App* sub) {
        sub->add_option("--form", a.form, "x2+2y2+2z2 | x2+y2+2z2 | x2+y2+3z2 | x2+y2+7z2")->required();
        sub->add_option("--m", a.m, "positive integer to represent")->required();
        sub->add_flag("--json", a.json, "machine-readable output");
    };

    auto* represent = app.add_subcommand("represent", "build and verify a representation");
    auto* witness = app.add_subcommand("witness", "like represent, with the full audit trail");
    for (auto* sub : {represent, witness}) {
        add_form_m(sub);
        sub->add_flag("--fallback-oracle", a.fallback_oracle, "exhaustive search outside the covered cases");
        sub->add_option("--max-prime-candidates", a.max_prime_candidates, "auxiliary prime search budget");
    }
    auto* check = app.add_subcommand("check", "eligibility only");
    add_form_m(check);
    auto* oracle = app.add_subcommand("oracle", "exhaustive search only");
    add_form_m(oracle);

    auto* scan = app.add_subcommand("scan", "compare pipeline and exhaustive search over a range");
    scan->add_option("--form", a.form, "form name")->required();
    scan->add_option("--lo", a.lo, "first m")->required();
    scan->add_option("--hi", a.hi, "last m")->required();
    scan->add_option("--out", a.out_file, "CSV output file (default stdout)");
    scan->add_option("--jobs", a.jobs, "worker threads");
    scan->add_option("--max-prime-candidates", a.max_prime_candidates, "auxiliary prime search budget");
    scan->add_flag("--timing", a.timing, "fill elapsed_micros (output is then not reproducible)");

    auto* selftest = app.add_subcommand("selftest", "run the invariant suites");

    try {
        // CLI11 consumes a reversed argument vector
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kRepresentable;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    }

    try {
        if (represent->parsed()) return run_represent(a, false, out);
        if (witness->parsed()) return run_represent(a, true, out);
        if (check->parsed()) return run_check(a, out);
        if (oracle->parsed()) return run_oracle(a, out);
        if (scan->parsed()) return run_scan(a, out, err);
        if (selftest->parsed()) return run_selftest_command(out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsageError;
    } catch (const ResourceCap& e) {
        err << "resource cap: " << e.what() << "\n";
        return kResourceCap;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    err << app.help();
    return kUsageError;
}

}  // namespace ternrep::cli
