#include "ternrep/io.hpp"

#include <ostream>
#include <sstream>

namespace ternrep {

namespace {

Json vec_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Json skeleton(TernaryForm form, std::int64_t m, const EligibilityVerdict& v) {
    Json j;
    j["form"] = std::string(form_name(form));
    j["m"] = m;
    j["eligible"] = v.eligible();
    j["verdict"] = std::string(verdict_name(v.kind));
    for (const char* key : {"case", "k", "s", "core", "q", "t", "b", "h", "point", "R", "binary_value",
                            "binary_rep", "representation"}) {
        j[key] = nullptr;
    }
    j["verified"] = false;
    return j;
}

std::string vec_text(const Vec3& v) {
    std::ostringstream os;
    os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
    return os.str();
}

}  // namespace

Json witness_json(const AnkenyWitness& w) {
    Json j = skeleton(w.form, w.m, {EligibilityVerdict::Kind::Eligible, ""});
    j["case"] = std::string(case_name(w.case_id));
    j["k"] = w.k;
    j["s"] = w.s;
    j["core"] = w.core;
    j["q"] = w.q;
    j["t"] = w.t;
    j["b"] = w.b;
    j["h"] = w.h;
    j["point"] = vec_json(w.point);
    j["R"] = w.r1;
    j["binary_value"] = w.binary_value;
    j["binary_rep"] = Json::array({w.binary_rep.a, w.binary_rep.beta});
    j["representation"] = vec_json(w.representation);
    j["verified"] = verify_witness(w).ok;
    return j;
}

Json verdict_json(TernaryForm form, std::int64_t m, const EligibilityVerdict& v) { return skeleton(form, m, v); }

Json oracle_fallback_json(TernaryForm form, std::int64_t m, const EligibilityVerdict& v,
                          const std::optional<Vec3>& found) {
    Json j = skeleton(form, m, v);
    j["case"] = "oracle";
    if (found) {
        j["representation"] = vec_json(*found);
        j["verified"] = evaluate(form, *found) == m;
    }
    return j;
}

Json result_json(TernaryForm form, std::int64_t m, const BuildResult& r) {
    if (const auto* w = std::get_if<AnkenyWitness>(&r)) return witness_json(*w);
    return verdict_json(form, m, std::get<EligibilityVerdict>(r));
}

std::string witness_text(const AnkenyWitness& w) {
    std::ostringstream os;
    os << "form            " << form_name(w.form) << "\n"
       << "m               " << w.m << " = 4^" << w.k << " * " << w.s << "^2 * " << w.core << "\n"
       << "case            " << case_name(w.case_id) << "\n";
    if (w.delegate) {
        os << "delegated to    " << form_name(w.delegate->form) << " at " << w.delegate->m << " (case "
           << case_name(w.delegate->case_id) << ") -> " << vec_text(w.delegate->representation) << "\n";
    }
    os << "q               " << w.q << "\n"
       << "t               " << w.t << "\n"
       << "b, h            " << w.b << ", " << w.h << "\n"
       << "point           " << vec_text(w.point) << "\n"
       << "R1              " << w.r1 << "\n"
       << "binary value    " << w.binary_value << " = " << w.binary_rep.a << "^2 + " << w.binary_rep.c << "*"
       << w.binary_rep.beta << "^2\n"
       << "representation  " << vec_text(w.representation) << "\n";
    WitnessCheck check = verify_witness(w);
    os << "verified        " << (check.ok ? "true" : "false") << "\n";
    for (const auto& r : check.reasons) os << "  failed: " << r << "\n";
    return os.str();
}

std::string csv_row(const ScanRow& row) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream os;
    os << row.m << ',' << verdict_name(row.verdict) << ',' << flag(row.pipeline_found) << ','
       << flag(row.oracle_found) << ',' << flag(row.agree) << ',';
    if (row.pipeline_found && row.representation) {
        os << row.representation->x << ',' << row.representation->y << ',' << row.representation->z << ',';
    } else {
        os << ",,,";
    }
    if (row.q) os << *row.q;
    os << ',' << row.elapsed_micros;
    return os.str();
}

void write_scan_csv(std::ostream& out, const ScanReport& report) {
    out << kScanCsvHeader << '\n';
    for (const auto& row : report.rows) out << csv_row(row) << '\n';
}

}  // namespace ternrep
