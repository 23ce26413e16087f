#include "xent/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace xent {

namespace {

nlohmann::json complex_to_json(const ComplexScalar& z) {
    return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

ComplexScalar complex_from_json(const nlohmann::json& j, const char* what) {
    if (j.is_number()) return ComplexScalar(j.get<double>(), 0.0);
    if (j.is_object() && j.contains("re") && j.contains("im") && j["re"].is_number() &&
        j["im"].is_number())
        return ComplexScalar(j["re"].get<double>(), j["im"].get<double>());
    throw ParseError(std::string(what) + " must be a number or an {\"re\", \"im\"} object");
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

nlohmann::json state_to_json(const XState& s) {
    return nlohmann::json{{"diag", {s.rho11, s.rho22, s.rho33, s.rho44}},
                          {"rho14", complex_to_json(s.rho14)},
                          {"rho23", complex_to_json(s.rho23)}};
}

nlohmann::json matrix_to_json(const Matrix4& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(row);
    }
    return nlohmann::json{{"matrix", rows}};
}

XState state_from_json(const nlohmann::json& j, const Tolerance& tol) {
    if (!j.is_object()) throw ParseError("state document must be a JSON object");

    if (j.contains("matrix")) {
        const auto& rows = j["matrix"];
        if (!rows.is_array() || rows.size() != 4)
            throw ParseError("\"matrix\" must be an array of 4 rows");
        Matrix4 m;
        for (int i = 0; i < 4; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || row.size() != 4)
                throw ParseError("each matrix row must hold 4 entries");
            for (int c = 0; c < 4; ++c)
                m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)], "matrix entry");
        }
        return from_matrix(m, tol);
    }

    if (!j.contains("diag")) throw ParseError("state document needs \"diag\" or \"matrix\"");
    const auto& diag = j["diag"];
    if (!diag.is_array() || diag.size() != 4)
        throw ParseError("\"diag\" must be an array of 4 numbers");
    for (const auto& v : diag)
        if (!v.is_number()) throw ParseError("\"diag\" must be an array of 4 numbers");

    XState s;
    s.rho11 = diag[0].get<double>();
    s.rho22 = diag[1].get<double>();
    s.rho33 = diag[2].get<double>();
    s.rho44 = diag[3].get<double>();
    if (j.contains("rho14")) s.rho14 = complex_from_json(j["rho14"], "\"rho14\"");
    if (j.contains("rho23")) s.rho23 = complex_from_json(j["rho23"], "\"rho23\"");
    return s;
}

XState read_state_file(const std::string& path, const Tolerance& tol) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open state file \"" + path + "\"");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("malformed JSON in \"" + path + "\": " + e.what());
    }
    return state_from_json(j, tol);
}

void write_state_file(const std::string& path, const XState& s) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write state file \"" + path + "\"");
    out << state_to_json(s).dump(2) << "\n";
}

nlohmann::json matrix_document_to_json(const Matrix4& m, const Tolerance& tol) {
    try {
        return state_to_json(from_matrix(m, tol));
    } catch (const NotXShapedError&) {
        return matrix_to_json(m);
    }
}

nlohmann::json report_to_json(const CriterionReport& rep) {
    return nlohmann::json{{"criterion", to_string(rep.criterion)},
                          {"verdict", to_string(rep.verdict)},
                          {"lhs", rep.lhs},
                          {"rhs", rep.rhs},
                          {"margin", rep.margin},
                          {"branch", to_string(rep.branch)}};
}

nlohmann::json derivation_report_to_json(const DerivationReport& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks)
        checks.push_back(nlohmann::json{{"id", c.id},
                                        {"lhs", c.lhs},
                                        {"rhs", c.rhs},
                                        {"holds", c.holds},
                                        {"applicable", c.applicable}});
    return nlohmann::json{
        {"P", rep.P}, {"Q", rep.Q}, {"branch", to_string(rep.branch)}, {"checks", checks}};
}

nlohmann::json audit_summary_to_json(const AuditSummary& sum) {
    return nlohmann::json{{"samples", sum.samples},
                          {"seed", sum.seed},
                          {"ppt_entangled", sum.ppt_entangled},
                          {"ccn_detected", sum.ccn_detected},
                          {"thm1_detected", sum.thm1_detected},
                          {"ccn_missed_but_thm1_caught", sum.ccn_missed_but_thm1_caught},
                          {"disagreements", sum.disagreements.size()}};
}

nlohmann::json disagreements_to_json(const std::vector<AuditDisagreement>& dumps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : dumps)
        arr.push_back(nlohmann::json{{"sample_index", d.sample_index},
                                     {"state", state_to_json(d.state)},
                                     {"trace_norm", d.trace_norm},
                                     {"threshold", d.threshold},
                                     {"margin", d.trace_norm - d.threshold},
                                     {"branch", to_string(d.branch)}});
    return arr;
}

std::string scan_to_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "x,y,valid,ppt_verdict,ppt_min_eigenvalue,ccn_trace_norm,ccn_verdict,"
           "thm1_threshold,thm1_verdict,concurrence\n";
    for (const auto& r : records) {
        out << format_double(r.point.x) << ',' << format_double(r.point.y) << ','
            << (r.valid ? "true" : "false") << ',';
        if (!r.valid) {
            out << ",,,,,,\n";
            continue;
        }
        const auto& rep = *r.reports;
        out << to_string(rep.ppt.verdict) << ',' << format_double(rep.ppt_min_eigenvalue) << ','
            << format_double(rep.ccn.lhs) << ',' << to_string(rep.ccn.verdict) << ',';
        if (rep.thm1.verdict == Verdict::NotApplicable)
            out << ',';
        else
            out << format_double(rep.thm1.rhs) << ',';
        out << to_string(rep.thm1.verdict) << ',' << format_double(rep.concurrence) << '\n';
    }
    return out.str();
}

}  // namespace xent
