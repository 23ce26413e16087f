// io.hpp
// File formats: JSON state files (X-form or full-matrix form), JSON report
// serialization, the scan CSV, and audit summaries. Field names are part of
// the CLI contract and must stay stable.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "xent/audit.hpp"
#include "xent/criteria.hpp"
#include "xent/scanner.hpp"
#include "xent/states.hpp"

namespace xent {

// X-form: {"diag": [r11, r22, r33, r44],
//          "rho14": {"re": _, "im": _}, "rho23": {"re": _, "im": _}}
nlohmann::json state_to_json(const XState& s);

// Full-matrix form: {"matrix": [[{"re": _, "im": _} x4] x4]}.
nlohmann::json matrix_to_json(const Matrix4& m);

// Accepts either form. The matrix form is reduced via from_matrix, so its
// Hermiticity / trace / X-shape errors propagate. Structural problems
// (missing keys, wrong types) raise ParseError instead.
XState state_from_json(const nlohmann::json& j, const Tolerance& tol = {});

XState read_state_file(const std::string& path, const Tolerance& tol = {});

// Writes the X-form (states handled by this library are X-shaped by
// construction).
void write_state_file(const std::string& path, const XState& s);

// Document for a general matrix: the compact X-form when the matrix reduces
// to an X-state, the full matrix form when only the shape check fails.
// Hermiticity and trace problems propagate.
nlohmann::json matrix_document_to_json(const Matrix4& m, const Tolerance& tol = {});

nlohmann::json report_to_json(const CriterionReport& rep);
nlohmann::json derivation_report_to_json(const DerivationReport& rep);
nlohmann::json audit_summary_to_json(const AuditSummary& sum);
nlohmann::json disagreements_to_json(const std::vector<AuditDisagreement>& dumps);

// CSV with header
//   x,y,valid,ppt_verdict,ppt_min_eigenvalue,ccn_trace_norm,ccn_verdict,
//   thm1_threshold,thm1_verdict,concurrence
// Floats carry 10 significant digits. Invalid points keep their row with
// empty criterion columns; a thm1 threshold with no negative branch is
// empty as well. Output is byte-stable for identical inputs.
std::string scan_to_csv(const std::vector<ScanRecord>& records);

// "%.10g" formatting used across CSV and text reports.
std::string format_double(double v);

}  // namespace xent
