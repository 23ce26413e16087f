// criteria.hpp
// Entanglement criteria for two-qubit X-states.
//
// PPT is exact for two qubits and serves as ground truth: the partial
// transpose of an X-state has the closed-form spectrum
//   lambda1,2 = ((r11+r44) -+ sqrt((r11-r44)^2 + 4|r23|^2)) / 2
//   lambda3,4 = ((r22+r33) -+ sqrt((r22-r33)^2 + 4|r14|^2)) / 2
// and at most one of lambda1, lambda3 can be negative: lambda3 < 0 iff
// r22*r33 < |r14|^2, lambda1 < 0 iff r11*r44 < |r23|^2.
//
// The realignment (computable cross norm) criterion rearranges the state's
// 2x2 blocks into R(rho) and flags entanglement when its trace norm S
// exceeds 1. It is necessary-only: some PPT-entangled states keep S <= 1.
//
// The modified realignment criterion replaces the constant 1 with a
// state-dependent threshold built from the partial-transpose spectrum,
//   S >= 2 * (li * lj)^(1/4) * (lk + ll)^(1/2)
// where (li, lj) is the non-negative pair and (lk, ll) the pair holding the
// negative eigenvalue. Which pair is which is decided by the PPT sign test,
// so the verdict is NotApplicable when no eigenvalue is negative.

#pragma once

#include <string>
#include <vector>

#include "xent/numerics.hpp"
#include "xent/states.hpp"

namespace xent {

enum class NegativeBranch { None, Lambda1Negative, Lambda3Negative };

enum class Criterion { Ppt, Ccn, Theorem1, Corollary1, Concurrence };

enum class Verdict { Entangled, Separable, NotApplicable };

// Partial-transpose spectrum in the closed-form grouping above. Within each
// pair the smaller value comes first; the pairs are not sorted against each
// other.
struct PptSpectrum {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    NegativeBranch negative_branch = NegativeBranch::None;

    double min() const;
};

// Closed-form singular values of the realigned X-state. s1, s2 come from the
// corner block (f = r11^2 + r22^2 + r33^2 + r44^2, s1^2 + s2^2 = f); s3, s4
// from the coherence block (g = 2|r14|^2 + 2|r23|^2, s3^2 + s4^2 = g).
struct RealignmentBreakdown {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    double s4 = 0.0;
    double f = 0.0;
    double g = 0.0;
    double trace_norm = 0.0;  // s1 + s2 + s3 + s4
    bool clamped = false;     // a radicand in (-1e-12, 0) was clamped to 0
};

struct CriterionReport {
    Criterion criterion = Criterion::Ppt;
    Verdict verdict = Verdict::Separable;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // always lhs - rhs
    NegativeBranch branch = NegativeBranch::None;
};

struct DerivationCheck {
    std::string id;        // inequality label, e.g. "17", "22a"
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    bool applicable = true;  // false: recorded only (needs a negative branch)
};

// Status of every inequality in the chain that lowers the trace norm onto
// the modified-criterion threshold. P and Q are the two singular-value
// block sums.
struct DerivationReport {
    double P = 0.0;  // s1 + s2
    double Q = 0.0;  // s3 + s4
    NegativeBranch branch = NegativeBranch::None;
    std::vector<DerivationCheck> checks;
};

// Transposes each 2x2 block in place; an involution.
Matrix4 partial_transpose(const Matrix4& m);

// Rearranges blocks [[A,B],[Bd,C]] into rows vec(A)^T, vec(B)^T, vec(Bd)^T,
// vec(C)^T, where vec stacks a block's entries row by row.
Matrix4 realign(const Matrix4& m);

// Closed-form partial-transpose spectrum with the negative branch decided by
// the product test (with tol.eps_psd slack). Throws InvalidStateError.
PptSpectrum ppt_spectrum(const XState& s, const Tolerance& tol = {});

// Ground-truth verdict: entangled iff a branch is negative. lhs/rhs carry
// the violated (or tightest) diagonal-product pair.
CriterionReport ppt_verdict(const XState& s, const Tolerance& tol = {});

// Closed-form singular values of the realigned state; multiset-equal to
// singular_values(realign(to_matrix(s))).
RealignmentBreakdown realignment_breakdown(const XState& s, const Tolerance& tol = {});

// Standard realignment criterion: entangled iff trace norm > 1 (strict,
// with tol.eps_psd slack).
CriterionReport ccn_verdict(const XState& s, const Tolerance& tol = {});

// State-dependent threshold 2*(li*lj)^(1/4)*(lk+ll)^(1/2) for the branch
// the spectrum records. Throws BranchUndefinedError when no branch is
// negative, DomainError if the non-negative pair's product is materially
// negative.
double theorem1_threshold(const PptSpectrum& spec, const Tolerance& tol = {});

// Modified realignment verdict: NotApplicable when no PPT eigenvalue is
// negative; otherwise entangled iff trace norm >= threshold (with
// tol.eps_psd slack). lhs is the trace norm, rhs the threshold.
CriterionReport theorem1_verdict(const XState& s, const Tolerance& tol = {});

// The same threshold evaluated directly from the density-matrix elements:
//   branch lambda3: 2*[(h1 - d1/2)(h1 + d1/2)]^(1/4) * sqrt(r22 + r33),
//     h1 = (r11 + r44)/2, d1 = sqrt((r11 - r44)^2 + 4|r23|^2)
//   branch lambda1: the mirrored expression with d2 built from |r14|.
// Agrees with theorem1_threshold to ~1e-15. Throws BranchUndefinedError.
double corollary1_threshold(const XState& s, NegativeBranch branch, const Tolerance& tol = {});

// Wootters concurrence, which for X-states reduces to
//   2 * max(0, |r14| - sqrt(r22*r33), |r23| - sqrt(r11*r44)).
// Positive exactly when the PPT test detects entanglement.
double concurrence(const XState& s, const Tolerance& tol = {});

// Evaluates the derivation-chain inequalities (ids 17, 20, 21, 22a, 22b,
// 23, 24, 25, 26). Ids 17, 20, 25 always apply. The rest presuppose a
// negative branch: with one they are evaluated with the pairs oriented to
// that branch; without one they are evaluated as written and recorded with
// applicable=false. Note that 21/23 and 24 can genuinely fail for skewed
// entangled states; the report carries their status rather than promising
// them.
DerivationReport derivation_diagnostics(const XState& s, const Tolerance& tol = {});

// Every criterion evaluated on one state, ordered PPT, CCN, Theorem1,
// Corollary1, Concurrence. The Corollary1 report applies the Theorem1
// decision rule to the element-wise threshold; the Concurrence report uses
// rhs = 0.
std::vector<CriterionReport> all_criterion_reports(const XState& s, const Tolerance& tol = {});

const char* to_string(Criterion c);
const char* to_string(Verdict v);
const char* to_string(NegativeBranch b);

}  // namespace xent
