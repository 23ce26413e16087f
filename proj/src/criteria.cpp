#include "xent/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xent {

double PptSpectrum::min() const {
    return std::min(std::min(lambda1, lambda2), std::min(lambda3, lambda4));
}

namespace {

constexpr double inv_sqrt2 = 0.7071067811865475244;
constexpr double radicand_clamp = -1e-12;

void ensure_valid(const XState& s, const Tolerance& tol) {
    try {
        validate(s, tol);
    } catch (const Error& e) {
        throw InvalidStateError(std::string("invalid state: ") + e.what());
    }
}

double quartic_root(double x) { return std::sqrt(std::sqrt(x)); }

// Clamps a mathematically non-negative radicand that rounded slightly below
// zero; anything below the floor indicates misuse and is reported.
double clamp_radicand(double x, bool& clamped, const char* what,
                      double floor = radicand_clamp) {
    if (x >= 0.0) return x;
    if (x > floor) {
        clamped = true;
        return 0.0;
    }
    std::ostringstream msg;
    msg << what << " is negative (" << x << "); inputs are outside the derivation's domain";
    throw DomainError(msg.str());
}

}  // namespace

Matrix4 partial_transpose(const Matrix4& m) {
    Matrix4 r;
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    r(2 * bi + i, 2 * bj + j) = m(2 * bi + j, 2 * bj + i);
    return r;
}

Matrix4 realign(const Matrix4& m) {
    Matrix4 r;
    const int block_row[4] = {0, 0, 2, 2};  // rows of R take blocks A, B, Bd, C
    const int block_col[4] = {0, 2, 0, 2};
    for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r(k, 2 * i + j) = m(block_row[k] + i, block_col[k] + j);
    return r;
}

PptSpectrum ppt_spectrum(const XState& s, const Tolerance& tol) {
    ensure_valid(s, tol);

    PptSpectrum out;
    const double mid14 = 0.5 * (s.rho11 + s.rho44);
    const double rad14 =
        0.5 * std::sqrt((s.rho11 - s.rho44) * (s.rho11 - s.rho44) + 4.0 * std::norm(s.rho23));
    out.lambda1 = mid14 - rad14;
    out.lambda2 = mid14 + rad14;

    const double mid23 = 0.5 * (s.rho22 + s.rho33);
    const double rad23 =
        0.5 * std::sqrt((s.rho22 - s.rho33) * (s.rho22 - s.rho33) + 4.0 * std::norm(s.rho14));
    out.lambda3 = mid23 - rad23;
    out.lambda4 = mid23 + rad23;

    if (s.rho22 * s.rho33 < std::norm(s.rho14) - tol.eps_psd)
        out.negative_branch = NegativeBranch::Lambda3Negative;
    else if (s.rho11 * s.rho44 < std::norm(s.rho23) - tol.eps_psd)
        out.negative_branch = NegativeBranch::Lambda1Negative;
    else
        out.negative_branch = NegativeBranch::None;
    return out;
}

CriterionReport ppt_verdict(const XState& s, const Tolerance& tol) {
    const PptSpectrum spec = ppt_spectrum(s, tol);

    const double margin3 = s.rho22 * s.rho33 - std::norm(s.rho14);
    const double margin1 = s.rho11 * s.rho44 - std::norm(s.rho23);

    CriterionReport rep;
    rep.criterion = Criterion::Ppt;
    rep.branch = spec.negative_branch;
    rep.verdict =
        spec.negative_branch == NegativeBranch::None ? Verdict::Separable : Verdict::Entangled;
    // Report the violated product pair, or the tighter of the two when
    // nothing is violated.
    const bool use_pair3 = spec.negative_branch == NegativeBranch::Lambda3Negative ||
                           (spec.negative_branch == NegativeBranch::None && margin3 <= margin1);
    if (use_pair3) {
        rep.lhs = s.rho22 * s.rho33;
        rep.rhs = std::norm(s.rho14);
    } else {
        rep.lhs = s.rho11 * s.rho44;
        rep.rhs = std::norm(s.rho23);
    }
    rep.margin = rep.lhs - rep.rhs;
    return rep;
}

RealignmentBreakdown realignment_breakdown(const XState& s, const Tolerance& tol) {
    ensure_valid(s, tol);

    RealignmentBreakdown out;
    out.f = s.rho11 * s.rho11 + s.rho22 * s.rho22 + s.rho33 * s.rho33 + s.rho44 * s.rho44;
    out.g = 2.0 * std::norm(s.rho14) + 2.0 * std::norm(s.rho23);

    const double corner_det2 = s.rho11 * s.rho44 - s.rho22 * s.rho33;
    const double inner_f = clamp_radicand(
        (out.f - 2.0 * corner_det2) * (out.f + 2.0 * corner_det2), out.clamped, "corner radicand");
    const double root_f = std::sqrt(inner_f);
    out.s1 = inv_sqrt2 * std::sqrt(clamp_radicand(out.f + root_f, out.clamped, "s1 radicand"));
    out.s2 = inv_sqrt2 * std::sqrt(clamp_radicand(out.f - root_f, out.clamped, "s2 radicand"));

    const double coh_det2 = std::norm(s.rho14) - std::norm(s.rho23);
    const double inner_g = clamp_radicand((out.g - 2.0 * coh_det2) * (out.g + 2.0 * coh_det2),
                                          out.clamped, "coherence radicand");
    const double root_g = std::sqrt(inner_g);
    out.s3 = inv_sqrt2 * std::sqrt(clamp_radicand(out.g + root_g, out.clamped, "s3 radicand"));
    out.s4 = inv_sqrt2 * std::sqrt(clamp_radicand(out.g - root_g, out.clamped, "s4 radicand"));

    out.trace_norm = out.s1 + out.s2 + out.s3 + out.s4;
    return out;
}

CriterionReport ccn_verdict(const XState& s, const Tolerance& tol) {
    const RealignmentBreakdown b = realignment_breakdown(s, tol);
    CriterionReport rep;
    rep.criterion = Criterion::Ccn;
    rep.lhs = b.trace_norm;
    rep.rhs = 1.0;
    rep.margin = rep.lhs - rep.rhs;
    rep.verdict = b.trace_norm > 1.0 + tol.eps_psd ? Verdict::Entangled : Verdict::Separable;
    rep.branch = ppt_spectrum(s, tol).negative_branch;
    return rep;
}

double theorem1_threshold(const PptSpectrum& spec, const Tolerance& tol) {
    double product, pair_sum;
    switch (spec.negative_branch) {
        case NegativeBranch::Lambda3Negative:
            product = spec.lambda1 * spec.lambda2;
            pair_sum = spec.lambda3 + spec.lambda4;
            break;
        case NegativeBranch::Lambda1Negative:
            product = spec.lambda3 * spec.lambda4;
            pair_sum = spec.lambda1 + spec.lambda2;
            break;
        case NegativeBranch::None:
        default:
            throw BranchUndefinedError(
                "threshold undefined: no negative partial-transpose eigenvalue");
    }
    // The non-negative pair's product can round below zero only for states
    // hugging the positivity boundary; anything beyond eps_psd is misuse.
    bool clamped = false;
    product = clamp_radicand(product, clamped, "non-negative eigenvalue pair product",
                             -tol.eps_psd);
    pair_sum = std::max(pair_sum, 0.0);
    return 2.0 * quartic_root(product) * std::sqrt(pair_sum);
}

CriterionReport theorem1_verdict(const XState& s, const Tolerance& tol) {
    const PptSpectrum spec = ppt_spectrum(s, tol);
    const RealignmentBreakdown b = realignment_breakdown(s, tol);

    CriterionReport rep;
    rep.criterion = Criterion::Theorem1;
    rep.branch = spec.negative_branch;
    rep.lhs = b.trace_norm;
    if (spec.negative_branch == NegativeBranch::None) {
        rep.verdict = Verdict::NotApplicable;
        rep.rhs = 0.0;
        rep.margin = rep.lhs;
        return rep;
    }
    rep.rhs = theorem1_threshold(spec, tol);
    rep.margin = rep.lhs - rep.rhs;
    rep.verdict = rep.lhs >= rep.rhs - tol.eps_psd ? Verdict::Entangled : Verdict::Separable;
    return rep;
}

double corollary1_threshold(const XState& s, NegativeBranch branch, const Tolerance& tol) {
    double half_sum, delta, other_sum;
    switch (branch) {
        case NegativeBranch::Lambda3Negative:
            half_sum = 0.5 * (s.rho11 + s.rho44);
            delta = std::sqrt((s.rho11 - s.rho44) * (s.rho11 - s.rho44) +
                              4.0 * std::norm(s.rho23));
            other_sum = s.rho22 + s.rho33;
            break;
        case NegativeBranch::Lambda1Negative:
            half_sum = 0.5 * (s.rho22 + s.rho33);
            delta = std::sqrt((s.rho22 - s.rho33) * (s.rho22 - s.rho33) +
                              4.0 * std::norm(s.rho14));
            other_sum = s.rho11 + s.rho44;
            break;
        case NegativeBranch::None:
        default:
            throw BranchUndefinedError(
                "threshold undefined: no negative partial-transpose eigenvalue");
    }
    const double product = (half_sum - 0.5 * delta) * (half_sum + 0.5 * delta);
    bool clamped = false;
    const double clamped_product = clamp_radicand(
        product, clamped, "non-negative eigenvalue pair product", -tol.eps_psd);
    return 2.0 * quartic_root(clamped_product) * std::sqrt(std::max(other_sum, 0.0));
}

double concurrence(const XState& s, const Tolerance& tol) {
    ensure_valid(s, tol);
    const double c14 = std::abs(s.rho14) - std::sqrt(s.rho22 * s.rho33);
    const double c23 = std::abs(s.rho23) - std::sqrt(s.rho11 * s.rho44);
    return 2.0 * std::max({0.0, c14, c23});
}

DerivationReport derivation_diagnostics(const XState& s, const Tolerance& tol) {
    const PptSpectrum spec = ppt_spectrum(s, tol);
    const RealignmentBreakdown b = realignment_breakdown(s, tol);
    const double slack = tol.eps_psd;

    DerivationReport rep;
    rep.P = b.s1 + b.s2;
    rep.Q = b.s3 + b.s4;
    rep.branch = spec.negative_branch;
    const double S = b.trace_norm;

    // Orient the eigenvalue pairs so that (pos_lo, pos_hi) is non-negative
    // and (neg_lo, neg_hi) holds the negative eigenvalue when one exists.
    // With no negative branch the pairs keep the written orientation and
    // the branch-dependent checks are recorded without being applicable.
    const bool mirrored = spec.negative_branch == NegativeBranch::Lambda1Negative;
    const double pos_lo = mirrored ? spec.lambda3 : spec.lambda1;
    const double pos_hi = mirrored ? spec.lambda4 : spec.lambda2;
    const double neg_lo = mirrored ? spec.lambda1 : spec.lambda3;
    const double neg_hi = mirrored ? spec.lambda2 : spec.lambda4;
    const double pos_diag_sum = mirrored ? s.rho22 + s.rho33 : s.rho11 + s.rho44;
    const double neg_diag_sum = mirrored ? s.rho11 + s.rho44 : s.rho22 + s.rho33;
    const bool branched = spec.negative_branch != NegativeBranch::None;

    auto ge = [&](std::string id, double lhs, double rhs, bool applicable) {
        rep.checks.push_back({std::move(id), lhs, rhs, lhs >= rhs - slack, applicable});
    };
    auto le = [&](std::string id, double lhs, double rhs, bool applicable) {
        rep.checks.push_back({std::move(id), lhs, rhs, lhs <= rhs + slack, applicable});
    };

    const double pos_product = std::max(pos_lo * pos_hi, 0.0);

    ge("17", rep.P, std::sqrt(b.f), true);
    ge("20", rep.P, pos_diag_sum * inv_sqrt2, true);
    ge("21", rep.Q, neg_diag_sum * inv_sqrt2, branched);
    ge("22a", rep.P, (pos_lo + pos_hi) * inv_sqrt2, branched);
    ge("22b", (pos_lo + pos_hi) * inv_sqrt2, std::sqrt(2.0) * std::sqrt(pos_product), branched);
    ge("23", rep.Q, (neg_lo + neg_hi) * inv_sqrt2, branched);
    ge("24", rep.P * rep.Q, std::sqrt(pos_product) * (neg_lo + neg_hi), branched);
    le("25", rep.P * rep.Q, 0.25 * S * S, true);
    ge("26", S, 2.0 * quartic_root(pos_product) * std::sqrt(std::max(neg_lo + neg_hi, 0.0)),
       branched);
    return rep;
}

std::vector<CriterionReport> all_criterion_reports(const XState& s, const Tolerance& tol) {
    std::vector<CriterionReport> reports;
    reports.push_back(ppt_verdict(s, tol));
    reports.push_back(ccn_verdict(s, tol));
    reports.push_back(theorem1_verdict(s, tol));

    CriterionReport cor = reports.back();
    cor.criterion = Criterion::Corollary1;
    if (cor.branch != NegativeBranch::None) {
        cor.rhs = corollary1_threshold(s, cor.branch, tol);
        cor.margin = cor.lhs - cor.rhs;
        cor.verdict = cor.lhs >= cor.rhs - tol.eps_psd ? Verdict::Entangled : Verdict::Separable;
    }
    reports.push_back(cor);

    CriterionReport conc;
    conc.criterion = Criterion::Concurrence;
    conc.lhs = concurrence(s, tol);
    conc.rhs = 0.0;
    conc.margin = conc.lhs;
    conc.branch = reports.front().branch;
    conc.verdict = conc.lhs > tol.eps_psd ? Verdict::Entangled : Verdict::Separable;
    reports.push_back(conc);
    return reports;
}

const char* to_string(Criterion c) {
    switch (c) {
        case Criterion::Ppt: return "PPT";
        case Criterion::Ccn: return "CCN";
        case Criterion::Theorem1: return "Theorem1";
        case Criterion::Corollary1: return "Corollary1";
        case Criterion::Concurrence: return "Concurrence";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Entangled: return "entangled";
        case Verdict::Separable: return "separable";
        case Verdict::NotApplicable: return "not_applicable";
    }
    return "?";
}

const char* to_string(NegativeBranch b) {
    switch (b) {
        case NegativeBranch::None: return "none";
        case NegativeBranch::Lambda1Negative: return "lambda1_negative";
        case NegativeBranch::Lambda3Negative: return "lambda3_negative";
    }
    return "?";
}

}  // namespace xent
