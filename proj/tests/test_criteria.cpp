#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "xent/criteria.hpp"
#include "xent/states.hpp"

using xent::ComplexScalar;
using xent::Matrix4;
using xent::NegativeBranch;
using xent::Verdict;
using xent::XState;

namespace {

XState mixed_state() {
    XState s;
    s.rho11 = s.rho22 = s.rho33 = s.rho44 = 0.25;
    return s;
}

XState bell_phi_plus() {
    XState s;
    s.rho11 = s.rho44 = 0.5;
    s.rho14 = 0.5;
    return s;
}

// Concurrence the long way round: eigenvalues mu of sqrt(rho) * rho_tilde *
// sqrt(rho) with rho_tilde = (sy x sy) conj(rho) (sy x sy), then
// max(0, sqrt(mu4) - sqrt(mu3) - sqrt(mu2) - sqrt(mu1)). Exercises none of
// the closed-form path.
double wootters_concurrence(const Matrix4& rho) {
    Matrix4 flip;  // sigma_y (x) sigma_y, an anti-diagonal sign pattern
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;

    Matrix4 conj_rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) conj_rho(i, j) = std::conj(rho(i, j));
    const Matrix4 rho_tilde = flip * conj_rho * flip;

    const auto es = xent::hermitian_eigensystem(rho);
    Matrix4 sqrt_rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            ComplexScalar acc = 0.0;
            for (int k = 0; k < 4; ++k)
                acc += es.vectors(i, k) * std::sqrt(std::max(0.0, es.values[k])) *
                       std::conj(es.vectors(j, k));
            sqrt_rho(i, j) = acc;
        }

    const Matrix4 m = sqrt_rho * rho_tilde * sqrt_rho;
    const auto mu = xent::hermitian_eigensystem(m).values;
    double c = std::sqrt(std::max(0.0, mu[3]));
    for (int k = 0; k < 3; ++k) c -= std::sqrt(std::max(0.0, mu[k]));
    return std::max(0.0, c);
}

}  // namespace

TEST_CASE("partial transpose: fixed points and involution") {
    const Matrix4 d = xent::to_matrix(xent::rho1_family({0.0, 0.0}));
    const Matrix4 dt = xent::partial_transpose(d);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(dt(i, j) == d(i, j));

    // the scan family swaps its two coherences
    const Matrix4 pt = xent::partial_transpose(xent::to_matrix(xent::rho1_family({0.1, 0.2})));
    CHECK(pt(0, 3).real() == 0.2);
    CHECK(pt(1, 2).real() == 0.1);

    std::mt19937_64 engine(3);
    auto u = [&] { return std::uniform_real_distribution<double>(-1, 1)(engine); };
    for (int trial = 0; trial < 100; ++trial) {
        Matrix4 m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = ComplexScalar(u(), u());
        const Matrix4 twice = xent::partial_transpose(xent::partial_transpose(m));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) CHECK(twice(i, j) == m(i, j));
    }
}

TEST_CASE("partially transposed Bell state has eigenvalue -1/2") {
    const auto ev =
        xent::hermitian_eigenvalues(xent::partial_transpose(xent::to_matrix(bell_phi_plus())));
    CHECK(ev[0] == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("ppt_spectrum closed form and branch selection") {
    const auto spec = xent::ppt_spectrum(xent::rho1_family({0.1, 0.24}));
    CHECK(spec.lambda1 == doctest::Approx(-0.01).epsilon(1e-13));
    CHECK(spec.lambda2 == doctest::Approx(0.51).epsilon(1e-13));
    CHECK(spec.lambda3 == doctest::Approx(0.15).epsilon(1e-13));
    CHECK(spec.lambda4 == doctest::Approx(0.35).epsilon(1e-13));
    CHECK(spec.negative_branch == NegativeBranch::Lambda1Negative);
    CHECK(spec.min() == doctest::Approx(-0.01).epsilon(1e-13));

    CHECK(xent::ppt_spectrum(xent::werner(0.5)).negative_branch ==
          NegativeBranch::Lambda3Negative);

    const auto flat = xent::ppt_spectrum(mixed_state());
    CHECK(flat.negative_branch == NegativeBranch::None);
    CHECK(flat.lambda1 == 0.25);
    CHECK(flat.lambda4 == 0.25);
}

TEST_CASE("ppt_spectrum agrees with the eigensolver on random states") {
    xent::XStateSampler sampler(8080);
    for (int k = 0; k < 10000; ++k) {
        const XState s = sampler.next();
        const auto spec = xent::ppt_spectrum(s);
        std::array<double, 4> closed{spec.lambda1, spec.lambda2, spec.lambda3, spec.lambda4};
        std::sort(closed.begin(), closed.end());
        const auto oracle =
            xent::hermitian_eigenvalues(xent::partial_transpose(xent::to_matrix(s)));
        for (int i = 0; i < 4; ++i) CHECK(std::abs(closed[i] - oracle[i]) < 1e-9);
        CHECK(spec.lambda1 <= spec.lambda2);
        CHECK(spec.lambda3 <= spec.lambda4);
        CHECK(spec.lambda1 + spec.lambda2 + spec.lambda3 + spec.lambda4 ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ppt_verdict on the scan family and Werner line") {
    for (double x : {0.0, 0.1, 0.2}) {
        CHECK(xent::ppt_verdict(xent::rho1_family({x, 0.24})).verdict == Verdict::Entangled);
        CHECK(xent::ppt_verdict(xent::rho1_family({x, 0.20})).verdict == Verdict::Separable);
    }
    CHECK(xent::ppt_verdict(xent::werner(1.0 / 3.0)).verdict == Verdict::Separable);
    CHECK(xent::ppt_verdict(xent::werner(0.34)).verdict == Verdict::Entangled);

    const auto rep = xent::ppt_verdict(xent::rho1_family({0.1, 0.24}));
    CHECK(rep.lhs == doctest::Approx(0.0525).epsilon(1e-14));   // r11*r44
    CHECK(rep.rhs == doctest::Approx(0.0576).epsilon(1e-14));   // |r23|^2
    CHECK(rep.margin == rep.lhs - rep.rhs);
    CHECK(rep.branch == NegativeBranch::Lambda1Negative);
}

TEST_CASE("ppt_verdict refuses invalid states") {
    CHECK_THROWS_AS((void)xent::ppt_verdict(xent::rho1_family({0.24, 0.1})),
                    xent::InvalidStateError);
}

TEST_CASE("realign rearranges blocks into rows") {
    Matrix4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = ComplexScalar(10.0 * i + j, 1.0);
    const Matrix4 r = xent::realign(m);
    // row 0: block A read row by row
    CHECK(r(0, 0) == m(0, 0));
    CHECK(r(0, 1) == m(0, 1));
    CHECK(r(0, 2) == m(1, 0));
    CHECK(r(0, 3) == m(1, 1));
    // row 1: block B
    CHECK(r(1, 0) == m(0, 2));
    CHECK(r(1, 1) == m(0, 3));
    CHECK(r(1, 2) == m(1, 2));
    CHECK(r(1, 3) == m(1, 3));
    // row 2: block B-dagger's entries as stored
    CHECK(r(2, 0) == m(2, 0));
    CHECK(r(2, 1) == m(2, 1));
    CHECK(r(2, 2) == m(3, 0));
    CHECK(r(2, 3) == m(3, 1));
    // row 3: block C
    CHECK(r(3, 0) == m(2, 2));
    CHECK(r(3, 1) == m(2, 3));
    CHECK(r(3, 2) == m(3, 2));
    CHECK(r(3, 3) == m(3, 3));
}

TEST_CASE("realigned X-state keeps the X pattern with diagonals in corners") {
    const Matrix4 r = xent::realign(xent::to_matrix(xent::rho1_family({0.1, 0.2})));
    CHECK(r(0, 0).real() == 0.35);
    CHECK(r(0, 3).real() == 0.25);
    CHECK(r(3, 0).real() == 0.25);
    CHECK(r(3, 3).real() == 0.15);
    CHECK(r(1, 1).real() == 0.1);
    CHECK(r(1, 2).real() == 0.2);
    CHECK(r(2, 1).real() == 0.2);
    CHECK(r(2, 2).real() == 0.1);

    CHECK(xent::trace_norm(xent::realign(xent::to_matrix(mixed_state()))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(xent::trace_norm(xent::realign(xent::to_matrix(bell_phi_plus()))) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("realignment breakdown: closed form values") {
    const auto mixed = xent::realignment_breakdown(mixed_state());
    CHECK(mixed.s1 == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(mixed.s2 == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(mixed.s3 == 0.0);
    CHECK(mixed.s4 == 0.0);
    CHECK(mixed.f == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(mixed.g == 0.0);

    const auto b = xent::realignment_breakdown(xent::rho1_family({0.1, 0.24}));
    CHECK(b.trace_norm == doctest::Approx(1.0185164807134504).epsilon(1e-12));
    CHECK(b.s3 == doctest::Approx(0.34).epsilon(1e-13));
    CHECK(b.s4 == doctest::Approx(0.14).epsilon(1e-13));

    const auto diag_only = xent::realignment_breakdown(xent::rho1_family({0.0, 0.0}));
    CHECK(diag_only.trace_norm == doctest::Approx(0.5385164807134504).epsilon(1e-12));
    CHECK(diag_only.trace_norm == doctest::Approx(0.53852).epsilon(1e-4));
}

TEST_CASE("realignment breakdown matches the SVD oracle on random states") {
    xent::XStateSampler sampler(6060);
    for (int k = 0; k < 10000; ++k) {
        const XState s = sampler.next();
        const auto b = xent::realignment_breakdown(s);
        std::array<double, 4> closed{b.s1, b.s2, b.s3, b.s4};
        std::sort(closed.begin(), closed.end(), std::greater<>());
        const auto oracle = xent::singular_values(xent::realign(xent::to_matrix(s)));
        for (int i = 0; i < 4; ++i) CHECK(std::abs(closed[i] - oracle[i]) < 1e-9);
        CHECK(std::abs(b.s1 * b.s1 + b.s2 * b.s2 - b.f) < 1e-12);
        CHECK(std::abs(b.s3 * b.s3 + b.s4 * b.s4 - b.g) < 1e-12);
        CHECK(b.trace_norm == b.s1 + b.s2 + b.s3 + b.s4);
    }
}

TEST_CASE("ccn_verdict: detection threshold sits at trace norm 1") {
    const auto caught = xent::ccn_verdict(xent::rho1_family({0.1, 0.24}));
    CHECK(caught.verdict == Verdict::Entangled);
    CHECK(caught.lhs == doctest::Approx(1.0185164807134504).epsilon(1e-12));
    CHECK(caught.rhs == 1.0);

    // PPT-entangled yet below the realignment threshold
    const auto missed = xent::ccn_verdict(xent::rho1_family({0.1, 0.23}));
    CHECK(missed.verdict == Verdict::Separable);
    CHECK(missed.lhs == doctest::Approx(0.9985164807134503).epsilon(1e-12));
    CHECK(xent::ppt_verdict(xent::rho1_family({0.1, 0.23})).verdict == Verdict::Entangled);

    const auto mixed = xent::ccn_verdict(mixed_state());
    CHECK(mixed.verdict == Verdict::Separable);
    CHECK(mixed.lhs == doctest::Approx(0.5).epsilon(1e-13));

    // right at the published boundary the trace norm sits at 1 to 1e-3
    CHECK(xent::realignment_breakdown(xent::rho1_family({0.0, 0.2307})).trace_norm ==
          doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("theorem1_threshold per branch") {
    const auto spec = xent::ppt_spectrum(xent::rho1_family({0.1, 0.23}));
    CHECK(spec.negative_branch == NegativeBranch::Lambda1Negative);
    const double thr = xent::theorem1_threshold(spec);
    CHECK(thr == doctest::Approx(0.67694724277124).epsilon(1e-12));
    CHECK(thr == doctest::Approx(0.67697).epsilon(1e-4));

    // at x = 0 the threshold is sqrt(2) * 0.0625^(1/4) = 1/sqrt(2)
    const double thr0 = xent::theorem1_threshold(xent::ppt_spectrum(xent::rho1_family({0.0, 0.24})));
    CHECK(thr0 == doctest::Approx(0.7071067811865476).epsilon(1e-12));

    CHECK_THROWS_AS((void)xent::theorem1_threshold(xent::ppt_spectrum(mixed_state())),
                    xent::BranchUndefinedError);
}

TEST_CASE("theorem1_verdict recovers the states the realignment test misses") {
    const auto caught_low = xent::theorem1_verdict(xent::rho1_family({0.1, 0.23}));
    CHECK(caught_low.verdict == Verdict::Entangled);
    CHECK(caught_low.lhs == doctest::Approx(0.9985164807134503).epsilon(1e-12));
    CHECK(caught_low.rhs == doctest::Approx(0.67694724277124).epsilon(1e-12));

    const auto caught_high = xent::theorem1_verdict(xent::rho1_family({0.1, 0.24}));
    CHECK(caught_high.verdict == Verdict::Entangled);

    const auto na = xent::theorem1_verdict(mixed_state());
    CHECK(na.verdict == Verdict::NotApplicable);
    CHECK(na.branch == NegativeBranch::None);
}

TEST_CASE("corollary threshold equals the spectral threshold") {
    const XState w = xent::werner(0.5);
    const auto wspec = xent::ppt_spectrum(w);
    CHECK(std::abs(xent::corollary1_threshold(w, wspec.negative_branch) -
                   xent::theorem1_threshold(wspec)) < 1e-12);

    CHECK(xent::corollary1_threshold(xent::rho1_family({0.1, 0.23}),
                                     NegativeBranch::Lambda1Negative) ==
          doctest::Approx(0.67694724277124).epsilon(1e-12));

    CHECK_THROWS_AS((void)xent::corollary1_threshold(mixed_state(), NegativeBranch::None),
                    xent::BranchUndefinedError);

    xent::XStateSampler sampler(7171);
    for (int k = 0; k < 10000; ++k) {
        const XState s = sampler.next();
        const auto spec = xent::ppt_spectrum(s);
        if (spec.negative_branch == NegativeBranch::None) continue;
        CHECK(std::abs(xent::corollary1_threshold(s, spec.negative_branch) -
                       xent::theorem1_threshold(spec)) <= 1e-12);
    }
}

TEST_CASE("concurrence closed form against the spin-flip computation") {
    CHECK(xent::concurrence(bell_phi_plus()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(xent::concurrence(mixed_state()) == 0.0);
    CHECK(xent::concurrence(xent::werner(0.5)) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(wootters_concurrence(xent::to_matrix(xent::werner(0.5))) ==
          doctest::Approx(0.25).epsilon(1e-10));

    xent::XStateSampler sampler(4242);
    for (int k = 0; k < 2000; ++k) {
        const XState s = sampler.next();
        CHECK(std::abs(xent::concurrence(s) - wootters_concurrence(xent::to_matrix(s))) < 1e-9);
    }
}

TEST_CASE("PPT, concurrence, and the one-negative-eigenvalue fact concur") {
    xent::XStateSampler sampler(112358);
    const xent::Tolerance tol;
    for (int k = 0; k < 100000; ++k) {
        const XState s = sampler.next();
        const auto spec = xent::ppt_spectrum(s);
        int negatives = 0;
        for (double lam : {spec.lambda1, spec.lambda2, spec.lambda3, spec.lambda4})
            if (lam < -tol.eps_psd) ++negatives;
        CHECK(negatives <= 1);

        const bool ppt_ent = spec.negative_branch != NegativeBranch::None;
        const bool conc_ent = xent::concurrence(s) > tol.eps_psd;
        CHECK(ppt_ent == conc_ent);
    }
}

TEST_CASE("separable states never exceed trace norm 1") {
    xent::XStateSampler sampler(271828);
    for (int k = 0; k < 100000; ++k) {
        const XState s = sampler.next();
        if (xent::ppt_verdict(s).verdict != Verdict::Separable) continue;
        CHECK(xent::realignment_breakdown(s).trace_norm <= 1.0 + 1e-10);
    }
}

TEST_CASE("every PPT-entangled sample clears the branch threshold") {
    xent::XStateSampler sampler(314159);
    int entangled = 0;
    for (int k = 0; k < 100000; ++k) {
        const XState s = sampler.next();
        const auto rep = xent::theorem1_verdict(s);
        if (rep.verdict == Verdict::NotApplicable) continue;
        ++entangled;
        const bool holds = rep.verdict == Verdict::Entangled;
        if (!holds)
            MESSAGE("violation at sample ", k, ": diag (", s.rho11, ", ", s.rho22, ", ", s.rho33,
                    ", ", s.rho44, "), |rho14| ", std::abs(s.rho14), ", |rho23| ",
                    std::abs(s.rho23), ", trace norm ", rep.lhs, " < threshold ", rep.rhs);
        CHECK(holds);
    }
    CHECK(entangled > 10000);
}

TEST_CASE("verdicts depend on coherences only through their magnitudes") {
    xent::XStateSampler sampler(5309);
    std::mt19937_64 engine(99);
    auto angle = [&] { return std::uniform_real_distribution<double>(0, 6.283185307)(engine); };
    const xent::Tolerance tol;
    for (int k = 0; k < 2000; ++k) {
        const XState s = sampler.next();
        XState rotated = s;
        const double a1 = angle(), a2 = angle();
        rotated.rho14 = std::abs(s.rho14) * ComplexScalar(std::cos(a1), std::sin(a1));
        rotated.rho23 = std::abs(s.rho23) * ComplexScalar(std::cos(a2), std::sin(a2));

        const auto base = xent::all_criterion_reports(s, tol);
        const auto spun = xent::all_criterion_reports(rotated, tol);
        REQUIRE(base.size() == spun.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(base[i].verdict == spun[i].verdict);
            CHECK(base[i].branch == spun[i].branch);
            CHECK(std::abs(base[i].lhs - spun[i].lhs) < tol.eps_eq);
            CHECK(std::abs(base[i].rhs - spun[i].rhs) < tol.eps_eq);
            CHECK(std::abs(base[i].margin - spun[i].margin) < tol.eps_eq);
        }
    }
}

TEST_CASE("derivation diagnostics: entangled family states satisfy the chain") {
    for (const XState& s : {xent::rho1_family({0.1, 0.23}), xent::werner(0.9)}) {
        const auto rep = xent::derivation_diagnostics(s);
        REQUIRE(rep.checks.size() == 9);
        for (const auto& c : rep.checks) {
            CHECK(c.applicable);
            CHECK(c.holds);
        }
    }
    const auto rep = xent::derivation_diagnostics(xent::rho1_family({0.1, 0.23}));
    CHECK(rep.P == doctest::Approx(0.5385164807134504).epsilon(1e-12));
    CHECK(rep.Q == doctest::Approx(0.46).epsilon(1e-13));
}

TEST_CASE("derivation diagnostics on the maximally mixed state") {
    const auto rep = xent::derivation_diagnostics(mixed_state());
    CHECK(rep.P == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(rep.Q == 0.0);
    CHECK(rep.branch == NegativeBranch::None);

    std::map<std::string, const xent::DerivationCheck*> by_id;
    for (const auto& c : rep.checks) by_id[c.id] = &c;
    REQUIRE(by_id.size() == 9);

    for (const char* id : {"17", "20", "25"}) {
        CHECK(by_id[id]->applicable);
        CHECK(by_id[id]->holds);
    }
    // Branch-dependent rows are recorded, not asserted; without a negative
    // eigenvalue the trace-norm bound has no reason to hold, and indeed the
    // coherence-free rows fail as written.
    for (const char* id : {"21", "22a", "22b", "23", "24", "26"})
        CHECK_FALSE(by_id[id]->applicable);
    CHECK_FALSE(by_id["21"]->holds);
    CHECK(by_id["22a"]->holds);
    CHECK(by_id["22b"]->holds);
    CHECK_FALSE(by_id["23"]->holds);
    CHECK_FALSE(by_id["24"]->holds);
    CHECK_FALSE(by_id["26"]->holds);
}

TEST_CASE("derivation diagnostics: the written chain breaks on skewed states") {
    // Valid and PPT-entangled (r22*r33 = 0.0025 < |r14|^2 = 0.002601), but
    // with the diagonal pair skewed enough that the coherence block sum
    // 2*max(|r14|, |r23|) = 0.102 cannot reach (r22+r33)/sqrt(2) = 0.357.
    // The final trace-norm bound still holds; the middle links do not.
    XState s;
    s.rho11 = 0.45;
    s.rho22 = 0.5;
    s.rho33 = 0.005;
    s.rho44 = 0.045;
    s.rho14 = 0.051;
    CHECK(xent::ppt_verdict(s).verdict == Verdict::Entangled);

    const auto rep = xent::derivation_diagnostics(s);
    CHECK(rep.branch == NegativeBranch::Lambda3Negative);
    std::map<std::string, const xent::DerivationCheck*> by_id;
    for (const auto& c : rep.checks) by_id[c.id] = &c;

    for (const char* id : {"17", "20", "22a", "22b", "25", "26"}) CHECK(by_id[id]->holds);
    CHECK_FALSE(by_id["21"]->holds);
    CHECK_FALSE(by_id["23"]->holds);
    CHECK_FALSE(by_id["24"]->holds);
    CHECK(xent::theorem1_verdict(s).verdict == Verdict::Entangled);
}

TEST_CASE("all_criterion_reports carries the five criteria in order") {
    const auto reports = xent::all_criterion_reports(xent::rho1_family({0.1, 0.23}));
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].criterion == xent::Criterion::Ppt);
    CHECK(reports[1].criterion == xent::Criterion::Ccn);
    CHECK(reports[2].criterion == xent::Criterion::Theorem1);
    CHECK(reports[3].criterion == xent::Criterion::Corollary1);
    CHECK(reports[4].criterion == xent::Criterion::Concurrence);

    CHECK(reports[0].verdict == Verdict::Entangled);
    CHECK(reports[1].verdict == Verdict::Separable);
    CHECK(reports[2].verdict == Verdict::Entangled);
    CHECK(reports[3].verdict == Verdict::Entangled);
    CHECK(reports[4].verdict == Verdict::Entangled);
    CHECK(std::abs(reports[3].rhs - reports[2].rhs) < 1e-12);
    for (const auto& rep : reports) CHECK(rep.margin == rep.lhs - rep.rhs);
}
