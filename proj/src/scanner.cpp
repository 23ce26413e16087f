#include "xent/scanner.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace xent {

namespace {

using FamilyFn = XState (*)(const FamilyPoint&);

const std::map<std::string, FamilyFn>& family_registry() {
    static const std::map<std::string, FamilyFn> registry = {
        {"rho1", &rho1_family},
    };
    return registry;
}

// Number of grid points on [lo, hi] with the given spacing; tolerant of the
// usual floating-point shortfall at the upper end.
std::size_t axis_points(double lo, double hi, double step) {
    const double span = (hi - lo) / step;
    if (span > 1e7)
        throw GridTooLargeError("grid axis exceeds 1e7 steps");
    return static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
}

void check_grid(const GridSpec& g) {
    if (!(g.step > 0.0)) throw GridTooLargeError("grid step must be positive");
    if (g.x_min > g.x_max || g.y_min > g.y_max)
        throw GridTooLargeError("grid bounds must satisfy min <= max");
}

bool entangled_at(const ScanRecord& r, Criterion c) {
    if (!r.valid) return false;
    switch (c) {
        case Criterion::Ppt: return r.reports->ppt.verdict == Verdict::Entangled;
        case Criterion::Ccn: return r.reports->ccn.verdict == Verdict::Entangled;
        case Criterion::Theorem1: return r.reports->thm1.verdict == Verdict::Entangled;
        default:
            throw UnknownCriterionError(std::string("criterion ") + to_string(c) +
                                        " is not tracked per grid point");
    }
}

Verdict verdict_at(const ScanRecord& r, Criterion c) {
    switch (c) {
        case Criterion::Ppt: return r.reports->ppt.verdict;
        case Criterion::Ccn: return r.reports->ccn.verdict;
        case Criterion::Theorem1: return r.reports->thm1.verdict;
        default:
            throw UnknownCriterionError(std::string("criterion ") + to_string(c) +
                                        " is not tracked per grid point");
    }
}

}  // namespace

bool family_exists(const std::string& family_id) {
    return family_registry().count(family_id) > 0;
}

XState family_state(const std::string& family_id, const FamilyPoint& p) {
    const auto it = family_registry().find(family_id);
    if (it == family_registry().end())
        throw UnknownFamilyError("unknown state family \"" + family_id + "\"");
    return it->second(p);
}

std::vector<ScanRecord> scan(const std::string& family_id, const GridSpec& grid,
                             const Tolerance& tol) {
    if (!family_exists(family_id))
        throw UnknownFamilyError("unknown state family \"" + family_id + "\"");
    check_grid(grid);

    const std::size_t nx = axis_points(grid.x_min, grid.x_max, grid.step);
    const std::size_t ny = axis_points(grid.y_min, grid.y_max, grid.step);

    std::vector<ScanRecord> records;
    records.reserve(nx * ny);
    for (std::size_t i = 0; i < nx; ++i) {
        const double x = grid.x_min + static_cast<double>(i) * grid.step;
        for (std::size_t j = 0; j < ny; ++j) {
            const double y = grid.y_min + static_cast<double>(j) * grid.step;
            ScanRecord rec;
            rec.point = {x, y};
            const XState s = family_state(family_id, rec.point);
            try {
                validate(s, tol);
                rec.valid = true;
            } catch (const Error&) {
                rec.valid = false;
            }
            if (rec.valid) {
                ScanRecord::Reports rep;
                rep.ppt = ppt_verdict(s, tol);
                rep.ccn = ccn_verdict(s, tol);
                rep.thm1 = theorem1_verdict(s, tol);
                rep.ppt_min_eigenvalue = ppt_spectrum(s, tol).min();
                rep.concurrence = concurrence(s, tol);
                rec.reports = rep;
            }
            records.push_back(rec);
        }
    }
    return records;
}

RegionSummary summarize(const std::vector<ScanRecord>& records, Criterion criterion) {
    RegionSummary sum;
    sum.criterion = criterion;
    for (const auto& r : records) {
        if (!r.valid) {
            ++sum.invalid;
            continue;
        }
        switch (verdict_at(r, criterion)) {
            case Verdict::Entangled: ++sum.entangled; break;
            case Verdict::Separable: ++sum.separable; break;
            case Verdict::NotApplicable: ++sum.not_applicable; break;
        }
    }
    return sum;
}

BoundaryEstimate boundary_estimate(const std::vector<ScanRecord>& records, Criterion criterion,
                                   Axis axis, double fixed_other_value) {
    // Collect the slice, keyed by the scanned coordinate.
    std::vector<const ScanRecord*> slice;
    for (const auto& r : records) {
        const double other = axis == Axis::X ? r.point.y : r.point.x;
        if (std::abs(other - fixed_other_value) < 1e-12) slice.push_back(&r);
    }
    if (slice.size() < 2)
        throw NoTransitionError("slice holds fewer than two grid points");

    auto coord = [axis](const ScanRecord* r) {
        return axis == Axis::X ? r->point.x : r->point.y;
    };
    std::sort(slice.begin(), slice.end(),
              [&](const ScanRecord* a, const ScanRecord* b) { return coord(a) < coord(b); });
    const double spacing = coord(slice[1]) - coord(slice[0]);

    for (std::size_t k = 0; k + 1 < slice.size(); ++k) {
        const bool lo = entangled_at(*slice[k], criterion);
        const bool hi = entangled_at(*slice[k + 1], criterion);
        if (!lo && hi) {
            BoundaryEstimate est;
            est.axis = axis;
            est.value = 0.5 * (coord(slice[k]) + coord(slice[k + 1]));
            est.bracket = spacing;
            return est;
        }
    }
    throw NoTransitionError("verdict is constant along the slice");
}

double bisect_transition(const std::function<bool(double)>& predicate, double lo, double hi,
                         int iterations) {
    bool at_lo = predicate(lo);
    const bool at_hi = predicate(hi);
    if (at_lo == at_hi)
        throw NoTransitionError("predicate does not change between the bracket endpoints");
    for (int k = 0; k < iterations; ++k) {
        const double mid = 0.5 * (lo + hi);
        if (predicate(mid) == at_lo)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double threshold_curve_at(const std::string& family_id, double x) {
    if (family_id != "rho1")
        throw UnknownFamilyError("threshold curve is only defined for family \"rho1\"");
    if (x >= 0.25)
        throw DomainError("threshold curve undefined for x >= 0.25");

    // Trace norm of the realigned coherence-free state: the curve reports
    // how much coherence in rho23 lifts S onto the branch threshold.
    static const double s_diag = realignment_breakdown(rho1_family({0.0, 0.0})).trace_norm;
    const double threshold =
        corollary1_threshold(rho1_family({x, 0.0}), NegativeBranch::Lambda1Negative);
    return 0.5 * (threshold - s_diag);
}

std::vector<std::pair<double, double>> threshold_curve(const std::string& family_id,
                                                       double x_min, double x_max, double step) {
    if (!(step > 0.0)) throw DomainError("threshold curve step must be positive");
    const std::size_t n = axis_points(x_min, x_max, step);
    std::vector<std::pair<double, double>> curve;
    curve.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = x_min + static_cast<double>(i) * step;
        curve.emplace_back(x, threshold_curve_at(family_id, x));
    }
    return curve;
}

}  // namespace xent
