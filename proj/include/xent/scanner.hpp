// scanner.hpp
// Parameter-grid scanning of registered state families, per-point
// classification under every criterion, and boundary estimation.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xent/criteria.hpp"
#include "xent/states.hpp"

namespace xent {

// Rectangular grid. A degenerate axis (min == max) yields a single slice.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;
    double step = 0.0;
};

enum class Axis { X, Y };

// Classification of one grid point. Reports are present iff the state is
// positive semidefinite at that point.
struct ScanRecord {
    FamilyPoint point;
    bool valid = false;
    struct Reports {
        CriterionReport ppt;
        CriterionReport ccn;
        CriterionReport thm1;
        double ppt_min_eigenvalue = 0.0;
        double concurrence = 0.0;
    };
    std::optional<Reports> reports;
};

struct BoundaryEstimate {
    Axis axis = Axis::Y;
    double value = 0.0;    // midpoint of the bracketing grid pair
    double bracket = 0.0;  // grid spacing; the transition lies within +-bracket/2
};

struct RegionSummary {
    Criterion criterion = Criterion::Ppt;
    std::vector<BoundaryEstimate> boundary_estimates;
    std::size_t entangled = 0;
    std::size_t separable = 0;
    std::size_t invalid = 0;
    std::size_t not_applicable = 0;
};

// True iff a family with this name is registered ("rho1" ships built in).
bool family_exists(const std::string& family_id);

// Constructs the family's state at a parameter point.
// Throws UnknownFamilyError.
XState family_state(const std::string& family_id, const FamilyPoint& p);

// Classifies every grid point in row-major order (x outer, y inner); the
// ordering is part of the output contract and independent of how the work
// is scheduled. Throws UnknownFamilyError or GridTooLargeError (more than
// 1e7 steps on an axis).
std::vector<ScanRecord> scan(const std::string& family_id, const GridSpec& grid,
                             const Tolerance& tol = {});

// Tallies one criterion over scan records. Supports Ppt, Ccn, Theorem1.
RegionSummary summarize(const std::vector<ScanRecord>& records, Criterion criterion);

// Boundary of the entangled region along `axis` with the other coordinate
// fixed: midpoint of the last not-entangled / first entangled pair of grid
// points. Supports Ppt, Ccn, Theorem1 (UnknownCriterionError otherwise).
// Throws NoTransitionError when the verdict never changes along the slice.
BoundaryEstimate boundary_estimate(const std::vector<ScanRecord>& records, Criterion criterion,
                                   Axis axis, double fixed_other_value);

// Bisection refinement of a predicate transition on [lo, hi]. The predicate
// must differ between the endpoints; each iteration halves the bracket.
double bisect_transition(const std::function<bool(double)>& predicate, double lo, double hi,
                         int iterations = 20);

// The rho1 family's modified-criterion boundary curve: the y value at which
// the trace norm meets the branch threshold for coherence rho14 = x,
//   f(x) = (sqrt(2) * (0.0625 - x^2)^(1/4) - S_diag) / 2
// with S_diag the trace norm of the realigned coherence-free state
// (sqrt(0.29) = 0.538516...). Defined for x < 0.25; DomainError beyond.
double threshold_curve_at(const std::string& family_id, double x);

// Samples the curve over [x_min, x_max] at the given step.
std::vector<std::pair<double, double>> threshold_curve(const std::string& family_id,
                                                       double x_min, double x_max, double step);

}  // namespace xent
