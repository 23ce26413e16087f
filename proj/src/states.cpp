#include "xent/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace xent {

double StateSpectrum::min() const {
    return *std::min_element(eigenvalues.begin(), eigenvalues.end());
}

namespace {

// Eigenvalue pair of a 2x2 Hermitian block [[a, z], [conj(z), d]]:
// (a+d)/2 -+ sqrt(((a-d)/2)^2 + |z|^2).
std::array<double, 2> block_pair(double a, double d, const ComplexScalar& z) {
    const double mid = 0.5 * (a + d);
    const double rad = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(z));
    return {mid - rad, mid + rad};
}

}  // namespace

StateSpectrum validate(const XState& s, const Tolerance& tol) {
    const double tr = s.rho11 + s.rho22 + s.rho33 + s.rho44;
    if (std::abs(tr - 1.0) > tol.eps_herm) {
        std::ostringstream msg;
        msg << "trace is " << tr << ", expected 1 within " << tol.eps_herm;
        throw TraceViolationError(msg.str());
    }

    const auto a = block_pair(s.rho11, s.rho44, s.rho14);
    const auto b = block_pair(s.rho22, s.rho33, s.rho23);
    StateSpectrum spec;
    spec.eigenvalues = {a[0], b[0], b[1], a[1]};

    for (double lam : spec.eigenvalues) {
        if (lam < -tol.eps_psd) {
            std::ostringstream msg;
            msg << "state is not positive semidefinite: eigenvalue " << lam << " < -"
                << tol.eps_psd;
            throw NegativeEigenvalueError(msg.str(), lam);
        }
    }
    return spec;
}

Matrix4 to_matrix(const XState& s) {
    Matrix4 m;
    m(0, 0) = s.rho11;
    m(1, 1) = s.rho22;
    m(2, 2) = s.rho33;
    m(3, 3) = s.rho44;
    m(0, 3) = s.rho14;
    m(3, 0) = std::conj(s.rho14);
    m(1, 2) = s.rho23;
    m(2, 1) = std::conj(s.rho23);
    return m;
}

XState from_matrix(const Matrix4& m, const Tolerance& tol) {
    const double defect = hermiticity_defect(m);
    if (defect > tol.eps_herm) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: defect " << defect << " exceeds " << tol.eps_herm;
        throw NotHermitianError(msg.str());
    }
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tol.eps_herm) {
        std::ostringstream msg;
        msg << "trace is " << tr << ", expected 1 within " << tol.eps_herm;
        throw TraceViolationError(msg.str());
    }

    // Every entry off the main and anti diagonal must vanish.
    static constexpr int off_pattern[8][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 3},
                                              {2, 0}, {2, 3}, {3, 1}, {3, 2}};
    std::ostringstream offenders;
    bool shaped = true;
    for (const auto& ij : off_pattern) {
        const double mag = std::abs(m(ij[0], ij[1]));
        if (mag > tol.eps_herm) {
            if (!shaped) offenders << ", ";
            offenders << "(" << ij[0] + 1 << "," << ij[1] + 1 << ")=" << mag;
            shaped = false;
        }
    }
    if (!shaped)
        throw NotXShapedError("matrix is not X-shaped; offending entries: " + offenders.str());

    XState s;
    s.rho11 = m(0, 0).real();
    s.rho22 = m(1, 1).real();
    s.rho33 = m(2, 2).real();
    s.rho44 = m(3, 3).real();
    s.rho14 = m(0, 3);
    s.rho23 = m(1, 2);
    return s;
}

XState rho1_family(const FamilyPoint& p) {
    XState s;
    s.rho11 = 0.35;
    s.rho22 = 0.25;
    s.rho33 = 0.25;
    s.rho44 = 0.15;
    s.rho14 = p.x;
    s.rho23 = p.y;
    return s;
}

XState werner(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        std::ostringstream msg;
        msg << "werner parameter " << p << " outside [0, 1]";
        throw DomainError(msg.str());
    }
    XState s;
    s.rho11 = s.rho44 = (1.0 + p) / 4.0;
    s.rho22 = s.rho33 = (1.0 - p) / 4.0;
    s.rho14 = p / 2.0;
    s.rho23 = 0.0;
    return s;
}

XState x_state_from_draws(const std::array<double, 4>& simplex_exp, double u1, double u2,
                          double phase1, double phase2) {
    const double total = simplex_exp[0] + simplex_exp[1] + simplex_exp[2] + simplex_exp[3];
    XState s;
    s.rho11 = simplex_exp[0] / total;
    s.rho22 = simplex_exp[1] / total;
    s.rho33 = simplex_exp[2] / total;
    s.rho44 = simplex_exp[3] / total;
    const double m14 = u1 * std::sqrt(s.rho11 * s.rho44);
    const double m23 = u2 * std::sqrt(s.rho22 * s.rho33);
    s.rho14 = ComplexScalar(m14 * std::cos(phase1), m14 * std::sin(phase1));
    s.rho23 = ComplexScalar(m23 * std::cos(phase2), m23 * std::sin(phase2));
    return s;
}

XStateSampler::XStateSampler(std::uint64_t seed) : engine_(seed) {}

double XStateSampler::uniform01() {
    // Top 53 bits -> [0, 1). Pinned here rather than relying on
    // std::uniform_real_distribution, whose output is not standardized.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

XState XStateSampler::next() {
    std::array<double, 4> e{};
    for (double& v : e) v = -std::log(1.0 - uniform01());  // Exp(1), argument never 0
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double phase1 = 2.0 * std::numbers::pi * uniform01();
    const double phase2 = 2.0 * std::numbers::pi * uniform01();
    return x_state_from_draws(e, u1, u2, phase1, phase2);
}

XState random_x_state(std::uint64_t seed) {
    XStateSampler sampler(seed);
    return sampler.next();
}

}  // namespace xent
