// states.hpp
// Two-qubit X-states: construction, validation, matrix conversion, the
// built-in scan family, named reference states, and seeded random sampling.
//
// An X-state is a 4x4 density matrix whose only nonzero entries sit on the
// main diagonal and the anti-diagonal:
//
//     [ r11  0    0    r14 ]
//     [ 0    r22  r23  0   ]
//     [ 0    r23* r33  0   ]
//     [ r14* 0    0    r44 ]
//
// with r11 + r22 + r33 + r44 = 1. Positivity splits into two independent
// 2x2 conditions: r11*r44 >= |r14|^2 and r22*r33 >= |r23|^2.

#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "xent/numerics.hpp"

namespace xent {

struct XState {
    double rho11 = 0.0;
    double rho22 = 0.0;
    double rho33 = 0.0;
    double rho44 = 0.0;
    ComplexScalar rho14{0.0, 0.0};
    ComplexScalar rho23{0.0, 0.0};
};

// Spectrum of the state itself (not of its partial transpose). Grouped as
//   [0] (r11+r44)/2 - sqrt(((r11-r44)/2)^2 + |r14|^2)
//   [1] (r22+r33)/2 - sqrt(((r22-r33)/2)^2 + |r23|^2)
//   [2] (r22+r33)/2 + sqrt(...)
//   [3] (r11+r44)/2 + sqrt(...)
struct StateSpectrum {
    std::array<double, 4> eigenvalues{};
    double min() const;
};

// One point of a two-parameter state family.
struct FamilyPoint {
    double x = 0.0;
    double y = 0.0;
};

// Checks trace, diagonal signs, and positivity via the closed-form spectrum.
// Eigenvalues in (-tol.eps_psd, 0) are accepted as boundary cases so that
// grid scans classify the physical boundary deterministically.
// Throws TraceViolationError or NegativeEigenvalueError.
StateSpectrum validate(const XState& s, const Tolerance& tol = {});

// The Hermitian matrix pictured above.
Matrix4 to_matrix(const XState& s);

// Inverse of to_matrix. Requires m Hermitian with unit trace, and every
// entry off the X pattern no larger than tol.eps_herm in magnitude.
// Throws NotHermitianError, TraceViolationError, or NotXShapedError.
XState from_matrix(const Matrix4& m, const Tolerance& tol = {});

// The built-in scan family: diagonal (0.35, 0.25, 0.25, 0.15) with real
// coherences rho14 = x and rho23 = y. Construction always succeeds;
// positivity holds iff |x| <= sqrt(0.0525) and |y| <= 0.25.
XState rho1_family(const FamilyPoint& p);

// Werner state: p * |Phi+><Phi+| + (1-p)/4 * I. Entangled iff p > 1/3.
// Throws DomainError unless 0 <= p <= 1.
XState werner(double p);

// Streaming sampler of valid X-states, deterministic for a fixed seed.
// Draws the diagonal uniformly from the probability simplex, coherence
// magnitudes as u * sqrt of the matching diagonal product (u uniform on
// [0,1], so positivity holds by construction), and phases uniform on
// [0, 2*pi).
class XStateSampler {
public:
    explicit XStateSampler(std::uint64_t seed);
    XState next();

private:
    std::mt19937_64 engine_;
    double uniform01();  // in [0, 1)
};

// Pure kernel behind the sampler: maps explicit draws to a state.
// simplex_exp are the four exponential variates normalized to the diagonal;
// u1, u2 scale the coherence magnitudes; phase1, phase2 are in radians.
XState x_state_from_draws(const std::array<double, 4>& simplex_exp, double u1, double u2,
                          double phase1, double phase2);

// First state of XStateSampler(seed); convenience for one-shot callers.
XState random_x_state(std::uint64_t seed);

}  // namespace xent
