// numerics.hpp
// Dependency-light fixed-size complex linear algebra: a 4x4 complex matrix
// value type, a cyclic-Jacobi Hermitian eigensolver, and an SVD built on it.
// These are the numerical oracles the closed-form criteria are checked
// against, so they deliberately share no code with the closed forms.

#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "xent/errors.hpp"

namespace xent {

using ComplexScalar = std::complex<double>;

// Comparison thresholds used throughout the library. No operation hides its
// own constants; callers tighten or loosen these knobs explicitly.
struct Tolerance {
    double eps_herm = 1e-10;  // Hermiticity / trace checks
    double eps_psd = 1e-10;   // eigenvalue sign decisions
    double eps_eq = 1e-9;     // closed form vs numerical-oracle equality
};

// Dense 4x4 complex matrix with value semantics. Indices are 0-based.
class Matrix4 {
public:
    Matrix4() = default;

    ComplexScalar& operator()(int i, int j) { return e_[static_cast<std::size_t>(4 * i + j)]; }
    const ComplexScalar& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(4 * i + j)];
    }

    static Matrix4 identity();

    Matrix4 adjoint() const;
    ComplexScalar trace() const;
    bool all_finite() const;

    friend Matrix4 operator+(const Matrix4& a, const Matrix4& b);
    friend Matrix4 operator-(const Matrix4& a, const Matrix4& b);
    friend Matrix4 operator*(const Matrix4& a, const Matrix4& b);
    friend Matrix4 operator*(ComplexScalar s, const Matrix4& a);

private:
    std::array<ComplexScalar, 16> e_{};
};

// Largest deviation max_ij |m(i,j) - conj(m(j,i))| from Hermiticity.
double hermiticity_defect(const Matrix4& m);

struct EigenSystem {
    std::array<double, 4> values{};  // ascending
    Matrix4 vectors;                 // column k pairs with values[k]
};

// Real spectrum of a Hermitian matrix, ascending.
// Throws NotHermitianError when the defect exceeds tol.eps_herm.
std::array<double, 4> hermitian_eigenvalues(const Matrix4& m, const Tolerance& tol = {});

// Full eigendecomposition (values ascending, unitary column eigenvectors).
EigenSystem hermitian_eigensystem(const Matrix4& m, const Tolerance& tol = {});

// Singular values, descending, clamped to be exactly non-negative.
// Computed as square roots of the spectrum of m * adjoint(m).
std::array<double, 4> singular_values(const Matrix4& m);

// Trace norm: the sum of singular values.
double trace_norm(const Matrix4& m);

// Determinant via LU with partial pivoting.
ComplexScalar determinant(const Matrix4& m);

}  // namespace xent
