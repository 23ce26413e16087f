#include "xent/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace xent {

Matrix4 Matrix4::identity() {
    Matrix4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
}

Matrix4 Matrix4::adjoint() const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

ComplexScalar Matrix4::trace() const {
    ComplexScalar t = 0.0;
    for (int i = 0; i < 4; ++i) t += (*this)(i, i);
    return t;
}

bool Matrix4::all_finite() const {
    for (const auto& v : e_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e_[k] = a.e_[k] + b.e_[k];
    return r;
}

Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e_[k] = a.e_[k] - b.e_[k];
    return r;
}

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            ComplexScalar s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

Matrix4 operator*(ComplexScalar s, const Matrix4& a) {
    Matrix4 r;
    for (std::size_t k = 0; k < 16; ++k) r.e_[k] = s * a.e_[k];
    return r;
}

double hermiticity_defect(const Matrix4& m) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

namespace {

double off_diagonal_norm(const Matrix4& a) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). With the pivot block
//   [ alpha        b*phi   ]      b = |a(p,q)|, phi = e^{i arg a(p,q)},
//   [ b*conj(phi)  gamma   ]      alpha, gamma real,
// the plane unitary R with R(p,p)=c, R(p,q)=s, R(q,p)=-s*conj(phi),
// R(q,q)=c*conj(phi) makes R^dag A R real-diagonal on the pivot when
// tan(theta) solves t^2 + 2*tau*t - 1 = 0, tau = (gamma-alpha)/(2b).
void jacobi_rotate(Matrix4& a, Matrix4& v, int p, int q) {
    const ComplexScalar beta = a(p, q);
    const double b = std::abs(beta);
    if (b == 0.0) return;

    const double alpha = a(p, p).real();
    const double gamma = a(q, q).real();
    const ComplexScalar phase = beta / b;

    const double tau = (gamma - alpha) / (2.0 * b);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    if (!std::isfinite(t)) t = 0.0;  // |tau| overflowed; rotation is a no-op
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // A <- A R (columns), then A <- R^dag A (rows).
    for (int i = 0; i < 4; ++i) {
        const ComplexScalar aip = a(i, p);
        const ComplexScalar aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(phase) * aiq;
        a(i, q) = s * aip + c * std::conj(phase) * aiq;
    }
    for (int j = 0; j < 4; ++j) {
        const ComplexScalar apj = a(p, j);
        const ComplexScalar aqj = a(q, j);
        a(p, j) = c * apj - s * phase * aqj;
        a(q, j) = s * apj + c * phase * aqj;
    }
    for (int i = 0; i < 4; ++i) {
        const ComplexScalar vip = v(i, p);
        const ComplexScalar viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(phase) * viq;
        v(i, q) = s * vip + c * std::conj(phase) * viq;
    }
    // Exact by construction; pin so roundoff cannot linger on the pivot.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = ComplexScalar(a(p, p).real(), 0.0);
    a(q, q) = ComplexScalar(a(q, q).real(), 0.0);
}

EigenSystem jacobi_eigensystem(Matrix4 a) {
    // Symmetrize so roundoff in the caller cannot bias the sweeps.
    a = ComplexScalar(0.5, 0.0) * (a + a.adjoint());
    for (int i = 0; i < 4; ++i) a(i, i) = ComplexScalar(a(i, i).real(), 0.0);

    Matrix4 v = Matrix4::identity();
    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_norm(a) < 1e-15) break;
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, v, p, q);
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem out;
    for (int k = 0; k < 4; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (int i = 0; i < 4; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

void require_hermitian(const Matrix4& m, const Tolerance& tol) {
    const double defect = hermiticity_defect(m);
    if (defect > tol.eps_herm) {
        std::ostringstream msg;
        msg << "matrix is not Hermitian: max |m(i,j) - conj(m(j,i))| = " << defect
            << " exceeds " << tol.eps_herm;
        throw NotHermitianError(msg.str());
    }
}

}  // namespace

std::array<double, 4> hermitian_eigenvalues(const Matrix4& m, const Tolerance& tol) {
    require_hermitian(m, tol);
    return jacobi_eigensystem(m).values;
}

EigenSystem hermitian_eigensystem(const Matrix4& m, const Tolerance& tol) {
    require_hermitian(m, tol);
    return jacobi_eigensystem(m);
}

std::array<double, 4> singular_values(const Matrix4& m) {
    const Matrix4 gram = m * m.adjoint();  // Hermitian PSD by construction
    const EigenSystem es = jacobi_eigensystem(gram);
    std::array<double, 4> sv{};
    for (int k = 0; k < 4; ++k) sv[k] = std::sqrt(std::max(0.0, es.values[3 - k]));
    return sv;
}

double trace_norm(const Matrix4& m) {
    const auto sv = singular_values(m);
    return sv[0] + sv[1] + sv[2] + sv[3];
}

ComplexScalar determinant(const Matrix4& m) {
    Matrix4 a = m;
    ComplexScalar det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
        if (std::abs(a(pivot, col)) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < 4; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < 4; ++r) {
            const ComplexScalar factor = a(r, col) / a(col, col);
            for (int j = col; j < 4; ++j) a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

}  // namespace xent
