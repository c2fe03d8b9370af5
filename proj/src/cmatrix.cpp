#include "exclusion/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exclusion/tolerances.hpp"

namespace exclusion {

Tolerances& config() {
    static Tolerances t;
    return t;
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::dagger() const {
    CMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(double s) {
    for (auto& x : a_) x *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    CMatrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const cplx arK = a(r, k);
            if (arK == cplx{}) continue;
            for (int c = 0; c < b.cols_; ++c) m(r, c) += arK * b(k, c);
        }
    return m;
}

cplx CMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double CMatrix::hermiticity_defect() const {
    double m = 0.0;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

CMatrix CMatrix::hermitized() const {
    CMatrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m(r, c) = 0.5 * ((*this)(r, c) + std::conj((*this)(c, r)));
    return m;
}

double CMatrix::inner_real(const CMatrix& a, const CMatrix& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.a_.size(); ++i)
        s += std::real(std::conj(a.a_[i]) * b.a_[i]);
    return s;
}

namespace {

double off_diagonal_norm(const CMatrix& m) {
    double s = 0.0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (r != c) s += std::norm(m(r, c));
    return std::sqrt(s);
}

// Exact 2x2 Hermitian eigenbasis for the (p,q) pivot; returns the unitary
// columns (vp, vq) that diagonalize [[app, g], [conj(g), aqq]].
void pivot_basis(double app, double aqq, cplx g, cplx& vpp, cplx& vqp, cplx& vpq, cplx& vqq) {
    const double mid = 0.5 * (app + aqq);
    const double rad = std::hypot(0.5 * (app - aqq), std::abs(g));
    const double lo = mid - rad;
    // Eigenvector for the smaller eigenvalue. lo sits near the smaller of
    // the two diagonal entries, so the difference against the *larger* one
    // is the cancellation-free choice; the other difference can be pure
    // roundoff when |g| is far below the diagonal gap.
    cplx v1, v2;
    if (app > aqq) {
        v1 = g;
        v2 = lo - app;
    } else {
        v1 = lo - aqq;
        v2 = std::conj(g);
    }
    const double n = std::sqrt(std::norm(v1) + std::norm(v2));
    v1 /= n;
    v2 /= n;
    vpp = v1;
    vqp = v2;
    // Orthonormal complement.
    vpq = -std::conj(v2);
    vqq = std::conj(v1);
}

}  // namespace

EigResult hermitian_eig(const CMatrix& m) {
    if (m.rows() != m.cols()) throw NonHermitianInput("hermitian_eig: matrix is not square");
    if (m.hermiticity_defect() > config().hermitian)
        throw NonHermitianInput("hermitian_eig: input exceeds Hermitian tolerance");

    const int n = m.rows();
    CMatrix a = m.hermitized();
    CMatrix v = CMatrix::identity(n);
    const double target = config().jacobi_off * std::max(a.frobenius_norm(), 1e-300);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && off_diagonal_norm(a) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx g = a(p, q);
                if (std::abs(g) == 0.0) continue;
                cplx jpp, jqp, jpq, jqq;
                pivot_basis(std::real(a(p, p)), std::real(a(q, q)), g, jpp, jqp, jpq, jqq);
                // A <- J' A J applied to rows/columns p, q only.
                for (int r = 0; r < n; ++r) {
                    const cplx arp = a(r, p), arq = a(r, q);
                    a(r, p) = arp * jpp + arq * jqp;
                    a(r, q) = arp * jpq + arq * jqq;
                }
                for (int c = 0; c < n; ++c) {
                    const cplx apc = a(p, c), aqc = a(q, c);
                    a(p, c) = std::conj(jpp) * apc + std::conj(jqp) * aqc;
                    a(q, c) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = std::real(a(p, p));
                a(q, q) = std::real(a(q, q));
                for (int r = 0; r < n; ++r) {
                    const cplx vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp * jpp + vrq * jqp;
                    v(r, q) = vrp * jpq + vrq * jqq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return std::real(a(i, i)) < std::real(a(j, j)); });

    EigResult out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (int c = 0; c < n; ++c) {
        out.values[c] = std::real(a(order[c], order[c]));
        for (int r = 0; r < n; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

CMatrix psd_project(const CMatrix& m) {
    const EigResult eig = hermitian_eig(m);
    const int n = m.rows();
    CMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = eig.values[k];
        if (lam <= 0.0) continue;
        for (int r = 0; r < n; ++r) {
            const cplx w = lam * eig.vectors(r, k);
            for (int c = 0; c < n; ++c) out(r, c) += w * std::conj(eig.vectors(c, k));
        }
    }
    return out.hermitized();
}

CMatrix psd_factor(const CMatrix& g) {
    const EigResult eig = hermitian_eig(g);
    const int n = g.rows();
    if (!eig.values.empty() && eig.values.front() < -config().psd_floor)
        throw NotPsd("psd_factor: matrix has an eigenvalue below the PSD tolerance");
    CMatrix b(n, n);
    for (int r = 0; r < n; ++r) {
        const double s = std::sqrt(std::max(eig.values[r], 0.0));
        for (int c = 0; c < n; ++c) b(r, c) = s * std::conj(eig.vectors(c, r));
    }
    return b;
}

CMatrix pseudo_inverse(const CMatrix& v) {
    const CMatrix gram = v.dagger() * v;  // k x k, Hermitian PSD
    const EigResult eig = hermitian_eig(gram);
    const int k = gram.rows();
    const double cutoff = 1e-12 * std::max(eig.values.empty() ? 0.0 : eig.values.back(), 1e-300);
    // pinv(V) = (V'V)^+ V'
    CMatrix gpinv(k, k);
    for (int j = 0; j < k; ++j) {
        const double lam = eig.values[j];
        if (lam <= cutoff) continue;
        const double inv = 1.0 / lam;
        for (int r = 0; r < k; ++r) {
            const cplx w = inv * eig.vectors(r, j);
            for (int c = 0; c < k; ++c) gpinv(r, c) += w * std::conj(eig.vectors(c, j));
        }
    }
    return gpinv * v.dagger();
}

}  // namespace exclusion
