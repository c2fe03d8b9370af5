#pragma once

#include <complex>
#include <vector>

#include "exclusion/errors.hpp"

namespace exclusion {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Sized for the k x k Gram matrices and
// d' x d' measurement operators this library works with (n <= 64).
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n);
    static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    const std::vector<cplx>& data() const { return a_; }

    CMatrix dagger() const;
    CMatrix transpose() const;

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(double s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, double s) { return a *= s; }
    friend CMatrix operator*(double s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    double hermiticity_defect() const;  // max |M_ab - conj(M_ba)|
    bool is_hermitian(double tol) const { return rows_ == cols_ && hermiticity_defect() <= tol; }
    CMatrix hermitized() const;  // (M + M')/2

    // Real part of the Frobenius inner product <A, B> = Tr(A' B).
    static double inner_real(const CMatrix& a, const CMatrix& b);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> a_;
};

struct EigResult {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // unitary, columns are eigenvectors
};

// Cyclic Jacobi eigendecomposition for complex Hermitian matrices.
// Throws NonHermitianInput if the Hermitian check fails; the input is
// symmetrized before iteration to absorb roundoff.
EigResult hermitian_eig(const CMatrix& m);

// Frobenius-nearest PSD matrix: eigenvalues clipped at zero.
CMatrix psd_project(const CMatrix& m);

// B with B'B = G (columns of B realize G as a set of vectors).
// Throws NotPsd if the smallest eigenvalue of G is below -psd_floor.
CMatrix psd_factor(const CMatrix& g);

// Moore-Penrose pseudoinverse of a general d x k matrix, computed through
// the eigendecomposition of V'V.
CMatrix pseudo_inverse(const CMatrix& v);

}  // namespace exclusion
