#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "spectre/rng.hpp"

namespace spectre {

using cplx = std::complex<double>;

/// Dense n x n complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n);
    ComplexMatrix(int n, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int n);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);

    int dim() const { return n_; }
    cplx& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<cplx>& entries() const { return e_; }
    std::vector<cplx>& entries() { return e_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    cplx trace() const;
    double frobenius_norm() const;
    double norm1() const;      // max column sum of moduli
    double max_abs() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(cplx s);

    bool operator==(const ComplexMatrix& rhs) const = default;

private:
    int n_ = 0;
    std::vector<cplx> e_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);
ComplexMatrix operator-(ComplexMatrix a);

/// A^k with the convention A^0 = Id for every A, the zero matrix included.
ComplexMatrix matrix_power(const ComplexMatrix& a, int k);

/// Row-major flattening of X: x11, x12, ..., x1n, x21, ..., xnn.
struct RowVec {
    std::vector<cplx> v;
};

/// Column-major flattening of X: x11, x21, ..., xn1, x12, ..., xnn.
struct ColVec {
    std::vector<cplx> v;
};

RowVec row_vec(const ComplexMatrix& x);
ColVec col_vec(const ComplexMatrix& x);
ComplexMatrix from_row_vec(const RowVec& r, int n);
ComplexMatrix from_col_vec(const ColVec& c, int n);

/// R_X . C_Y; equals Tr(XY).
cplx dot(const RowVec& r, const ColVec& c);

/// n eigenvalues with multiplicity; equality is multiset equality and lives
/// in the audit module (this type only carries raw values).
struct SpectrumMultiset {
    int n = 0;
    std::vector<cplx> values;

    cplx sum() const;
    /// Values sorted by (re, im); canonical order for printing and hashing.
    std::vector<cplx> sorted() const;
};

/// Direct sum of upper-shift Jordan blocks J_{s} for s in block_sizes.
/// Throws InvalidInputError if the list is empty or any size is < 1.
ComplexMatrix jordan_nilpotent(const std::vector<int>& block_sizes);
/// Same, but also checks that the sizes sum to expected_n.
ComplexMatrix jordan_nilpotent(const std::vector<int>& block_sizes, int expected_n);

/// Kronecker product, row index (i,j) -> i*n+j convention:
/// (P (x) Q)[(i,j),(k,l)] = P(i,k) Q(j,l).
ComplexMatrix kron(const ComplexMatrix& p, const ComplexMatrix& q);

/// Permutation operator T with R_{X^t} = R_X T; symmetric, T^2 = I.
ComplexMatrix transposition_operator(int n);

/// Matrix with i.i.d. complex standard normal entries.
ComplexMatrix random_gaussian_matrix(int n, Rng& rng);

}  // namespace spectre
