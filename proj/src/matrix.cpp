#include "spectre/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spectre/errors.hpp"

namespace spectre {

ComplexMatrix::ComplexMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 1) throw InvalidInputError("matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(int n, std::vector<cplx> entries) : n_(n), e_(std::move(entries)) {
    if (n < 1) throw InvalidInputError("matrix dimension must be >= 1");
    if (e_.size() != static_cast<std::size_t>(n) * n)
        throw InvalidInputError("entry count does not match dimension");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ < 1) throw InvalidInputError("matrix dimension must be >= 1");
    e_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_)
            throw InvalidInputError("matrix initializer is not square");
        e_.insert(e_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(int n) { return ComplexMatrix(n); }

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(n_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = std::conj(e_[k]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const { return conjugate().transpose(); }

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : e_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::norm1() const {
    double best = 0.0;
    for (int j = 0; j < n_; ++j) {
        double col = 0.0;
        for (int i = 0; i < n_; ++i) col += std::abs((*this)(i, j));
        best = std::max(best, col);
    }
    return best;
}

double ComplexMatrix::max_abs() const {
    double best = 0.0;
    for (const cplx& z : e_) best = std::max(best, std::abs(z));
    return best;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : e_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (n_ != rhs.n_) throw InvalidInputError("dimension mismatch in +=");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (n_ != rhs.n_) throw InvalidInputError("dimension mismatch in -=");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& z : e_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw InvalidInputError("dimension mismatch in *");
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= cplx(-1.0); }

ComplexMatrix matrix_power(const ComplexMatrix& a, int k) {
    if (k < 0) throw InvalidInputError("matrix_power: negative exponent");
    ComplexMatrix r = ComplexMatrix::identity(a.dim());
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

RowVec row_vec(const ComplexMatrix& x) { return RowVec{x.entries()}; }

ColVec col_vec(const ComplexMatrix& x) {
    const int n = x.dim();
    ColVec c;
    c.v.reserve(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) c.v.push_back(x(i, j));
    return c;
}

ComplexMatrix from_row_vec(const RowVec& r, int n) { return ComplexMatrix(n, r.v); }

ComplexMatrix from_col_vec(const ColVec& c, int n) {
    ComplexMatrix m(n);
    std::size_t k = 0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m(i, j) = c.v[k++];
    return m;
}

cplx dot(const RowVec& r, const ColVec& c) {
    if (r.v.size() != c.v.size()) throw InvalidInputError("vectorization length mismatch");
    cplx s = 0.0;
    for (std::size_t k = 0; k < r.v.size(); ++k) s += r.v[k] * c.v[k];
    return s;
}

cplx SpectrumMultiset::sum() const {
    cplx s = 0.0;
    for (const cplx& z : values) s += z;
    return s;
}

std::vector<cplx> SpectrumMultiset::sorted() const {
    std::vector<cplx> v = values;
    std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return v;
}

ComplexMatrix jordan_nilpotent(const std::vector<int>& block_sizes) {
    if (block_sizes.empty()) throw InvalidInputError("jordan_nilpotent: empty block list");
    int n = 0;
    for (int s : block_sizes) {
        if (s < 1) throw InvalidInputError("jordan_nilpotent: block size must be >= 1");
        n += s;
    }
    ComplexMatrix m(n);
    int off = 0;
    for (int s : block_sizes) {
        for (int i = 0; i + 1 < s; ++i) m(off + i, off + i + 1) = 1.0;
        off += s;
    }
    return m;
}

ComplexMatrix jordan_nilpotent(const std::vector<int>& block_sizes, int expected_n) {
    int n = 0;
    for (int s : block_sizes) n += s;
    if (n != expected_n)
        throw InvalidInputError("jordan_nilpotent: block sizes do not sum to n");
    return jordan_nilpotent(block_sizes);
}

ComplexMatrix kron(const ComplexMatrix& p, const ComplexMatrix& q) {
    const int n = p.dim();
    const int m = q.dim();
    ComplexMatrix r(n * m);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx pik = p(i, k);
            if (pik == cplx(0.0)) continue;
            for (int j = 0; j < m; ++j)
                for (int l = 0; l < m; ++l) r(i * m + j, k * m + l) = pik * q(j, l);
        }
    return r;
}

ComplexMatrix transposition_operator(int n) {
    ComplexMatrix t(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t(j * n + i, i * n + j) = 1.0;
    return t;
}

ComplexMatrix random_gaussian_matrix(int n, Rng& rng) {
    ComplexMatrix m(n);
    for (cplx& z : m.entries()) z = rng.complex_normal();
    return m;
}

}  // namespace spectre
