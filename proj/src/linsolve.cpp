#include "spectre/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spectre/errors.hpp"

namespace spectre {

LuFactorization::LuFactorization(ComplexMatrix a) : lu_(std::move(a)) {
    if (!lu_.all_finite()) throw InvalidInputError("lu: non-finite input");
    const int n = lu_.dim();
    norm1_a_ = lu_.norm1();
    perm_.resize(n);
    const double pivot_floor =
        std::numeric_limits<double>::epsilon() * std::max(norm1_a_, 1e-300) * n;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(lu_(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(lu_(i, k));
            if (m > best) {
                best = m;
                piv = i;
            }
        }
        if (best <= pivot_floor)
            throw SingularMatrixError("lu: matrix singular to working precision", best);
        perm_[k] = piv;
        if (piv != k)
            for (int j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
        const cplx inv_pivot = 1.0 / lu_(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx f = lu_(i, k) * inv_pivot;
            lu_(i, k) = f;
            if (f == cplx(0.0)) continue;
            for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
        }
    }
}

std::vector<cplx> LuFactorization::solve(const std::vector<cplx>& b) const {
    const int n = lu_.dim();
    if (static_cast<int>(b.size()) != n) throw InvalidInputError("lu solve: size mismatch");
    std::vector<cplx> x = b;
    for (int k = 0; k < n; ++k)
        if (perm_[k] != k) std::swap(x[k], x[perm_[k]]);
    for (int i = 1; i < n; ++i) {
        cplx s = x[i];
        for (int j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        cplx s = x[i];
        for (int j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
        x[i] = s / lu_(i, i);
    }
    return x;
}

ComplexMatrix LuFactorization::solve(const ComplexMatrix& b) const {
    const int n = lu_.dim();
    if (b.dim() != n) throw InvalidInputError("lu solve: dimension mismatch");
    ComplexMatrix x(n);
    std::vector<cplx> col(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) col[i] = b(i, j);
        const std::vector<cplx> y = solve(col);
        for (int i = 0; i < n; ++i) x(i, j) = y[i];
    }
    return x;
}

std::vector<cplx> LuFactorization::solve_adjoint(const std::vector<cplx>& b) const {
    // A = P^T L U  =>  A^H = U^H L^H P; solve U^H w = b, L^H v = w, x = P^T v.
    const int n = lu_.dim();
    if (static_cast<int>(b.size()) != n) throw InvalidInputError("lu solve_adjoint: size mismatch");
    std::vector<cplx> x = b;
    for (int i = 0; i < n; ++i) {
        cplx s = x[i];
        for (int j = 0; j < i; ++j) s -= std::conj(lu_(j, i)) * x[j];
        x[i] = s / std::conj(lu_(i, i));
    }
    for (int i = n - 1; i >= 0; --i) {
        cplx s = x[i];
        for (int j = i + 1; j < n; ++j) s -= std::conj(lu_(j, i)) * x[j];
        x[i] = s;
    }
    for (int k = n - 1; k >= 0; --k)
        if (perm_[k] != k) std::swap(x[k], x[perm_[k]]);
    return x;
}

ComplexMatrix LuFactorization::inverse() const {
    return solve(ComplexMatrix::identity(lu_.dim()));
}

double LuFactorization::inverse_norm1_estimate() const {
    const int n = lu_.dim();
    std::vector<cplx> x(n, cplx(1.0 / n));
    double est = 0.0;
    int last_j = -1;
    for (int iter = 0; iter < 6; ++iter) {
        const std::vector<cplx> y = solve(x);
        double norm = 0.0;
        for (const cplx& z : y) norm += std::abs(z);
        if (iter > 0 && norm <= est) break;
        est = norm;
        std::vector<cplx> xi(n);
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(y[i]);
            xi[i] = a > 0.0 ? y[i] / a : cplx(1.0);
        }
        const std::vector<cplx> z = solve_adjoint(xi);
        int j = 0;
        double zmax = 0.0;
        for (int i = 0; i < n; ++i) {
            const double a = std::abs(z[i]);
            if (a > zmax) {
                zmax = a;
                j = i;
            }
        }
        if (j == last_j) break;
        last_j = j;
        std::fill(x.begin(), x.end(), cplx(0.0));
        x[j] = 1.0;
    }
    return est;
}

double LuFactorization::condition_estimate() const {
    return norm1_a_ * inverse_norm1_estimate();
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    return LuFactorization(a).solve(b);
}

ComplexMatrix invert(const ComplexMatrix& a) { return LuFactorization(a).inverse(); }

double condition_estimate(const ComplexMatrix& a) {
    return LuFactorization(a).condition_estimate();
}

}  // namespace spectre
