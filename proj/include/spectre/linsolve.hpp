#pragma once

#include <vector>

#include "spectre/matrix.hpp"

namespace spectre {

/// LU factorization with partial pivoting. Throws SingularMatrixError
/// (carrying the offending pivot magnitude) when singular to working
/// precision.
class LuFactorization {
public:
    explicit LuFactorization(ComplexMatrix a);

    int dim() const { return lu_.dim(); }

    std::vector<cplx> solve(const std::vector<cplx>& b) const;
    ComplexMatrix solve(const ComplexMatrix& b) const;

    /// Solves A^H x = b; needed by the 1-norm condition estimator.
    std::vector<cplx> solve_adjoint(const std::vector<cplx>& b) const;

    ComplexMatrix inverse() const;

    /// Hager/Higham 1-norm power iteration estimate of ||A^{-1}||_1.
    double inverse_norm1_estimate() const;

    /// kappa_1(A) estimate = ||A||_1 * est(||A^{-1}||_1).
    double condition_estimate() const;

private:
    ComplexMatrix lu_;
    std::vector<int> perm_;
    double norm1_a_ = 0.0;
};

/// One-shot helpers. `solve` reports the solution of A X = B; both check the
/// partial-pivoting residual contract only through the factorization itself.
ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix invert(const ComplexMatrix& a);
double condition_estimate(const ComplexMatrix& a);

}  // namespace spectre
