#pragma once

#include <vector>

#include "spectre/matrix.hpp"

namespace spectre {

/// Eigenvalues of X, with multiplicity, via Householder reduction to upper
/// Hessenberg form followed by shifted QR (Wilkinson shift, deflation at
/// subdiagonal < tol * local scale). Throws ConvergenceError if the
/// iteration budget runs out; the error carries the stuck subdiagonal size.
SpectrumMultiset eigenvalues(const ComplexMatrix& x, double tol = 1e-12);

/// Coefficients of det(xI - X) in descending degree, leading coefficient
/// exactly 1, by the Faddeev-LeVerrier recurrence. The coefficient of
/// x^{n-1} is -Tr(X).
std::vector<cplx> char_poly_coeffs(const ComplexMatrix& x);

/// Second elementary symmetric function of the eigenvalues: the coefficient
/// of x^{n-2} in det(xI - X). Returns 0 for n = 1.
cplx s2(const ComplexMatrix& x);

}  // namespace spectre
