#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "spectre/eigen.hpp"
#include "spectre/linsolve.hpp"
#include "spectre/matrix.hpp"
#include "spectre/rng.hpp"

using namespace spectre;

namespace {

// Brute-force min over all pairings of the max pair distance (test oracle).
double bruteforce_match_distance(std::vector<cplx> a, const std::vector<cplx>& b) {
    std::vector<int> idx(a.size());
    std::iota(idx.begin(), idx.end(), 0);
    double best = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, std::abs(a[i] - b[idx[i]]));
        best = std::min(best, worst);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

}  // namespace

TEST_CASE("eigenvalues of fixed small matrices") {
    const SpectrumMultiset d = eigenvalues(ComplexMatrix::diagonal({1.0, 2.0, 3.0}));
    CHECK(bruteforce_match_distance(d.values, {1.0, 2.0, 3.0}) <= 1e-12);

    const SpectrumMultiset j = eigenvalues(jordan_nilpotent({2}));
    CHECK(bruteforce_match_distance(j.values, {0.0, 0.0}) <= 1e-7);

    // char poly x^2 - 1 = 0 has roots +-1
    const SpectrumMultiset s = eigenvalues(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
    CHECK(bruteforce_match_distance(s.values, {1.0, -1.0}) <= 1e-10);
}

TEST_CASE("eigenvalue multiset sums to the trace") {
    Rng rng(41);
    const double tol = 1e-12;
    for (int n = 2; n <= 8; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            const ComplexMatrix x = random_gaussian_matrix(n, rng);
            const SpectrumMultiset s = eigenvalues(x, tol);
            REQUIRE(static_cast<int>(s.values.size()) == n);
            CHECK(std::abs(s.sum() - x.trace()) <= n * tol * x.frobenius_norm() + 1e-13);
        }
    }
}

TEST_CASE("eigenvalues are similarity invariant") {
    Rng rng(59);
    for (int n = 2; n <= 5; ++n) {
        int done = 0;
        while (done < 8) {
            const ComplexMatrix p = random_gaussian_matrix(n, rng);
            LuFactorization lu(p);
            if (lu.condition_estimate() > 100.0) continue;  // spec caps kappa(P)
            const ComplexMatrix x = random_gaussian_matrix(n, rng);
            const ComplexMatrix conj = p * x * lu.inverse();
            const double d =
                bruteforce_match_distance(eigenvalues(x).values, eigenvalues(conj).values);
            CHECK(d <= 1e-7 * (1.0 + x.frobenius_norm()));
            ++done;
        }
    }
}

TEST_CASE("char_poly_coeffs on fixed matrices") {
    const std::vector<cplx> c = char_poly_coeffs(ComplexMatrix::diagonal({1.0, 2.0, 3.0}));
    REQUIRE(c.size() == 4);
    CHECK(std::abs(c[0] - cplx(1.0)) <= 1e-15);
    CHECK(std::abs(c[1] - cplx(-6.0)) <= 1e-12);
    CHECK(std::abs(c[2] - cplx(11.0)) <= 1e-12);
    CHECK(std::abs(c[3] - cplx(-6.0)) <= 1e-12);

    const std::vector<cplx> z = char_poly_coeffs(ComplexMatrix::zero(2));
    CHECK(z == std::vector<cplx>{1.0, 0.0, 0.0});
}

TEST_CASE("char_poly_coeffs matches the product over eigenvalues") {
    Rng rng(7);
    const ComplexMatrix x = random_gaussian_matrix(4, rng);
    const SpectrumMultiset s = eigenvalues(x);
    // expand prod (t - lambda_i) from the computed spectrum
    std::vector<cplx> poly{1.0};
    for (const cplx& lam : s.values) {
        std::vector<cplx> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= poly[i] * lam;
        }
        poly = std::move(next);
    }
    const std::vector<cplx> c = char_poly_coeffs(x);
    REQUIRE(c.size() == poly.size());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(std::abs(c[i] - poly[i]) <= 1e-9);
}

TEST_CASE("char poly of the transpose is identical") {
    Rng rng(11);
    for (int n = 2; n <= 6; ++n) {
        const ComplexMatrix x = random_gaussian_matrix(n, rng);
        const std::vector<cplx> a = char_poly_coeffs(x);
        const std::vector<cplx> b = char_poly_coeffs(x.transpose());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) <= 1e-12);
    }
}

TEST_CASE("s2 examples and the trace identity") {
    CHECK(std::abs(s2(ComplexMatrix::diagonal({1.0, 2.0, 3.0})) - cplx(11.0)) <= 1e-12);
    CHECK(std::abs(s2(ComplexMatrix::diagonal({5.0, -5.0})) - cplx(-25.0)) <= 1e-12);
    CHECK(s2(ComplexMatrix::diagonal({4.0})) == cplx(0.0));

    // (Tr X)^2 = Tr(X^2) + 2 S2(X)
    Rng rng(13);
    for (int n = 2; n <= 6; ++n) {
        for (int rep = 0; rep < 50; ++rep) {
            const ComplexMatrix x = random_gaussian_matrix(n, rng);
            const cplx lhs = x.trace() * x.trace();
            const cplx rhs = (x * x).trace() + 2.0 * s2(x);
            const double f = x.frobenius_norm();
            CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + f * f));
        }
    }
}

TEST_CASE("eigenvalues rejects bad input") {
    ComplexMatrix bad(2);
    bad(0, 0) = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
    CHECK_THROWS(eigenvalues(bad));
    CHECK_THROWS(eigenvalues(ComplexMatrix::identity(2), 0.0));
}

TEST_CASE("eigenvalues of a defective-cluster matrix still sum to trace") {
    // J_3 plus a tiny perturbation: eigenvalues split like eps^{1/3}
    ComplexMatrix x = jordan_nilpotent({3});
    x(2, 0) = 1e-9;
    const SpectrumMultiset s = eigenvalues(x);
    CHECK(std::abs(s.sum()) <= 1e-10);
    for (const cplx& v : s.values) CHECK(std::abs(v) <= 2e-3);
}
