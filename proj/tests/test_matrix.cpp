#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "spectre/errors.hpp"
#include "spectre/matrix.hpp"
#include "spectre/rng.hpp"

using namespace spectre;

TEST_CASE("row_vec and col_vec conventions") {
    const ComplexMatrix x = {{1.0, 2.0}, {3.0, 4.0}};
    const RowVec r = row_vec(x);
    const ColVec c = col_vec(x);
    CHECK(r.v == std::vector<cplx>{1.0, 2.0, 3.0, 4.0});
    CHECK(c.v == std::vector<cplx>{1.0, 3.0, 2.0, 4.0});

    const ComplexMatrix id = ComplexMatrix::identity(2);
    CHECK(row_vec(id).v == col_vec(id).v);
}

TEST_CASE("R_X . C_Y equals Tr(XY) on random pairs") {
    Rng rng(17);
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            const ComplexMatrix x = random_gaussian_matrix(n, rng);
            const ComplexMatrix y = random_gaussian_matrix(n, rng);
            const cplx lhs = dot(row_vec(x), col_vec(y));
            const cplx rhs = (x * y).trace();
            const double scale = 1.0 + x.frobenius_norm() * y.frobenius_norm();
            CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("from_row_vec / from_col_vec invert the flattenings") {
    Rng rng(5);
    const ComplexMatrix x = random_gaussian_matrix(4, rng);
    CHECK(from_row_vec(row_vec(x), 4) == x);
    CHECK(from_col_vec(col_vec(x), 4) == x);
}

TEST_CASE("jordan_nilpotent block constructions") {
    const ComplexMatrix j2 = jordan_nilpotent({2});
    CHECK(j2 == ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}});

    CHECK(jordan_nilpotent({1, 1}) == ComplexMatrix::zero(2));

    const ComplexMatrix j3 = jordan_nilpotent({3});
    const ComplexMatrix j3sq = j3 * j3;
    ComplexMatrix e13(3);
    e13(0, 2) = 1.0;
    CHECK(j3sq == e13);
    CHECK(matrix_power(j3, 3) == ComplexMatrix::zero(3));

    CHECK_THROWS_AS(jordan_nilpotent({}), InvalidInputError);
    CHECK_THROWS_AS(jordan_nilpotent({2, 0}), InvalidInputError);
    CHECK_THROWS_AS(jordan_nilpotent({2, 1}, 4), InvalidInputError);
}

TEST_CASE("matrix_power uses the A^0 = Id convention, zero matrix included") {
    CHECK(matrix_power(ComplexMatrix::zero(3), 0) == ComplexMatrix::identity(3));
    const ComplexMatrix j2 = jordan_nilpotent({2});
    CHECK(matrix_power(j2, 1) == j2);
}

TEST_CASE("transposition operator satisfies R_{X^t} = R_X T") {
    Rng rng(23);
    for (int n = 2; n <= 4; ++n) {
        const ComplexMatrix t = transposition_operator(n);
        const ComplexMatrix x = random_gaussian_matrix(n, rng);
        const RowVec r = row_vec(x);
        std::vector<cplx> rt(r.v.size(), 0.0);
        for (std::size_t col = 0; col < rt.size(); ++col)
            for (std::size_t row = 0; row < rt.size(); ++row)
                rt[col] += r.v[row] * t(static_cast<int>(row), static_cast<int>(col));
        CHECK(rt == row_vec(x.transpose()).v);
        CHECK(t * t == ComplexMatrix::identity(n * n));
        CHECK(t == t.transpose());
    }
}

TEST_CASE("kron reproduces the (i,j)->(k,l) block convention") {
    const ComplexMatrix p = {{1.0, 2.0}, {3.0, 4.0}};
    const ComplexMatrix q = {{0.0, 5.0}, {6.0, 7.0}};
    const ComplexMatrix k = kron(p, q);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int kk = 0; kk < 2; ++kk)
                for (int l = 0; l < 2; ++l)
                    CHECK(k(i * 2 + j, kk * 2 + l) == p(i, kk) * q(j, l));
}

TEST_CASE("trace and norms") {
    const ComplexMatrix x = {{cplx(1, 1), 2.0}, {3.0, cplx(0, -1)}};
    CHECK(x.trace() == cplx(1, 0));
    CHECK(x.frobenius_norm() == doctest::Approx(std::sqrt(2.0 + 4.0 + 9.0 + 1.0)));
    CHECK(x.max_abs() == doctest::Approx(3.0));
}

TEST_CASE("matrix arithmetic basics") {
    Rng rng(3);
    const ComplexMatrix a = random_gaussian_matrix(3, rng);
    const ComplexMatrix b = random_gaussian_matrix(3, rng);
    CHECK(((a + b) - b - a).frobenius_norm() <= 1e-15 * a.frobenius_norm());
    CHECK((a.transpose()).transpose() == a);
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
    CHECK(a.adjoint() == a.conjugate().transpose());
}

TEST_CASE("deterministic rng: same seed, same matrix") {
    Rng r1(99), r2(99);
    CHECK(random_gaussian_matrix(4, r1) == random_gaussian_matrix(4, r2));
    Rng r3(100);
    CHECK(random_gaussian_matrix(4, r3) != random_gaussian_matrix(4, r2));
}
