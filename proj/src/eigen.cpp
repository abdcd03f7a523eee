#include "spectre/eigen.hpp"

#include <algorithm>
#include <cmath>

#include "spectre/errors.hpp"

namespace spectre {

namespace {

// In-place Householder reduction to upper Hessenberg form.
void hessenberg_reduce(ComplexMatrix& h) {
    const int n = h.dim();
    std::vector<cplx> v;
    for (int k = 0; k + 2 < n; ++k) {
        double norm2 = 0.0;
        for (int i = k + 1; i < n; ++i) norm2 += std::norm(h(i, k));
        const double alpha = std::sqrt(norm2);
        if (alpha == 0.0) continue;

        v.assign(n - k - 1, cplx(0.0));
        for (int i = k + 1; i < n; ++i) v[i - k - 1] = h(i, k);
        const cplx x0 = v[0];
        const double ax0 = std::abs(x0);
        const cplx phase = ax0 > 0.0 ? x0 / ax0 : cplx(1.0);
        const cplx beta = -phase * alpha;  // new value of h(k+1, k)
        v[0] -= beta;

        double vnorm2 = 0.0;
        for (const cplx& z : v) vnorm2 += std::norm(z);
        if (vnorm2 == 0.0) continue;
        const double tau = 2.0 / vnorm2;

        // Left: H <- P H on rows k+1..n-1.
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = k + 1; i < n; ++i) s += std::conj(v[i - k - 1]) * h(i, j);
            s *= tau;
            for (int i = k + 1; i < n; ++i) h(i, j) -= s * v[i - k - 1];
        }
        // Right: H <- H P on columns k+1..n-1.
        for (int i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (int j = k + 1; j < n; ++j) s += h(i, j) * v[j - k - 1];
            s *= tau;
            for (int j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[j - k - 1]);
        }
        h(k + 1, k) = beta;  // exact by the reflector construction
        for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

// Eigenvalues of the 2x2 block [[a,b],[c,d]], cancellation-aware.
std::pair<cplx, cplx> eig2x2(cplx a, cplx b, cplx c, cplx d) {
    const cplx m = 0.5 * (a + d);
    const cplx det = a * d - b * c;
    const cplx q = std::sqrt(m * m - det);
    cplx l1 = m + q;
    cplx l2 = m - q;
    if (std::abs(l1) > std::abs(l2)) {
        if (std::abs(l1) > 0.0) l2 = det / l1;
    } else if (std::abs(l2) > 0.0) {
        l1 = det / l2;
    }
    return {l1, l2};
}

// Wilkinson shift: eigenvalue of the trailing 2x2 closer to the corner.
cplx wilkinson_shift(const ComplexMatrix& h, int hi) {
    const cplx a = h(hi - 1, hi - 1);
    const cplx b = h(hi - 1, hi);
    const cplx c = h(hi, hi - 1);
    const cplx d = h(hi, hi);
    const cplx t = 0.5 * (a - d);
    const cplx disc = std::sqrt(t * t + b * c);
    const cplx den1 = t + disc;
    const cplx den2 = t - disc;
    const cplx den = std::abs(den1) >= std::abs(den2) ? den1 : den2;
    if (std::abs(den) == 0.0) return d;
    return d - (b * c) / den;
}

// One explicit single-shift QR step on the window [lo, hi] (inclusive).
// Rotations are applied inside the window only: the coupling blocks never
// influence eigenvalues of the remaining active blocks.
void qr_step(ComplexMatrix& h, int lo, int hi, cplx mu) {
    const int m = hi - lo + 1;
    std::vector<double> cs(m - 1);
    std::vector<cplx> sn(m - 1);

    for (int i = lo; i <= hi; ++i) h(i, i) -= mu;

    // QR by Givens rotations acting on rows (k, k+1).
    for (int k = 0; k + 1 < m; ++k) {
        const int r = lo + k;
        const cplx f = h(r, r);
        const cplx g = h(r + 1, r);
        const double af = std::abs(f);
        const double d = std::hypot(af, std::abs(g));
        double c;
        cplx s;
        if (d == 0.0 || af == 0.0) {
            c = 0.0;
            s = 1.0;
        } else {
            c = af / d;
            s = (f / af) * std::conj(g) / d;
        }
        cs[k] = c;
        sn[k] = s;
        for (int j = r; j <= hi; ++j) {
            const cplx t1 = h(r, j);
            const cplx t2 = h(r + 1, j);
            h(r, j) = c * t1 + s * t2;
            h(r + 1, j) = -std::conj(s) * t1 + c * t2;
        }
        h(r + 1, r) = 0.0;
    }

    // R Q: apply the adjoint rotations on columns (k, k+1).
    for (int k = 0; k + 1 < m; ++k) {
        const int col = lo + k;
        const double c = cs[k];
        const cplx s = sn[k];
        const int top = lo;
        const int bot = std::min(hi, col + 2);
        for (int i = top; i <= bot; ++i) {
            const cplx t1 = h(i, col);
            const cplx t2 = h(i, col + 1);
            h(i, col) = c * t1 + std::conj(s) * t2;
            h(i, col + 1) = -s * t1 + c * t2;
        }
    }

    for (int i = lo; i <= hi; ++i) h(i, i) += mu;
}

}  // namespace

SpectrumMultiset eigenvalues(const ComplexMatrix& x, double tol) {
    if (!x.all_finite()) throw InvalidInputError("eigenvalues: non-finite input");
    if (tol <= 0.0) throw InvalidInputError("eigenvalues: tol must be > 0");
    const int n = x.dim();
    SpectrumMultiset spec;
    spec.n = n;
    if (n == 1) {
        spec.values = {x(0, 0)};
        return spec;
    }

    ComplexMatrix h = x;
    hessenberg_reduce(h);

    const double fallback = std::max(h.frobenius_norm(), 1e-300);
    std::vector<cplx> eigs;
    eigs.reserve(n);
    int hi = n - 1;
    int stagnant = 0;
    int total_iter = 0;
    const int budget = 120 * n;

    while (hi >= 0) {
        if (hi == 0) {
            eigs.push_back(h(0, 0));
            break;
        }
        // Deflation scan from the bottom of the active block.
        int lo = hi;
        while (lo > 0) {
            double s = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (s == 0.0) s = fallback;
            if (std::abs(h(lo, lo - 1)) <= tol * s) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eigs.push_back(h(hi, hi));
            --hi;
            stagnant = 0;
            continue;
        }
        if (lo == hi - 1) {
            auto [l1, l2] = eig2x2(h(lo, lo), h(lo, hi), h(hi, lo), h(hi, hi));
            eigs.push_back(l1);
            eigs.push_back(l2);
            hi -= 2;
            stagnant = 0;
            continue;
        }

        if (++total_iter > budget)
            throw ConvergenceError("eigenvalues: QR iteration budget exhausted",
                                   std::abs(h(hi, hi - 1)));
        cplx mu;
        if (stagnant > 0 && stagnant % 12 == 0) {
            // Exceptional shift to break the rare non-converging cycle.
            mu = h(hi, hi) + 0.75 * std::abs(h(hi, hi - 1));
        } else {
            mu = wilkinson_shift(h, hi);
        }
        ++stagnant;
        qr_step(h, lo, hi, mu);
    }

    spec.values = std::move(eigs);
    return spec;
}

std::vector<cplx> char_poly_coeffs(const ComplexMatrix& x) {
    if (!x.all_finite()) throw InvalidInputError("char_poly_coeffs: non-finite input");
    const int n = x.dim();
    std::vector<cplx> out(n + 1);
    out[0] = 1.0;  // out[j] is the coefficient of x^{n-j}
    ComplexMatrix m = ComplexMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        const ComplexMatrix am = x * m;
        const cplx ck = -am.trace() / static_cast<double>(k);
        out[k] = ck;
        if (k < n) {
            m = am;
            for (int i = 0; i < n; ++i) m(i, i) += ck;
        }
    }
    return out;
}

cplx s2(const ComplexMatrix& x) {
    if (x.dim() == 1) return 0.0;
    return char_poly_coeffs(x)[2];
}

}  // namespace spectre
