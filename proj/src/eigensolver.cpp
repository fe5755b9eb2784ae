#include "eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace nvmem {

namespace {

// One two-sided rotation eliminating h(p,q). h stays Hermitian by
// construction; v accumulates the similarity transform.
void rotate(CMat& h, CMat& v, int p, int q) {
    const c64 apq = h(p, q);
    const double m = std::abs(apq);
    if (m == 0.0) return;

    const c64 phase = apq / m;  // e^{i phi}
    const double tau = (h(q, q).real() - h(p, p).real()) / (2.0 * m);
    double t;
    if (std::abs(tau) > 1e12) {
        t = 1.0 / (2.0 * tau);
    } else {
        t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    }
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const c64 sp = s * phase;             // s e^{i phi}
    const c64 spc = s * std::conj(phase); // s e^{-i phi}

    const int n = h.dim();
    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    h(p, p) = app - t * m;
    h(q, q) = aqq + t * m;
    h(p, q) = 0.0;
    h(q, p) = 0.0;

    for (int r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const c64 hrp = h(r, p);
        const c64 hrq = h(r, q);
        h(r, p) = c * hrp - spc * hrq;
        h(r, q) = sp * hrp + c * hrq;
        h(p, r) = std::conj(h(r, p));
        h(q, r) = std::conj(h(r, q));
    }
    for (int r = 0; r < n; ++r) {
        const c64 vrp = v(r, p);
        const c64 vrq = v(r, q);
        v(r, p) = c * vrp - spc * vrq;
        v(r, q) = sp * vrp + c * vrq;
    }
}

double offdiag_norm(const CMat& h) {
    double s = 0.0;
    const int n = h.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem eigh(const CMat& h_in) {
    const int n = h_in.dim();
    const double scale = h_in.max_abs();
    const double herm = h_in.hermiticity_residual();
    if (scale > 0.0 && herm > 1e-10 * scale) throw NotHermitianError(herm / scale);

    // symmetrize before decomposing
    CMat h(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h(i, j) = 0.5 * (h_in(i, j) + std::conj(h_in(j, i)));
    const CMat h0 = h;

    CMat v = CMat::identity(n);
    const double hnorm = h.frobenius_norm();
    const double tol = 1e-13 * hnorm;

    bool converged = (offdiag_norm(h) <= tol);
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) rotate(h, v, p, q);
        converged = (offdiag_norm(h) <= tol);
    }
    if (!converged) throw NoConvergenceError();

    // ascending order, stable in case of ties
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return h(a, a).real() < h(b, b).real(); });

    EigenSystem out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = CMat(n);
    for (int c = 0; c < n; ++c) {
        out.eigenvalues[static_cast<size_t>(c)] = h(idx[static_cast<size_t>(c)], idx[static_cast<size_t>(c)]).real();
        for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, idx[static_cast<size_t>(c)]);
    }

    // phase convention: largest-magnitude entry real and non-negative
    for (int c = 0; c < n; ++c) {
        int imax = 0;
        double best = std::abs(out.eigenvectors(0, c));
        for (int r = 1; r < n; ++r) {
            const double a = std::abs(out.eigenvectors(r, c));
            if (a > best) { best = a; imax = r; }
        }
        if (best > 0.0) {
            const c64 ph = std::conj(out.eigenvectors(imax, c)) / best;
            for (int r = 0; r < n; ++r) out.eigenvectors(r, c) *= ph;
        }
    }

    // reconstruction residual
    double worst = 0.0;
    for (int c = 0; c < n; ++c) {
        double s = 0.0;
        for (int r = 0; r < n; ++r) {
            c64 hv{};
            for (int k = 0; k < n; ++k) hv += h0(r, k) * out.eigenvectors(k, c);
            hv -= out.eigenvalues[static_cast<size_t>(c)] * out.eigenvectors(r, c);
            s += std::norm(hv);
        }
        worst = std::max(worst, std::sqrt(s));
    }
    out.residual_norm = (hnorm > 0.0) ? worst / hnorm : worst;
    return out;
}

}  // namespace nvmem
