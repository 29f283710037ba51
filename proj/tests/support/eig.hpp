#pragma once

// Oracle eigensolver for small dense complex matrices: Householder reduction
// to upper Hessenberg form followed by shifted QR iteration with deflation.
// Test-support only; independent of everything it is used to check.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qinst/bspace.hpp"

namespace testsupport {

using qinst::CMatrix;
using Cplx = std::complex<double>;

namespace eig_detail {

inline void hessenberg(CMatrix& a) {
    const int n = a.n;
    for (int k = 0; k + 2 < n; ++k) {
        // Householder vector for column k, rows k+1..n-1
        double norm = 0;
        for (int i = k + 1; i < n; ++i) norm += std::norm(a(i, k));
        norm = std::sqrt(norm);
        if (norm < 1e-300) continue;
        Cplx x0 = a(k + 1, k);
        Cplx phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : Cplx(1.0);
        std::vector<Cplx> v(std::size_t(n), 0.0);
        for (int i = k + 1; i < n; ++i) v[std::size_t(i)] = a(i, k);
        v[std::size_t(k + 1)] += phase * norm;
        double vv = 0;
        for (int i = k + 1; i < n; ++i) vv += std::norm(v[std::size_t(i)]);
        if (vv < 1e-300) continue;
        // a <- P a P with P = I - 2 v v^H / (v^H v)
        for (int j = 0; j < n; ++j) {  // left
            Cplx dot = 0.0;
            for (int i = k + 1; i < n; ++i) dot += std::conj(v[std::size_t(i)]) * a(i, j);
            dot *= 2.0 / vv;
            for (int i = k + 1; i < n; ++i) a(i, j) -= dot * v[std::size_t(i)];
        }
        for (int i = 0; i < n; ++i) {  // right
            Cplx dot = 0.0;
            for (int j = k + 1; j < n; ++j) dot += a(i, j) * v[std::size_t(j)];
            dot *= 2.0 / vv;
            for (int j = k + 1; j < n; ++j) a(i, j) -= dot * std::conj(v[std::size_t(j)]);
        }
    }
}

// Eigenvalue of [[a,b],[c,d]] closest to d (Wilkinson shift).
inline Cplx wilkinson(Cplx a, Cplx b, Cplx c, Cplx d) {
    Cplx tr2 = (a + d) * 0.5;
    Cplx disc = std::sqrt((a - d) * (a - d) * 0.25 + b * c);
    Cplx l1 = tr2 + disc, l2 = tr2 - disc;
    return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

struct Givens {
    double c;
    Cplx s;
};

// Rotation with [c, s; -conj(s), c] (f,g)^T = (r, 0)^T.
inline Givens make_givens(Cplx f, Cplx g) {
    double af = std::abs(f), ag = std::abs(g);
    if (ag < 1e-300) return {1.0, 0.0};
    double r = std::hypot(af, ag);
    if (af < 1e-300) return {0.0, std::conj(g) / ag};
    Cplx phase = f / af;
    return {af / r, phase * std::conj(g) / r};
}

}  // namespace eig_detail

inline std::vector<Cplx> eigenvalues(CMatrix a) {
    using namespace eig_detail;
    const int n = a.n;
    std::vector<Cplx> out;
    if (n == 0) return out;
    hessenberg(a);
    int m = n - 1;  // active window is rows/cols 0..m
    int iters = 0;
    auto negligible = [&](int i) {
        return std::abs(a(i, i - 1)) <=
               1e-15 * (std::abs(a(i - 1, i - 1)) + std::abs(a(i, i))) + 1e-300;
    };
    while (m >= 0) {
        if (m == 0) {
            out.push_back(a(0, 0));
            --m;
            continue;
        }
        if (negligible(m)) {
            out.push_back(a(m, m));
            --m;
            iters = 0;
            continue;
        }
        if (m == 1 || negligible(m - 1)) {
            // trailing 2x2 block [m-1..m]
            Cplx p = a(m - 1, m - 1), q = a(m - 1, m), r = a(m, m - 1), s = a(m, m);
            Cplx tr2 = (p + s) * 0.5;
            Cplx disc = std::sqrt((p - s) * (p - s) * 0.25 + q * r);
            out.push_back(tr2 + disc);
            out.push_back(tr2 - disc);
            m -= 2;
            iters = 0;
            continue;
        }
        if (++iters > 200) throw std::runtime_error("eigenvalues: QR iteration stalled");
        Cplx shift = wilkinson(a(m - 1, m - 1), a(m - 1, m), a(m, m - 1), a(m, m));
        if (iters % 30 == 0) shift += Cplx(std::abs(a(m, m - 1)), 0.0);  // exceptional
        // find the start of the active unreduced block
        int l = m;
        while (l > 0 && !negligible(l)) --l;
        for (int i = l; i <= m; ++i) a(i, i) -= shift;
        // QR by Givens on the Hessenberg window, then RQ
        std::vector<Givens> rot(std::size_t(m - l));
        for (int i = l; i < m; ++i) {
            Givens g = make_givens(a(i, i), a(i + 1, i));
            rot[std::size_t(i - l)] = g;
            for (int j = l; j <= m; ++j) {
                Cplx t1 = a(i, j), t2 = a(i + 1, j);
                a(i, j) = g.c * t1 + g.s * t2;
                a(i + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
            }
        }
        for (int i = l; i < m; ++i) {
            Givens g = rot[std::size_t(i - l)];
            for (int j = l; j <= m; ++j) {
                Cplx t1 = a(j, i), t2 = a(j, i + 1);
                a(j, i) = g.c * t1 + std::conj(g.s) * t2;
                a(j, i + 1) = -g.s * t1 + g.c * t2;
            }
        }
        for (int i = l; i <= m; ++i) a(i, i) += shift;
    }
    return out;
}

}  // namespace testsupport
