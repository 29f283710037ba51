#include "qinst/fredholm.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace qinst {

using Cd = std::complex<double>;

TruncRep TruncRep::make(double q0, int m_cut, int n_win) {
    if (!(q0 > 0.0 && q0 < 1.0))
        throw std::invalid_argument("TruncRep: q0 must lie strictly inside (0,1)");
    if (m_cut < 1 || n_win < 1) throw std::invalid_argument("TruncRep: cutoffs must be >= 1");
    TruncRep rep;
    rep.q0 = q0;
    rep.m_cut = m_cut;
    rep.n_win = n_win;
    rep.lambda.resize(std::size_t(m_cut) + 1);
    for (int m = 0; m <= m_cut; ++m) rep.lambda[std::size_t(m)] = std::sqrt(1.0 - std::pow(q0, 2 * m));
    return rep;
}

TruncOp TruncOp::identity(int blocks, const TruncRep& rep) {
    TruncOp op(blocks, rep);
    for (int i = 0; i < op.dim(); ++i) op.rows_[i][i] = 1.0;
    return op;
}

void TruncOp::add(int row, int col, Cd v) {
    if (v == Cd(0.0)) return;
    Cd& slot = rows_[row][col];
    slot += v;
    if (slot == Cd(0.0)) {
        rows_[row].erase(col);
        if (rows_[row].empty()) rows_.erase(row);
    }
}

Cd TruncOp::entry(int row, int col) const {
    auto it = rows_.find(row);
    if (it == rows_.end()) return 0.0;
    auto jt = it->second.find(col);
    return jt == it->second.end() ? Cd(0.0) : jt->second;
}

std::size_t TruncOp::nnz() const noexcept {
    std::size_t n = 0;
    for (const auto& [r, cols] : rows_) n += cols.size();
    return n;
}

namespace {
void check_geometry(const TruncOp& a, const TruncOp& b) {
    if (a.dim() != b.dim() || a.blocks() != b.blocks())
        throw std::invalid_argument("TruncOp: geometry mismatch");
}
}  // namespace

TruncOp operator+(const TruncOp& a, const TruncOp& b) {
    check_geometry(a, b);
    TruncOp r = a;
    for (const auto& [i, cols] : b.rows_)
        for (const auto& [j, v] : cols) r.add(i, j, v);
    return r;
}

TruncOp operator-(const TruncOp& a, const TruncOp& b) { return a + (-b); }

TruncOp TruncOp::operator-() const { return scaled(-1.0); }

TruncOp TruncOp::scaled(Cd s) const {
    TruncOp r = *this;
    if (s == Cd(0.0)) {
        r.rows_.clear();
        return r;
    }
    for (auto& [i, cols] : r.rows_)
        for (auto& [j, v] : cols) v *= s;
    return r;
}

TruncOp operator*(const TruncOp& a, const TruncOp& b) {
    check_geometry(a, b);
    TruncOp r;
    r.blocks_ = a.blocks_;
    r.inner_ = a.inner_;
    r.m_cut_ = a.m_cut_;
    r.n_win_ = a.n_win_;
    for (const auto& [i, acols] : a.rows_) {
        std::map<int, Cd> out;
        for (const auto& [k, av] : acols) {
            auto bt = b.rows_.find(k);
            if (bt == b.rows_.end()) continue;
            for (const auto& [j, bv] : bt->second) out[j] += av * bv;
        }
        for (auto it = out.begin(); it != out.end();) {
            if (it->second == Cd(0.0))
                it = out.erase(it);
            else
                ++it;
        }
        if (!out.empty()) r.rows_[i] = std::move(out);
    }
    return r;
}

TruncOp TruncOp::adjoint() const {
    TruncOp r = *this;
    r.rows_.clear();
    for (const auto& [i, cols] : rows_)
        for (const auto& [j, v] : cols) r.rows_[j][i] = std::conj(v);
    return r;
}

Cd TruncOp::trace() const {
    // compensated summation in fixed (ascending row) order
    Cd sum = 0.0, comp = 0.0;
    for (const auto& [i, cols] : rows_) {
        auto it = cols.find(i);
        if (it == cols.end()) continue;
        Cd y = it->second - comp;
        Cd t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

int TruncOp::sign_of_row(int row) const noexcept {
    const int n = (row % inner_) % (2 * n_win_ + 1) - n_win_;
    return n >= 0 ? 1 : -1;  // sign(0) = +1
}

TruncOp TruncOp::commutator_f() const {
    TruncOp r = *this;
    r.rows_.clear();
    for (const auto& [i, cols] : rows_) {
        const int si = sign_of_row(i);
        for (const auto& [j, v] : cols) {
            const int d = si - sign_of_row(j);
            if (d != 0) r.rows_[i][j] = double(d) * v;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Representation

TruncOp rep_of(const HElement& x, const TruncRep& rep) {
    RingMatrix<HElement> u(1);
    u(0, 0) = x;
    return rep_block(u, rep);
}

TruncOp rep_block(const RingMatrix<HElement>& u, const TruncRep& rep) {
    const int r = u.dim();
    TruncOp op(r, rep);
    const int span = rep.n_span();
    for (int bi = 0; bi < r; ++bi)
        for (int bj = 0; bj < r; ++bj) {
            for (const auto& [mono, coeff] : u(bi, bj).terms()) {
                const double cv = coeff.eval_double(rep.q0);
                if (cv == 0.0) continue;
                const int nshift = mono.b - mono.c;
                for (int m = 0; m <= rep.m_cut; ++m) {
                    // beta^b beta*^c scale q0^{m(b+c)}; alpha part shifts m
                    double w = std::pow(rep.q0, double(m) * double(mono.b + mono.c));
                    int mout = m;
                    if (mono.a > 0) {
                        if (m < mono.a) continue;  // annihilated through lambda_0
                        for (int i = 0; i < mono.a; ++i) w *= rep.lambda[std::size_t(m - i)];
                        mout = m - mono.a;
                    } else if (mono.a < 0) {
                        const int j = -mono.a;
                        if (m + j > rep.m_cut) continue;  // m-truncation
                        for (int i = 1; i <= j; ++i) w *= rep.lambda[std::size_t(m + i)];
                        mout = m + j;
                    }
                    if (w == 0.0) continue;
                    for (int n = -rep.n_win; n <= rep.n_win; ++n) {
                        const int nout = n + nshift;
                        if (nout < -rep.n_win || nout > rep.n_win) continue;  // n-truncation
                        const int row = bi * rep.dim() + mout * span + (nout + rep.n_win);
                        const int col = bj * rep.dim() + m * span + (n + rep.n_win);
                        op.add(row, col, cv * w);
                    }
                }
            }
        }
    return op;
}

TruncOp sign_f(const TruncRep& rep) {
    TruncOp op(1, rep);
    for (int m = 0; m <= rep.m_cut; ++m)
        for (int n = -rep.n_win; n <= rep.n_win; ++n)
            op.add(op.index(0, m, n), op.index(0, m, n), n >= 0 ? 1.0 : -1.0);
    return op;
}

TruncOp v_unitary(const TruncRep& rep) {
    // bilateral shift along the m = 0 line, identity elsewhere; oriented so
    // that it pairs opposite to the generator unitary (charge +1)
    TruncOp op(1, rep);
    for (int m = 0; m <= rep.m_cut; ++m)
        for (int n = -rep.n_win; n <= rep.n_win; ++n) {
            if (m == 0) {
                if (n - 1 >= -rep.n_win) op.add(op.index(0, 0, n - 1), op.index(0, 0, n), 1.0);
            } else {
                op.add(op.index(0, m, n), op.index(0, m, n), 1.0);
            }
        }
    return op;
}

// ---------------------------------------------------------------------------
// Pairings

int required_window(const RingMatrix<HElement>& u, int k) {
    int deg = 0;
    for (int i = 0; i < u.dim(); ++i)
        for (int j = 0; j < u.dim(); ++j) deg = std::max(deg, u(i, j).beta_degree());
    return 2 * (k + 2) * (deg + 1);
}

namespace {

// Tr((u-1)[F~,u*]([F~,u][F~,u*])^k): the trace whose k = 0,1,2,... values are
// (-1)^{k+1} 2^{2k+1} for the generator unitary. The orientation (which of
// u, u* sits in the left factor) fixes the sign of the whole charge scale;
// this one makes the generator pair to -1 and the charge of p_n come out -n.
PairingResult assemble_pairing(const TruncOp& uop, const TruncOp& uinv, int k,
                               const TruncRep& rep, const std::string& descriptor,
                               int power_label) {
    const TruncOp fu = uop.commutator_f();
    const TruncOp fuinv = uinv.commutator_f();
    TruncOp x = (uop - TruncOp::identity(uop.blocks(), rep)) * fuinv;
    if (k > 0) {
        const TruncOp pair = fu * fuinv;
        for (int i = 0; i < k; ++i) x = x * pair;
    }
    const double raw = x.trace().real();
    PairingResult res;
    res.u_descriptor = descriptor;
    res.n = power_label;
    res.k = k;
    res.q0 = rep.q0;
    res.m_cut = rep.m_cut;
    res.n_win = rep.n_win;
    res.value = (k % 2 == 0 ? 1.0 : -1.0) * std::ldexp(raw, -(2 * k + 1));
    // geometric tail of the q0^{2m(k+1)} decay past the m-cutoff
    res.error_bound = double(uop.blocks()) * std::ldexp(1.0, 2 * k + 1) *
                      std::pow(rep.q0, 2.0 * rep.m_cut) / (1.0 - rep.q0 * rep.q0);
    res.nearest_integer = std::llround(res.value);
    return res;
}

}  // namespace

PairingResult odd_pairing(const RingMatrix<HElement>& u, int k, const TruncRep& rep,
                          const std::string& descriptor, int power_label) {
    if (k < 0) throw std::invalid_argument("odd_pairing: k must be nonnegative");
    const RingMatrix<HElement> ustar = u.star();
    const RingMatrix<HElement> id = RingMatrix<HElement>::identity(u.dim());
    if (!(u * ustar == id) || !(ustar * u == id))
        throw std::invalid_argument("odd_pairing: input is not unitary over the algebra");
    const int need = required_window(u, k);
    if (rep.n_win < need)
        throw std::invalid_argument("odd_pairing: n-window too small, need N >= " +
                                    std::to_string(need));
    return assemble_pairing(rep_block(u, rep), rep_block(ustar, rep), k, rep, descriptor,
                            power_label);
}

double trace_term(int k, const TruncRep& rep) {
    const RingMatrix<HElement> u = su2q_unitary();
    const int need = required_window(u, k);
    if (rep.n_win < need)
        throw std::invalid_argument("trace_term: n-window too small, need N >= " +
                                    std::to_string(need));
    const TruncOp uop = rep_block(u, rep);
    const TruncOp uinv = rep_block(u.star(), rep);
    const TruncOp fu = uop.commutator_f();
    const TruncOp fuinv = uinv.commutator_f();
    TruncOp x = (uop - TruncOp::identity(2, rep)) * fuinv;
    if (k > 0) {
        const TruncOp pair = fu * fuinv;
        for (int i = 0; i < k; ++i) x = x * pair;
    }
    return x.trace().real();
}

PairingResult v_pairing(int k, const TruncRep& rep) {
    if (k < 0) throw std::invalid_argument("v_pairing: k must be nonnegative");
    if (rep.n_win < 2 * (k + 2))
        throw std::invalid_argument("v_pairing: n-window too small, need N >= " +
                                    std::to_string(2 * (k + 2)));
    const TruncOp v = v_unitary(rep);
    return assemble_pairing(v, v.adjoint(), k, rep, "V", 0);
}

// ---------------------------------------------------------------------------
// Classical winding degree

namespace {

struct M2 {
    std::array<Cd, 4> e{};
    static M2 id() { return {{Cd(1), Cd(0), Cd(0), Cd(1)}}; }
    M2 mul(const M2& o) const {
        return {{e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
                 e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]}};
    }
    M2 dagger() const {
        return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}};
    }
    M2 add(const M2& o) const {
        return {{e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2], e[3] + o.e[3]}};
    }
};

Cd tr3(const M2& a, const M2& b, const M2& c) {
    M2 p = a.mul(b).mul(c);
    return p.e[0] + p.e[3];
}

// g = x0 I + i (x1 s1 + x2 s2 + x3 s3) in SU(2) for unit x
M2 su2_point(double x0, double x1, double x2, double x3) {
    return {{Cd(x0, x3), Cd(x2, x1), Cd(-x2, x1), Cd(x0, -x3)}};
}

}  // namespace

double winding_degree(int n, int resolution) {
    if (resolution < 8) throw std::invalid_argument("winding_degree: resolution must be >= 8");
    if (n == 0) return 0.0;
    const int nc = resolution, nt = resolution, np = 2 * resolution;
    const double pi = 3.14159265358979323846;
    const double dchi = pi / nc, dtheta = pi / nt, dphi = 2 * pi / np;
    const int absn = n < 0 ? -n : n;

    double sum = 0.0, comp = 0.0;  // compensated accumulation
    std::vector<M2> pow_g(std::size_t(absn) + 1);
    for (int ic = 0; ic < nc; ++ic) {
        const double chi = (ic + 0.5) * dchi;
        const double sc = std::sin(chi), cc = std::cos(chi);
        for (int it = 0; it < nt; ++it) {
            const double th = (it + 0.5) * dtheta;
            const double st = std::sin(th), ct = std::cos(th);
            for (int ip = 0; ip < np; ++ip) {
                const double ph = (ip + 0.5) * dphi;
                const double sp = std::sin(ph), cp = std::cos(ph);
                // x = (cos chi, sin chi sin th cos ph, sin chi sin th sin ph, sin chi cos th)
                M2 g = su2_point(cc, sc * st * cp, sc * st * sp, sc * ct);
                M2 dg_c = su2_point(-sc, cc * st * cp, cc * st * sp, cc * ct);
                M2 dg_t = su2_point(0, sc * ct * cp, sc * ct * sp, -sc * st);
                M2 dg_p = su2_point(0, -sc * st * sp, sc * st * cp, 0);
                if (n < 0) {
                    g = g.dagger();
                    dg_c = dg_c.dagger();
                    dg_t = dg_t.dagger();
                    dg_p = dg_p.dagger();
                }
                pow_g[0] = M2::id();
                for (int i = 1; i <= absn; ++i) pow_g[std::size_t(i)] = pow_g[std::size_t(i - 1)].mul(g);
                const M2 theta_dag = pow_g[std::size_t(absn)].dagger();
                // product rule on the matrix power
                auto dpow = [&](const M2& dg) {
                    M2 acc{};
                    for (int i = 0; i < absn; ++i)
                        acc = acc.add(pow_g[std::size_t(i)].mul(dg).mul(
                            pow_g[std::size_t(absn - 1 - i)]));
                    return acc;
                };
                const M2 a1 = theta_dag.mul(dpow(dg_c));
                const M2 a2 = theta_dag.mul(dpow(dg_t));
                const M2 a3 = theta_dag.mul(dpow(dg_p));
                const double h = (tr3(a1, a2, a3) - tr3(a1, a3, a2)).real();
                const double y = h - comp;
                const double t = sum + y;
                comp = (t - sum) - y;
                sum = t;
            }
        }
    }
    // 3/(24 pi^2) tr((g^{-1}dg)^3); orientation fixed so the identity map has degree +1
    return sum * dchi * dtheta * dphi / (8.0 * pi * pi);
}

}  // namespace qinst
