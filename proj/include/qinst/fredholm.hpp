#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "qinst/bspace.hpp"
#include "qinst/qalgebra.hpp"
#include "qinst/ringmat.hpp"

namespace qinst {

/// Truncated basis geometry for the faithful representation on
/// l^2(N) (x) l^2(Z): basis e_{m,n} with 0 <= m <= m_cut, |n| <= n_win,
/// lambda_m = (1 - q0^{2m})^{1/2}.
struct TruncRep {
    double q0 = 0.5;
    int m_cut = 60;
    int n_win = 16;
    std::vector<double> lambda;  // lambda[0..m_cut]

    static TruncRep make(double q0, int m_cut, int n_win);

    int n_span() const noexcept { return 2 * n_win + 1; }
    int dim() const noexcept { return (m_cut + 1) * n_span(); }
    int index(int m, int n) const noexcept { return m * n_span() + (n + n_win); }
};

/// Sparse operator on C^r (x) (truncated basis), row-major adjacency.
class TruncOp {
public:
    TruncOp() = default;
    TruncOp(int blocks, const TruncRep& rep)
        : blocks_(blocks), inner_(rep.dim()), m_cut_(rep.m_cut), n_win_(rep.n_win) {}

    static TruncOp identity(int blocks, const TruncRep& rep);

    int blocks() const noexcept { return blocks_; }
    int dim() const noexcept { return blocks_ * inner_; }

    void add(int row, int col, std::complex<double> v);
    std::complex<double> entry(int row, int col) const;
    std::size_t nnz() const noexcept;

    /// Basis-level accessors (block index, m, n).
    int index(int block, int m, int n) const noexcept {
        return block * inner_ + m * (2 * n_win_ + 1) + (n + n_win_);
    }

    friend TruncOp operator+(const TruncOp& a, const TruncOp& b);
    friend TruncOp operator-(const TruncOp& a, const TruncOp& b);
    friend TruncOp operator*(const TruncOp& a, const TruncOp& b);
    TruncOp operator-() const;
    TruncOp scaled(std::complex<double> s) const;
    TruncOp adjoint() const;

    /// Trace over the truncated space, fixed enumeration order with
    /// compensated summation.
    std::complex<double> trace() const;

    /// [F~, x] where F~ = diag(F,...,F), F e_{m,n} = sign(n) e_{m,n},
    /// sign(0) = +1. Computed entrywise from the sign jump.
    TruncOp commutator_f() const;

    const std::map<int, std::map<int, std::complex<double>>>& rows() const noexcept {
        return rows_;
    }

private:
    int blocks_ = 0;
    int inner_ = 0;
    int m_cut_ = 0;
    int n_win_ = 0;
    std::map<int, std::map<int, std::complex<double>>> rows_;
    int sign_of_row(int row) const noexcept;
    friend TruncOp rep_block(const RingMatrix<HElement>& u, const TruncRep& rep);
};

/// pi(x) on the truncated basis (single block). Coefficients of x are
/// evaluated at rep.q0. Exact on vectors whose m-index stays at least the
/// alpha-degree away from the cutoff.
TruncOp rep_of(const HElement& x, const TruncRep& rep);

/// Block operator for a matrix over the algebra.
TruncOp rep_block(const RingMatrix<HElement>& u, const TruncRep& rep);

/// F as a TruncOp (r = 1), sign(0) = +1.
TruncOp sign_f(const TruncRep& rep);

/// The charge +1 unitary: the bilateral shift e_{0,n} -> e_{0,n-1} on the
/// m = 0 line, identity elsewhere. Pairs opposite to the generator unitary.
TruncOp v_unitary(const TruncRep& rep);

struct PairingResult {
    std::string u_descriptor;
    int n = 0;  // power when u = U^n, 0 otherwise
    int k = 0;
    double q0 = 0;
    int m_cut = 0;
    int n_win = 0;
    double value = 0;
    double error_bound = 0;
    long long nearest_integer = 0;
};

/// Minimal n-window for which the pairing trace of u at level k is exact in
/// the n-direction.
int required_window(const RingMatrix<HElement>& u, int k);

/// Odd Chern pairing (-1)^k 2^{-(2k+1)} Tr((u-1)[F~,u*]([F~,u][F~,u*])^k)
/// over the truncated representation, oriented so the generator unitary
/// pairs to -1. u must be unitary over the algebra (checked symbolically at
/// generic q); u^{-1} is realized as u*. Throws std::invalid_argument for
/// non-unitary input or an insufficient n-window (the message names the
/// required window).
PairingResult odd_pairing(const RingMatrix<HElement>& u, int k, const TruncRep& rep,
                          const std::string& descriptor = "u", int power_label = 0);

/// The raw pairing trace at level k for the generator unitary U; the closed
/// form is (-1)^{k+1} 2^{2k+1}, independent of q0 up to the m-cutoff tail.
double trace_term(int k, const TruncRep& rep);

/// Pairing of the V unitary (HElement-free route), expected +1.
PairingResult v_pairing(int k, const TruncRep& rep);

/// Mapping degree of x -> (x0 I + i sum x_i sigma_i)^n from S^3 to SU(2),
/// by midpoint quadrature of the normalized invariant 3-form pullback on a
/// geodesic-polar grid; derivatives are analytic (product rule on the
/// power), not finite differences. resolution >= 8.
double winding_degree(int n, int resolution);

}  // namespace qinst
