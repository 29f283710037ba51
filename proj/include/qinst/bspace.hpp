#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qinst/qalgebra.hpp"
#include "qinst/ringmat.hpp"

namespace qinst {

/// Element of the gluing algebra: a pair of polynomials in t with O(SU_q(2))
/// coefficients, one valid on [0,1/2] and one on [1/2,1], agreeing exactly at
/// t = 1/2. Elements of the 4-sphere algebra B are additionally scalar at
/// t = 0 and t = 1; that membership is a queried predicate, not a structural
/// invariant, since the clutching lifts themselves live outside B.
class BPoly {
public:
    BPoly() = default;
    BPoly(const HElement& constant);  // NOLINT
    BPoly(long long c) : BPoly(HElement(c)) {}
    BPoly(int c) : BPoly(HElement(c)) {}

    /// Builds from explicit coefficient lists (index = power of t).
    /// Throws std::invalid_argument unless left(1/2) == right(1/2) exactly.
    static BPoly pieces(std::vector<HElement> left, std::vector<HElement> right);

    static BPoly zero() { return BPoly(); }
    static BPoly one() { return BPoly(HElement::one()); }

    /// The clutching lifts: on [1/2,1] they interpolate the generators to
    /// scalars, below 1/2 they are constant generators.
    static BPoly bar_alpha();
    static BPoly bar_beta();
    static BPoly bar_alpha_star() { return bar_alpha().star(); }
    static BPoly bar_beta_star() { return bar_beta().star(); }

    bool is_zero() const noexcept { return left_.empty() && right_.empty(); }
    const std::vector<HElement>& left_coeffs() const noexcept { return left_; }
    const std::vector<HElement>& right_coeffs() const noexcept { return right_; }

    friend BPoly operator+(const BPoly& x, const BPoly& y);
    friend BPoly operator-(const BPoly& x, const BPoly& y);
    friend BPoly operator*(const BPoly& x, const BPoly& y);
    BPoly operator-() const;
    friend bool operator==(const BPoly& x, const BPoly& y) noexcept;

    BPoly star() const;

    /// Exact evaluation at rational t in [0,1]; throws std::domain_error
    /// outside. Both pieces agree at 1/2.
    HElement eval(const Rational& t) const;

    /// True when the [0,1/2] piece is a constant polynomial.
    bool left_piece_constant() const;
    /// True when eval(0) and eval(1) are scalars (Def of the 4-sphere algebra).
    bool boundary_scalars() const;

    std::string to_string(bool unicode = false) const;

private:
    // coefficient lists for powers of t; trimmed, invariant left(1/2)==right(1/2)
    std::vector<HElement> left_, right_;
    static void trim(std::vector<HElement>& v);
    void check_continuity() const;
};

using BMatrix = RingMatrix<BPoly>;
using HMatrix = RingMatrix<HElement>;

/// The generator unitary U = [[alpha, -q beta*],[beta, alpha*]] over H.
HMatrix su2q_unitary();
/// U^n for any integer n (negative powers via the adjoint).
HMatrix su2q_unitary_power(int n);

/// Lifts of U^{|n|} and U^{-|n|} to 2x2 matrices over the gluing algebra:
/// below t = 1/2 they evaluate to U^{|n|}, U^{-|n|}; at t = 1 to the identity.
std::pair<BMatrix, BMatrix> make_lifts(int n);

/// The charge -n instanton idempotent p_n in M_4 of the 4-sphere algebra:
/// the Bass-Milnor block matrix of the lifted powers (roles of the two lifts
/// swapped for n < 0). p_n^2 = p_n identically at generic q.
BMatrix instanton_idempotent(int n);

/// One named check inside a certificate.
struct CertCheck {
    std::string name;
    bool pass = false;
    // canonical text of nonzero residual entries (empty when pass)
    std::vector<std::string> residuals;
};

/// Exact verification record for an idempotent candidate over the 4-sphere.
struct Certificate {
    int n = 0;
    std::string q_mode;  // "generic" or the rational value as text
    std::vector<CertCheck> checks;  // idempotent, star_invariant, boundary_scalar,
                                    // left_piece_constant (fixed order)
    std::vector<std::string> entries;  // row-major canonical text of the matrix

    bool passed(const std::string& name) const;
};

/// Computes exact residuals p^2 - p and p* - p plus the boundary and
/// left-piece checks, at generic q or with q specialized to a rational.
Certificate verify(const BMatrix& p, const std::optional<Rational>& q0, int n_label = 0);

using Cplx = std::complex<double>;

/// Numeric square matrix used for the commutative (q = 1) fiber checks.
struct CMatrix {
    int n = 0;
    std::vector<Cplx> e;
    explicit CMatrix(int dim = 0) : n(dim), e(std::size_t(dim) * std::size_t(dim)) {}
    Cplx& operator()(int i, int j) { return e[std::size_t(i) * std::size_t(n) + std::size_t(j)]; }
    const Cplx& operator()(int i, int j) const {
        return e[std::size_t(i) * std::size_t(n) + std::size_t(j)];
    }
    CMatrix mul(const CMatrix& o) const;
    Cplx trace() const;
};

/// Evaluates p at q = 1, t = t0 and the classical SU(2) point
/// (alpha0, beta0) with |alpha0|^2 + |beta0|^2 = 1 (tolerance 1e-12;
/// violations throw std::domain_error).
CMatrix classical_fiber(const BMatrix& p, const Rational& t0, Cplx alpha0, Cplx beta0);

}  // namespace qinst
