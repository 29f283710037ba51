#pragma once

#include <concepts>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qinst {

/// Ring operations for the element type R. The primary template covers value
/// types exposing R::zero(), R::one(), +, *, unary -, == and optionally
/// star(); arithmetic built-ins are specialized below.
template <class R>
struct ring_traits {
    static R zero() { return R::zero(); }
    static R one() { return R::one(); }
    static R add(const R& x, const R& y) { return x + y; }
    static R mul(const R& x, const R& y) { return x * y; }
    static R neg(const R& x) { return -x; }
    static bool eq(const R& x, const R& y) { return x == y; }
    static R star(const R& x) requires requires(const R& v) { { v.star() } -> std::convertible_to<R>; } {
        return x.star();
    }
};

template <>
struct ring_traits<long long> {
    static long long zero() { return 0; }
    static long long one() { return 1; }
    static long long add(long long x, long long y) { return x + y; }
    static long long mul(long long x, long long y) { return x * y; }
    static long long neg(long long x) { return -x; }
    static bool eq(long long x, long long y) { return x == y; }
    static long long star(long long x) { return x; }
};

template <class R>
concept star_ring = requires(const R& x) { ring_traits<R>::star(x); };

/// Square matrix over an abstract ring.
template <class R>
class RingMatrix {
public:
    RingMatrix() : n_(0) {}
    explicit RingMatrix(int n) : n_(n), e_(std::size_t(n) * std::size_t(n), ring_traits<R>::zero()) {
        if (n < 0) throw std::invalid_argument("RingMatrix: negative dimension");
    }

    static RingMatrix identity(int n) {
        RingMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = ring_traits<R>::one();
        return m;
    }
    static RingMatrix scalar(int n, const R& value) {
        RingMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = value;
        return m;
    }

    int dim() const noexcept { return n_; }
    R& operator()(int i, int j) { return e_[std::size_t(i) * std::size_t(n_) + std::size_t(j)]; }
    const R& operator()(int i, int j) const {
        return e_[std::size_t(i) * std::size_t(n_) + std::size_t(j)];
    }

    friend RingMatrix operator+(const RingMatrix& x, const RingMatrix& y) {
        check_dims(x, y);
        RingMatrix r(x.n_);
        for (std::size_t i = 0; i < x.e_.size(); ++i)
            r.e_[i] = ring_traits<R>::add(x.e_[i], y.e_[i]);
        return r;
    }
    friend RingMatrix operator-(const RingMatrix& x, const RingMatrix& y) { return x + (-y); }
    RingMatrix operator-() const {
        RingMatrix r(n_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = ring_traits<R>::neg(e_[i]);
        return r;
    }
    friend RingMatrix operator*(const RingMatrix& x, const RingMatrix& y) {
        check_dims(x, y);
        RingMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int j = 0; j < x.n_; ++j) {
                R acc = ring_traits<R>::zero();
                for (int k = 0; k < x.n_; ++k)
                    acc = ring_traits<R>::add(acc, ring_traits<R>::mul(x(i, k), y(k, j)));
                r(i, j) = acc;
            }
        return r;
    }

    friend bool operator==(const RingMatrix& x, const RingMatrix& y) {
        if (x.n_ != y.n_) return false;
        for (std::size_t i = 0; i < x.e_.size(); ++i)
            if (!ring_traits<R>::eq(x.e_[i], y.e_[i])) return false;
        return true;
    }

    /// Conjugate transpose (entrywise star, indices swapped).
    RingMatrix star() const requires star_ring<R> {
        RingMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = ring_traits<R>::star((*this)(i, j));
        return r;
    }

    RingMatrix pow_u(unsigned e) const {
        RingMatrix base = *this, r = identity(n_);
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Applies a ring map entrywise (a homomorphism gives a matrix-algebra map).
    template <class S, class F>
    RingMatrix<S> map(F&& f) const {
        RingMatrix<S> r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

private:
    int n_;
    std::vector<R> e_;
    static void check_dims(const RingMatrix& x, const RingMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("RingMatrix: dimension mismatch");
    }
};

/// The two block matrices from the Whitehead-lemma factorization of
/// diag(a, a^{-1}) lifted through a surjection, for any lifts c, d:
///   C = [ (2-cd)c   cd-1 ]      D = [ d       1-dc   ]
///       [ 1-dc      d    ]          [ cd-1    (2-cd)c ]
/// C and D are mutually inverse identically in the ring (no hypotheses on
/// c, d), being images of products of elementary matrices.
template <class R>
std::pair<RingMatrix<R>, RingMatrix<R>> whitehead_lift(const RingMatrix<R>& c,
                                                       const RingMatrix<R>& d) {
    if (c.dim() != d.dim()) throw std::invalid_argument("whitehead_lift: dimension mismatch");
    const int n = c.dim();
    const RingMatrix<R> I = RingMatrix<R>::identity(n);
    const RingMatrix<R> two = I + I;
    const RingMatrix<R> top = (two - c * d) * c;  // (2-cd)c, equal to c(2-dc)
    RingMatrix<R> C(2 * n), D(2 * n);
    auto put = [n](RingMatrix<R>& m, int bi, int bj, const RingMatrix<R>& blk) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = blk(i, j);
    };
    put(C, 0, 0, top);
    put(C, 0, 1, c * d - I);
    put(C, 1, 0, I - d * c);
    put(C, 1, 1, d);
    put(D, 0, 0, d);
    put(D, 0, 1, I - d * c);
    put(D, 1, 0, c * d - I);
    put(D, 1, 1, top);
    return {std::move(C), std::move(D)};
}

/// The Bass-Milnor idempotent block matrix
///   Q = [ c(2-dc)d        c(2-dc)(1-dc) ]
///       [ (1-dc)d         (1-dc)^2      ]
/// Q^2 = Q identically in any ring: Q = C diag(I,0) D with D C = I.
template <class R>
RingMatrix<R> milnor_block(const RingMatrix<R>& c, const RingMatrix<R>& d) {
    if (c.dim() != d.dim()) throw std::invalid_argument("milnor_block: dimension mismatch");
    const int n = c.dim();
    const RingMatrix<R> I = RingMatrix<R>::identity(n);
    const RingMatrix<R> two = I + I;
    const RingMatrix<R> dc = d * c;
    const RingMatrix<R> mid = c * (two - dc);
    const RingMatrix<R> one_less = I - dc;
    RingMatrix<R> Q(2 * n);
    auto put = [n](RingMatrix<R>& m, int bi, int bj, const RingMatrix<R>& blk) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(bi * n + i, bj * n + j) = blk(i, j);
    };
    put(Q, 0, 0, mid * d);
    put(Q, 0, 1, mid * one_less);
    put(Q, 1, 0, one_less * d);
    put(Q, 1, 1, one_less * one_less);
    return Q;
}

}  // namespace qinst
