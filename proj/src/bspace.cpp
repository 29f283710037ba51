#include "qinst/bspace.hpp"

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qinst {

namespace {
const Rational kHalf(1, 2);
}

BPoly::BPoly(const HElement& constant) {
    if (!constant.is_zero()) {
        left_ = {constant};
        right_ = {constant};
    }
}

void BPoly::trim(std::vector<HElement>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

namespace {
HElement eval_piece(const std::vector<HElement>& coeffs, const Rational& t) {
    HElement acc;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = QLaurent(t) * acc;
        acc += coeffs[i];
    }
    return acc;
}
}  // namespace

void BPoly::check_continuity() const {
    // left(1/2) == right(1/2), compared after scaling by 2^deg so the powers
    // of 1/2 become integer weights (avoids rational arithmetic on the products)
    const std::size_t deg = std::max(left_.size(), right_.size());
    HElement diff;
    QLaurent w(1);
    for (std::size_t i = deg; i-- > 0;) {
        if (i < left_.size()) diff += w * left_[i];
        if (i < right_.size()) diff -= w * right_[i];
        w *= QLaurent(2);
    }
    if (!diff.is_zero()) throw std::invalid_argument("BPoly: pieces disagree at t = 1/2");
}

BPoly BPoly::pieces(std::vector<HElement> left, std::vector<HElement> right) {
    BPoly p;
    p.left_ = std::move(left);
    p.right_ = std::move(right);
    trim(p.left_);
    trim(p.right_);
    p.check_continuity();
    return p;
}

BPoly BPoly::bar_alpha() {
    // (2t-1) + 2(1-t) alpha on [1/2,1]; constant alpha below
    HElement a = HElement::alpha();
    std::vector<HElement> right = {HElement(-1) + QLaurent(2) * a,
                                   HElement(2) - QLaurent(2) * a};
    return pieces({a}, std::move(right));
}

BPoly BPoly::bar_beta() {
    // 2(1-t) beta on [1/2,1]; constant beta below
    HElement b = HElement::beta();
    std::vector<HElement> right = {QLaurent(2) * b, QLaurent(-2) * b};
    return pieces({b}, std::move(right));
}

BPoly operator+(const BPoly& x, const BPoly& y) {
    BPoly r;
    auto add = [](const std::vector<HElement>& a, const std::vector<HElement>& b) {
        std::vector<HElement> out(std::max(a.size(), b.size()));
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (i < a.size()) out[i] += a[i];
            if (i < b.size()) out[i] += b[i];
        }
        BPoly::trim(out);
        return out;
    };
    r.left_ = add(x.left_, y.left_);
    r.right_ = add(x.right_, y.right_);
    return r;
}

BPoly operator-(const BPoly& x, const BPoly& y) { return x + (-y); }

BPoly BPoly::operator-() const {
    BPoly r;
    r.left_.reserve(left_.size());
    r.right_.reserve(right_.size());
    for (const auto& c : left_) r.left_.push_back(-c);
    for (const auto& c : right_) r.right_.push_back(-c);
    return r;
}

BPoly operator*(const BPoly& x, const BPoly& y) {
    auto conv = [](const std::vector<HElement>& a, const std::vector<HElement>& b) {
        std::vector<HElement> out;
        if (a.empty() || b.empty()) return out;
        out.resize(a.size() + b.size() - 1);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        BPoly::trim(out);
        return out;
    };
    BPoly r;
    r.left_ = conv(x.left_, y.left_);
    r.right_ = conv(x.right_, y.right_);
    r.check_continuity();
    return r;
}

bool operator==(const BPoly& x, const BPoly& y) noexcept {
    return x.left_ == y.left_ && x.right_ == y.right_;
}

BPoly BPoly::star() const {
    BPoly r;
    r.left_.reserve(left_.size());
    r.right_.reserve(right_.size());
    for (const auto& c : left_) r.left_.push_back(c.star());
    for (const auto& c : right_) r.right_.push_back(c.star());
    return r;
}

HElement BPoly::eval(const Rational& t) const {
    if (t < Rational(0) || t > Rational(1))
        throw std::domain_error("BPoly: evaluation outside [0,1]");
    return t <= kHalf ? eval_piece(left_, t) : eval_piece(right_, t);
}

bool BPoly::left_piece_constant() const { return left_.size() <= 1; }

bool BPoly::boundary_scalars() const {
    return eval(Rational(0)).scalar_part().has_value() &&
           eval(Rational(1)).scalar_part().has_value();
}

std::string BPoly::to_string(bool unicode) const {
    auto piece = [&](const std::vector<HElement>& v) {
        if (v.empty()) return std::string("0");
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << "; ";
            os << v[i].to_string(unicode);
        }
        return os.str();
    };
    return "L[" + piece(left_) + "] R[" + piece(right_) + "]";
}

// ---------------------------------------------------------------------------
// Lifts and instanton idempotents

HMatrix su2q_unitary() {
    HMatrix u(2);
    u(0, 0) = HElement::alpha();
    u(0, 1) = QLaurent::q_power(1, Rational(-1)) * HElement::beta_star();
    u(1, 0) = HElement::beta();
    u(1, 1) = HElement::alpha_star();
    return u;
}

HMatrix su2q_unitary_power(int n) {
    HMatrix u = su2q_unitary();
    if (n >= 0) return u.pow_u(unsigned(n));
    return u.star().pow_u(unsigned(-n));
}

std::pair<BMatrix, BMatrix> make_lifts(int n) {
    BMatrix c(2), d(2);
    const BPoly oa = BPoly::bar_alpha(), ob = BPoly::bar_beta();
    const BPoly oas = BPoly::bar_alpha_star(), obs = BPoly::bar_beta_star();
    const BPoly mq = BPoly(HElement(QLaurent::q_power(1, Rational(-1))));
    c(0, 0) = oa;
    c(0, 1) = mq * obs;
    c(1, 0) = ob;
    c(1, 1) = oas;
    d(0, 0) = oas;
    d(0, 1) = obs;
    d(1, 0) = mq * ob;
    d(1, 1) = oa;
    unsigned k = unsigned(n < 0 ? -n : n);
    return {c.pow_u(k), d.pow_u(k)};
}

BMatrix instanton_idempotent(int n) {
    try {
        auto [c, d] = make_lifts(n);
        return n >= 0 ? milnor_block(c, d) : milnor_block(d, c);
    } catch (const budget_error& e) {
        throw budget_error("instanton idempotent for n = " + std::to_string(n) +
                           " (t-degree up to " + std::to_string(4 * std::abs(n)) +
                           "): " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Verification

namespace {

// Entrywise-parallel product: all values are immutable and the cells are
// independent, so workers pull cell indices from a counter and the result is
// deterministic. Exceptions (e.g. the term budget) propagate to the caller.
BMatrix parallel_mul(const BMatrix& x, const BMatrix& y) {
    const int n = x.dim();
    BMatrix r(n);
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(), unsigned(n * n)));
    if (workers == 1) return x * y;
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int idx; (idx = next.fetch_add(1)) < n * n;) {
                    const int i = idx / n, j = idx % n;
                    BPoly acc;
                    for (int k = 0; k < n; ++k) acc = acc + x(i, k) * y(k, j);
                    r(i, j) = std::move(acc);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return r;
}

BMatrix specialize_q(const BMatrix& p, const Rational& q0) {
    return p.map<BPoly>([&](const BPoly& x) {
        std::vector<HElement> l, r;
        l.reserve(x.left_coeffs().size());
        r.reserve(x.right_coeffs().size());
        for (const auto& c : x.left_coeffs()) l.push_back(eval_q(c, q0));
        for (const auto& c : x.right_coeffs()) r.push_back(eval_q(c, q0));
        return BPoly::pieces(std::move(l), std::move(r));
    });
}

CertCheck residual_check(const std::string& name, const BMatrix& residual) {
    CertCheck c;
    c.name = name;
    c.pass = true;
    for (int i = 0; i < residual.dim(); ++i)
        for (int j = 0; j < residual.dim(); ++j)
            if (!residual(i, j).is_zero()) {
                c.pass = false;
                c.residuals.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ") " +
                                      residual(i, j).to_string());
            }
    return c;
}

}  // namespace

bool Certificate::passed(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c.pass;
    return false;
}

Certificate verify(const BMatrix& p, const std::optional<Rational>& q0, int n_label) {
    Certificate cert;
    cert.n = n_label;
    cert.q_mode = q0 ? q0->to_string() : "generic";
    // Products and adjoints re-normalize through the q-deformed relations, so
    // they are always computed generically; a rational q specializes the
    // residuals afterwards (substitution is a homomorphism, so this is the
    // residual in the specialized algebra).
    BMatrix idem = parallel_mul(p, p) - p;
    BMatrix star = p.star() - p;
    BMatrix m = p;
    if (q0) {
        idem = specialize_q(idem, *q0);
        star = specialize_q(star, *q0);
        m = specialize_q(p, *q0);
    }

    cert.checks.push_back(residual_check("idempotent", idem));
    cert.checks.push_back(residual_check("star_invariant", star));

    CertCheck boundary{"boundary_scalar", true, {}};
    CertCheck constant{"left_piece_constant", true, {}};
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            const BPoly& x = m(i, j);
            if (!x.boundary_scalars()) {
                boundary.pass = false;
                boundary.residuals.push_back("(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") t=0: " + x.eval(Rational(0)).to_string() +
                                             " t=1: " + x.eval(Rational(1)).to_string());
            }
            if (!x.left_piece_constant()) {
                constant.pass = false;
                constant.residuals.push_back("(" + std::to_string(i) + "," + std::to_string(j) +
                                             ") " + x.to_string());
            }
        }
    cert.checks.push_back(std::move(boundary));
    cert.checks.push_back(std::move(constant));

    cert.entries.reserve(std::size_t(m.dim()) * std::size_t(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) cert.entries.push_back(m(i, j).to_string());
    return cert;
}

// ---------------------------------------------------------------------------
// Classical fiber

CMatrix CMatrix::mul(const CMatrix& o) const {
    CMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cplx acc = 0.0;
            for (int k = 0; k < n; ++k) acc += (*this)(i, k) * o(k, j);
            r(i, j) = acc;
        }
    return r;
}

Cplx CMatrix::trace() const {
    Cplx t = 0.0;
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

CMatrix classical_fiber(const BMatrix& p, const Rational& t0, Cplx alpha0, Cplx beta0) {
    const double radius = std::norm(alpha0) + std::norm(beta0);
    if (std::abs(radius - 1.0) > 1e-12)
        throw std::domain_error("classical_fiber: (alpha0, beta0) is not on the unit 3-sphere");
    CMatrix r(p.dim());
    for (int i = 0; i < p.dim(); ++i)
        for (int j = 0; j < p.dim(); ++j) {
            HElement at_t = eval_q(p(i, j).eval(t0), Rational(1));
            Cplx v = 0.0;
            for (const auto& [m, coeff] : at_t.terms()) {
                Cplx w = coeff.constant_value().to_double();
                Cplx apow = m.a >= 0 ? std::pow(alpha0, m.a) : std::pow(std::conj(alpha0), -m.a);
                w *= apow * std::pow(beta0, m.b) * std::pow(std::conj(beta0), m.c);
                v += w;
            }
            r(i, j) = v;
        }
    return r;
}

}  // namespace qinst
