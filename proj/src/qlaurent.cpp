#include "qinst/qlaurent.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qinst {

QLaurent QLaurent::q_power(int e, Rational c) {
    QLaurent r;
    if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
    return r;
}

Rational QLaurent::constant_value() const {
    for (const auto& [e, c] : terms_) {
        if (e == 0) return c;
        if (e > 0) break;
    }
    return Rational(0);
}

int QLaurent::min_exp() const {
    if (terms_.empty()) throw std::logic_error("QLaurent: min_exp of zero");
    return terms_.front().first;
}

int QLaurent::max_exp() const {
    if (terms_.empty()) throw std::logic_error("QLaurent: max_exp of zero");
    return terms_.back().first;
}

void QLaurent::add_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, int exp) { return t.first < exp; });
    if (it != terms_.end() && it->first == e) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else {
        terms_.emplace(it, e, c);
    }
}

QLaurent& QLaurent::operator+=(const QLaurent& b) {
    if (b.terms_.empty()) return *this;
    if (terms_.empty()) { terms_ = b.terms_; return *this; }
    if (terms_.size() == b.terms_.size()) {
        // accumulation chains usually hit identical supports; add in place
        bool same = true;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].first != b.terms_[i].first) { same = false; break; }
        if (same) {
            bool zeros = false;
            for (std::size_t i = 0; i < terms_.size(); ++i) {
                terms_[i].second += b.terms_[i].second;
                zeros |= terms_[i].second.is_zero();
            }
            if (zeros)
                std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
            return *this;
        }
    }
    if (b.terms_.size() == 1) { add_term(b.terms_[0].first, b.terms_[0].second); return *this; }
    std::vector<Term> merged;
    merged.reserve(terms_.size() + b.terms_.size());
    auto ia = terms_.begin(), ea = terms_.end();
    auto ib = b.terms_.begin(), eb = b.terms_.end();
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) {
            merged.push_back(std::move(*ia++));
        } else if (ib->first < ia->first) {
            merged.push_back(*ib++);
        } else {
            Rational s = ia->second + ib->second;
            if (!s.is_zero()) merged.emplace_back(ia->first, std::move(s));
            ++ia;
            ++ib;
        }
    }
    merged.insert(merged.end(), std::make_move_iterator(ia), std::make_move_iterator(ea));
    merged.insert(merged.end(), ib, eb);
    terms_ = std::move(merged);
    return *this;
}

QLaurent operator+(const QLaurent& a, const QLaurent& b) {
    QLaurent r = a;
    r += b;
    return r;
}

QLaurent operator-(const QLaurent& a, const QLaurent& b) { return a + (-b); }

QLaurent QLaurent::operator-() const {
    QLaurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, -c);
    return r;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    QLaurent r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (a.terms_.size() == 1) {
        const auto& [ea, ca] = a.terms_.front();
        r.terms_.reserve(b.terms_.size());
        for (const auto& [eb, cb] : b.terms_) {
            Rational p = ca * cb;
            if (!p.is_zero()) r.terms_.emplace_back(ea + eb, std::move(p));
        }
        return r;
    }
    const int lo = a.terms_.front().first + b.terms_.front().first;
    const int hi = a.terms_.back().first + b.terms_.back().first;
    std::vector<Rational> dense(std::size_t(hi - lo) + 1);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            dense[std::size_t(ea + eb - lo)].fused_add_mul(ca, cb);
    for (int e = lo; e <= hi; ++e) {
        Rational& c = dense[std::size_t(e - lo)];
        if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
    }
    return r;
}

QLaurent QLaurent::shifted(int e) const {
    QLaurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [ee, c] : terms_) r.terms_.emplace_back(ee + e, c);
    return r;
}

QLaurent QLaurent::inverse() const {
    if (!is_monomial()) throw std::domain_error("QLaurent: inverse requires a monomial");
    const auto& [e, c] = terms_.front();
    return q_power(-e, c.inverse());
}

QLaurent QLaurent::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    QLaurent r(1), base = *this;
    unsigned u = unsigned(e);
    while (u) {
        if (u & 1) r *= base;
        base *= base;
        u >>= 1;
    }
    return r;
}

Rational QLaurent::eval(const Rational& q0) const {
    if (q0.is_zero()) throw std::domain_error("QLaurent: q = 0 is a Laurent pole");
    Rational r(0);
    for (const auto& [e, c] : terms_) r += c * q0.pow(e);
    return r;
}

double QLaurent::eval_double(double q0) const {
    double r = 0.0;
    for (const auto& [e, c] : terms_) r += c.to_double() * std::pow(q0, e);
    return r;
}

namespace {

std::string superscript(int e) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string s = e < 0 ? "⁻" : "";
    std::string d = std::to_string(e < 0 ? -e : e);
    for (char ch : d) s += digits[ch - '0'];
    return s;
}

}  // namespace

std::string QLaurent::to_string(bool unicode) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        if (e == 0) {
            os << a.to_string();
        } else {
            if (!a.is_one()) os << a.to_string() << "*";
            os << "q";
            if (e != 1) os << (unicode ? superscript(e) : "^" + std::to_string(e));
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QLaurent& v) { return os << v.to_string(); }

}  // namespace qinst
