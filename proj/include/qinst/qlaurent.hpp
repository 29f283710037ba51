#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qinst/rational.hpp"

namespace qinst {

/// Laurent polynomial in the deformation parameter q with Rational coefficients.
/// Sparse canonical form (ascending exponents, no zero coefficients), so
/// equality is representation identity. q is treated as a formal real
/// parameter (fixed under *).
class QLaurent {
public:
    using Term = std::pair<int, Rational>;

    QLaurent() = default;
    QLaurent(const Rational& c) { if (!c.is_zero()) terms_.emplace_back(0, c); }  // NOLINT
    QLaurent(long long c) : QLaurent(Rational(c)) {}                              // NOLINT
    QLaurent(int c) : QLaurent(Rational(c)) {}                                    // NOLINT

    /// c * q^e
    static QLaurent q_power(int e, Rational c = Rational(1));
    static QLaurent q() { return q_power(1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
    }
    /// Constant value; zero polynomial yields 0.
    Rational constant_value() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    int min_exp() const;  // requires nonzero
    int max_exp() const;

    friend QLaurent operator+(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator-(const QLaurent& a, const QLaurent& b);
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& b);
    QLaurent& operator-=(const QLaurent& b) { return *this += -b; }
    QLaurent& operator*=(const QLaurent& b) { *this = *this * b; return *this; }

    /// Multiplies by q^e.
    QLaurent shifted(int e) const;
    /// Laurent inverse; defined only for monomials.
    QLaurent inverse() const;
    QLaurent pow(int e) const;  // e < 0 requires a monomial

    friend bool operator==(const QLaurent& a, const QLaurent& b) noexcept {
        return a.terms_ == b.terms_;
    }

    /// Exact substitution q -> q0; q0 must be nonzero.
    Rational eval(const Rational& q0) const;
    double eval_double(double q0) const;

    std::string to_string(bool unicode = false) const;
    friend std::ostream& operator<<(std::ostream& os, const QLaurent& v);

private:
    std::vector<Term> terms_;
    void add_term(int e, const Rational& c);
};

}  // namespace qinst
