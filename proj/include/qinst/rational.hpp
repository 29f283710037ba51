#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qinst/bigint.hpp"

namespace qinst {

/// Exact rational number over BigInt. Always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT
    Rational(int v) : num_(v), den_(1) {}        // NOLINT
    Rational(BigInt n, BigInt d);
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    /// Parses "p", "-p", or "p/q".
    static Rational from_string(std::string_view s);

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_integer() const noexcept { return den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }

    /// *this += a * b; integer-only operands avoid all temporaries.
    void fused_add_mul(const Rational& a, const Rational& b) {
        if (den_.is_one() && a.den_.is_one() && b.den_.is_one())
            num_.fused_add_mul(a.num_, b.num_);
        else
            *this += a * b;
    }

    Rational inverse() const;
    Rational pow(int e) const;

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string to_string() const;
    double to_double() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace qinst
