#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qinst/qlaurent.hpp"

namespace qinst {

/// Thrown when a normal form would exceed the configured monomial budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Monomial-count budget shared by all normal-form arithmetic (default 10^6).
std::size_t term_budget() noexcept;
void set_term_budget(std::size_t budget) noexcept;

/// Generators of O(SU_q(2)) as a free *-word alphabet.
enum class Gen : unsigned char { Alpha, AlphaStar, Beta, BetaStar };

/// PBW basis monomial alpha^a beta^b beta*^c.
/// a < 0 encodes (alpha*)^{-a}; b, c >= 0. The unit is (0,0,0).
struct PbwMono {
    int a = 0;
    int b = 0;
    int c = 0;
    auto operator<=>(const PbwMono&) const = default;
};

/// Element of O(SU_q(2)) in PBW normal form:
/// a finite table of PBW monomials with nonzero QLaurent coefficients.
///
/// Defining relations (all products re-normalize through them):
///   alpha beta  = q beta alpha        alpha beta* = q beta* alpha
///   beta beta*  = beta* beta
///   alpha* alpha + beta beta* = 1     alpha alpha* + q^2 beta beta* = 1
class HElement {
public:
    HElement() = default;
    HElement(const QLaurent& c) { if (!c.is_zero()) terms_[PbwMono{}] = c; }  // NOLINT
    HElement(long long c) : HElement(QLaurent(c)) {}                          // NOLINT
    HElement(int c) : HElement(QLaurent(c)) {}                                // NOLINT

    static HElement zero() { return HElement(); }
    static HElement one() { return HElement(1); }
    static HElement generator(Gen g);
    static HElement alpha() { return generator(Gen::Alpha); }
    static HElement alpha_star() { return generator(Gen::AlphaStar); }
    static HElement beta() { return generator(Gen::Beta); }
    static HElement beta_star() { return generator(Gen::BetaStar); }
    static HElement monomial(PbwMono m, QLaurent c);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<PbwMono, QLaurent>& terms() const noexcept { return terms_; }

    friend HElement operator+(const HElement& x, const HElement& y);
    friend HElement operator-(const HElement& x, const HElement& y);
    friend HElement operator*(const HElement& x, const HElement& y);
    HElement operator-() const;
    HElement& operator+=(const HElement& y);
    HElement& operator-=(const HElement& y) { return *this += -y; }
    HElement& operator*=(const HElement& y) { *this = *this * y; return *this; }

    friend HElement operator*(const QLaurent& c, const HElement& x);

    friend bool operator==(const HElement& x, const HElement& y) noexcept {
        return x.terms_ == y.terms_;
    }

    /// Antilinear antihomomorphism; q is fixed (formal real parameter).
    HElement star() const;

    /// The coefficient of the unit monomial, iff no other monomial appears.
    std::optional<QLaurent> scalar_part() const;

    /// Maximal |a|+b+c over stored monomials (0 for the zero element).
    int word_degree() const noexcept;
    /// Maximal b+c over stored monomials.
    int beta_degree() const noexcept;

    std::string to_string(bool unicode = false) const;
    friend std::ostream& operator<<(std::ostream& os, const HElement& x);

private:
    std::map<PbwMono, QLaurent> terms_;
    void add_term(const PbwMono& m, const QLaurent& c);
    friend struct HOps;
};

/// Element of O(SU_q(2)) (x) O(SU_q(2)), both legs in normal form.
class HTensor {
public:
    HTensor() = default;

    static HTensor tensor(const HElement& x, const HElement& y);

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::map<std::pair<PbwMono, PbwMono>, QLaurent>& terms() const noexcept {
        return terms_;
    }

    friend HTensor operator+(const HTensor& x, const HTensor& y);
    friend HTensor operator-(const HTensor& x, const HTensor& y);
    friend HTensor operator*(const HTensor& x, const HTensor& y);  // componentwise legs
    HTensor operator-() const;

    HTensor star() const;  // (* (x) *)

    friend bool operator==(const HTensor& x, const HTensor& y) noexcept {
        return x.terms_ == y.terms_;
    }

    /// (counit (x) id) and (id (x) counit) collapses.
    HElement collapse_left_counit() const;
    HElement collapse_right_counit() const;
    /// (m o (f (x) id)) style collapse: applies f to one leg then multiplies legs.
    HElement collapse_mul_after(HElement (*left_map)(const HElement&),
                                HElement (*right_map)(const HElement&)) const;

    std::string to_string() const;

private:
    std::map<std::pair<PbwMono, PbwMono>, QLaurent> terms_;
    void add_term(const std::pair<PbwMono, PbwMono>& m, const QLaurent& c);
    friend struct HOps;
};

/// One summand of a free *-word expression.
struct FreeTerm {
    QLaurent coeff;
    std::vector<Gen> word;
};

/// Reduces a free *-word combination to its unique PBW normal form.
HElement normal_form(const std::vector<FreeTerm>& expr);

QLaurent counit(const HElement& x);
HTensor coproduct(const HElement& x);
HElement antipode(const HElement& x);

/// Substitutes q -> q0 (exactly) in every coefficient; q0 must be nonzero.
HElement eval_q(const HElement& x, const Rational& q0);

/// Free-function spelling of scalar_part.
inline std::optional<QLaurent> is_scalar(const HElement& x) { return x.scalar_part(); }

/// Exact checks used by the hopf-check command and the property suites.
struct HopfCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};
std::vector<HopfCheck> hopf_property_suite(unsigned associativity_trials, unsigned seed);

}  // namespace qinst
