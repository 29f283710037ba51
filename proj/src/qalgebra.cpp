#include "qinst/qalgebra.hpp"

#include <array>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <random>
#include <mutex>
#include <shared_mutex>
#include <sstream>

namespace qinst {

namespace {
std::atomic<std::size_t> g_term_budget{1000000};
}

std::size_t term_budget() noexcept { return g_term_budget.load(std::memory_order_relaxed); }
void set_term_budget(std::size_t budget) noexcept {
    g_term_budget.store(budget, std::memory_order_relaxed);
}

HElement HElement::generator(Gen g) {
    switch (g) {
        case Gen::Alpha: return monomial(PbwMono{1, 0, 0}, QLaurent(1));
        case Gen::AlphaStar: return monomial(PbwMono{-1, 0, 0}, QLaurent(1));
        case Gen::Beta: return monomial(PbwMono{0, 1, 0}, QLaurent(1));
        case Gen::BetaStar: return monomial(PbwMono{0, 0, 1}, QLaurent(1));
    }
    return {};
}

HElement HElement::monomial(PbwMono m, QLaurent c) {
    HElement r;
    if (!c.is_zero()) r.terms_[m] = std::move(c);
    return r;
}

void HElement::add_term(const PbwMono& m, const QLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (terms_.size() > term_budget()) {
        throw budget_error("normal form exceeds the term budget of " +
                           std::to_string(term_budget()) + " monomials");
    }
}

struct HOps {
    static void add(HElement& h, const PbwMono& m, const QLaurent& c) { h.add_term(m, c); }
    static void add(HTensor& t, const std::pair<PbwMono, PbwMono>& m, const QLaurent& c) {
        t.add_term(m, c);
    }
};

namespace {

// Contraction structure of alpha^{a1} alpha^{a2} for opposite signs: the
// QLaurent weight of the beta beta* insertion at each contraction depth,
// derived by eliminating one pair at a time via
//   alpha   alpha* = 1 - q^2 beta beta*
//   alpha*  alpha  = 1 -     beta beta*
// and crossing the insertion over the remaining alpha power. Depends only on
// (a1, a2), so it is memoized.
const std::vector<QLaurent>& alpha_contraction(int a1, int a2) {
    static std::map<std::pair<int, int>, std::vector<QLaurent>> cache;
    static std::shared_mutex mx;
    const std::pair<int, int> key{a1, a2};
    {
        std::shared_lock lock(mx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    const int depth = std::min(std::abs(a1), std::abs(a2));
    std::vector<QLaurent> by_delta(std::size_t(depth) + 1);
    by_delta[0] = QLaurent(1);
    if (a1 > 0) {
        const int j = -a2;  // alpha^a1 alpha*^j
        for (int s = 1; s <= depth; ++s) {
            const int y = j - depth + s;
            for (int d = s; d >= 1; --d)
                by_delta[std::size_t(d)] -= by_delta[std::size_t(d - 1)].shifted(2 * y);
        }
    } else {
        const int a = a2;  // alpha*^{-a1} alpha^a
        for (int s = 1; s <= depth; ++s) {
            const int x = a - depth + s;
            for (int d = s; d >= 1; --d)
                by_delta[std::size_t(d)] -= by_delta[std::size_t(d - 1)].shifted(-2 * (x - 1));
        }
    }
    std::unique_lock lock(mx);
    return cache.try_emplace(key, std::move(by_delta)).first->second;
}

// Accumulates coeff * (m1 * m2) into dst, re-normalizing through the
// relations. Moving the beta-block of m1 across the alpha-block of m2
// contributes q^{-a2 (b1+c1)}; same-sign alpha powers concatenate.
void mono_mul_acc(HElement& dst, const PbwMono& m1, const PbwMono& m2, const QLaurent& coeff) {
    const int qshift = -m2.a * (m1.b + m1.c);
    const QLaurent base = qshift == 0 ? coeff : coeff.shifted(qshift);
    const int k = m1.a + m2.a;
    const int b = m1.b + m2.b;
    const int c = m1.c + m2.c;
    if (m1.a == 0 || m2.a == 0 || (m1.a > 0) == (m2.a > 0)) {
        HOps::add(dst, PbwMono{k, b, c}, base);
        return;
    }
    const std::vector<QLaurent>& by_delta = alpha_contraction(m1.a, m2.a);
    for (int d = 0; d < int(by_delta.size()); ++d)
        if (!by_delta[std::size_t(d)].is_zero())
            HOps::add(dst, PbwMono{k, b + d, c + d}, base * by_delta[std::size_t(d)]);
}

}  // namespace

HElement& HElement::operator+=(const HElement& y) {
    for (const auto& [m, c] : y.terms_) add_term(m, c);
    return *this;
}

HElement operator+(const HElement& x, const HElement& y) {
    HElement r = x;
    r += y;
    return r;
}

HElement operator-(const HElement& x, const HElement& y) { return x + (-y); }

HElement HElement::operator-() const {
    HElement r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

HElement operator*(const HElement& x, const HElement& y) {
    HElement r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) mono_mul_acc(r, mx, my, cx * cy);
    return r;
}

HElement operator*(const QLaurent& c, const HElement& x) {
    HElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, cm] : x.terms_) r.add_term(m, c * cm);
    return r;
}

HElement HElement::star() const {
    HElement r;
    for (const auto& [m, c] : terms_)
        r.add_term(PbwMono{-m.a, m.c, m.b}, c.shifted(m.a * (m.b + m.c)));
    return r;
}

std::optional<QLaurent> HElement::scalar_part() const {
    if (terms_.empty()) return QLaurent();
    if (terms_.size() != 1) return std::nullopt;
    const auto& [m, c] = *terms_.begin();
    if (m != PbwMono{}) return std::nullopt;
    return c;
}

int HElement::word_degree() const noexcept {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, std::abs(m.a) + m.b + m.c);
    return d;
}

int HElement::beta_degree() const noexcept {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.b + m.c);
    return d;
}

// ---------------------------------------------------------------------------
// HTensor

void HTensor::add_term(const std::pair<PbwMono, PbwMono>& m, const QLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (terms_.size() > term_budget()) {
        throw budget_error("tensor normal form exceeds the term budget of " +
                           std::to_string(term_budget()) + " monomials");
    }
}

HTensor HTensor::tensor(const HElement& x, const HElement& y) {
    HTensor r;
    for (const auto& [mx, cx] : x.terms())
        for (const auto& [my, cy] : y.terms()) r.add_term({mx, my}, cx * cy);
    return r;
}

HTensor operator+(const HTensor& x, const HTensor& y) {
    HTensor r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

HTensor operator-(const HTensor& x, const HTensor& y) { return x + (-y); }

HTensor HTensor::operator-() const {
    HTensor r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

HTensor operator*(const HTensor& x, const HTensor& y) {
    HTensor r;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            HElement left, right;
            mono_mul_acc(left, mx.first, my.first, QLaurent(1));
            mono_mul_acc(right, mx.second, my.second, cx * cy);
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms()) r.add_term({ml, mr}, cl * cr);
        }
    }
    return r;
}

HTensor HTensor::star() const {
    HTensor r;
    for (const auto& [m, c] : terms_) {
        HElement l = HElement::monomial(m.first, QLaurent(1)).star();
        HElement rr = HElement::monomial(m.second, c).star();
        for (const auto& [ml, cl] : l.terms())
            for (const auto& [mr, cr] : rr.terms()) r.add_term({ml, mr}, cl * cr);
    }
    return r;
}

HElement HTensor::collapse_left_counit() const {
    HElement r;
    for (const auto& [m, c] : terms_)
        if (m.first.b == 0 && m.first.c == 0) HOps::add(r, m.second, c);
    return r;
}

HElement HTensor::collapse_right_counit() const {
    HElement r;
    for (const auto& [m, c] : terms_)
        if (m.second.b == 0 && m.second.c == 0) HOps::add(r, m.first, c);
    return r;
}

HElement HTensor::collapse_mul_after(HElement (*left_map)(const HElement&),
                                     HElement (*right_map)(const HElement&)) const {
    HElement r;
    for (const auto& [m, c] : terms_) {
        HElement l = HElement::monomial(m.first, QLaurent(1));
        HElement rr = HElement::monomial(m.second, QLaurent(1));
        if (left_map) l = left_map(l);
        if (right_map) rr = right_map(rr);
        r += c * (l * rr);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hopf structure

HElement normal_form(const std::vector<FreeTerm>& expr) {
    HElement r;
    for (const auto& t : expr) {
        HElement acc(t.coeff);
        for (Gen g : t.word) acc *= HElement::generator(g);
        r += acc;
    }
    return r;
}

QLaurent counit(const HElement& x) {
    QLaurent r;
    for (const auto& [m, c] : x.terms())
        if (m.b == 0 && m.c == 0) r += c;
    return r;
}

namespace {

const HTensor& delta_alpha() {
    static const HTensor d = HTensor::tensor(HElement::alpha(), HElement::alpha()) -
                             HTensor::tensor(QLaurent::q() * HElement::beta_star(),
                                             HElement::beta());
    return d;
}

const HTensor& delta_beta() {
    static const HTensor d = HTensor::tensor(HElement::beta(), HElement::alpha()) +
                             HTensor::tensor(HElement::alpha_star(), HElement::beta());
    return d;
}

// The comultiplication is a *-map, so the starred generators follow.
const HTensor& delta_alpha_star() {
    static const HTensor d = delta_alpha().star();
    return d;
}

const HTensor& delta_beta_star() {
    static const HTensor d = delta_beta().star();
    return d;
}

}  // namespace

HTensor coproduct(const HElement& x) {
    HTensor r;
    for (const auto& [m, c] : x.terms()) {
        HTensor t = HTensor::tensor(HElement::one(), HElement(c));
        const HTensor& da = m.a >= 0 ? delta_alpha() : delta_alpha_star();
        for (int i = 0; i < std::abs(m.a); ++i) t = t * da;
        for (int i = 0; i < m.b; ++i) t = t * delta_beta();
        for (int i = 0; i < m.c; ++i) t = t * delta_beta_star();
        r = r + t;
    }
    return r;
}

HElement antipode(const HElement& x) {
    // S(alpha) = alpha*, S(alpha*) = alpha, S(beta) = -q beta, S(beta*) = -q^{-1} beta*,
    // extended as an algebra antihomomorphism.
    HElement r;
    for (const auto& [m, c] : x.terms()) {
        HElement acc(c);
        for (int i = 0; i < m.c; ++i)
            acc *= QLaurent::q_power(-1, Rational(-1)) * HElement::beta_star();
        for (int i = 0; i < m.b; ++i) acc *= QLaurent::q_power(1, Rational(-1)) * HElement::beta();
        if (m.a != 0) {
            HElement g = m.a > 0 ? HElement::alpha_star() : HElement::alpha();
            for (int i = 0; i < std::abs(m.a); ++i) acc *= g;
        }
        r += acc;
    }
    return r;
}

HElement eval_q(const HElement& x, const Rational& q0) {
    if (q0.is_zero()) throw std::domain_error("eval_q: q = 0 is a Laurent pole");
    HElement r;
    for (const auto& [m, c] : x.terms()) HOps::add(r, m, QLaurent(c.eval(q0)));
    return r;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

std::string mono_string(const PbwMono& m, bool unicode) {
    std::vector<std::string> parts;
    auto pow_txt = [&](const std::string& g, int e) {
        if (e == 1) return g;
        if (unicode) {
            static const char* sup[10] = {"⁰", "¹", "²", "³", "⁴",
                                          "⁵", "⁶", "⁷", "⁸", "⁹"};
            std::string s = g;
            for (char ch : std::to_string(e)) s += sup[ch - '0'];
            return s;
        }
        return g + "^" + std::to_string(e);
    };
    if (m.a > 0) parts.push_back(pow_txt(unicode ? "α" : "a", m.a));
    if (m.a < 0) parts.push_back(pow_txt(unicode ? "α*" : "A", -m.a));
    if (m.b > 0) parts.push_back(pow_txt(unicode ? "β" : "b", m.b));
    if (m.c > 0) parts.push_back(pow_txt(unicode ? "β*" : "B", m.c));
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += unicode ? "" : "*";
        s += parts[i];
    }
    return s;
}

}  // namespace

std::string HElement::to_string(bool unicode) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string ms = mono_string(m, unicode);
        std::string cs;
        bool composite = c.terms().size() > 1;
        if (composite) {
            cs = "(" + c.to_string(unicode) + ")";
        } else if (ms.empty()) {
            cs = c.to_string(unicode);
        } else if (c == QLaurent(1)) {
            cs = "";
        } else if (c == QLaurent(-1)) {
            cs = "-";
        } else {
            cs = c.to_string(unicode);
        }
        std::string term = cs;
        if (!ms.empty()) {
            if (!cs.empty() && cs != "-") term += unicode ? "" : "*";
            term += ms;
        }
        if (first) {
            os << term;
        } else if (term.size() > 1 && term[0] == '-') {
            os << " - " << term.substr(1);
        } else {
            os << " + " << term;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HElement& x) { return os << x.to_string(); }

std::string HTensor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        std::string l = mono_string(m.first, false), r = mono_string(m.second, false);
        os << "(" << c.to_string() << ")*" << (l.empty() ? "1" : l) << "(x)"
           << (r.empty() ? "1" : r);
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Property suite (exact)

namespace {

HElement id_map(const HElement& x) { return x; }

std::vector<FreeTerm> relation_lhs_minus_rhs(int which) {
    using W = std::vector<Gen>;
    const Gen A = Gen::Alpha, As = Gen::AlphaStar, B = Gen::Beta, Bs = Gen::BetaStar;
    QLaurent one(1), q = QLaurent::q();
    switch (which) {
        case 0: return {{one, W{A, B}}, {-q, W{B, A}}};
        case 1: return {{one, W{A, Bs}}, {-q, W{Bs, A}}};
        case 2: return {{one, W{B, Bs}}, {QLaurent(-1), W{Bs, B}}};
        case 3: return {{one, W{As, A}}, {one, W{B, Bs}}, {QLaurent(-1), W{}}};
        case 4: return {{one, W{A, As}}, {q * q, W{B, Bs}}, {QLaurent(-1), W{}}};
        // star-conjugates of the first two (the rest are self-conjugate)
        case 5: return {{one, W{Bs, As}}, {-q, W{As, Bs}}};
        case 6: return {{one, W{B, As}}, {-q, W{As, B}}};
        default: return {};
    }
}

HElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), apow(-2, 2), bpow(0, 2), qexp(-2, 2),
        numer(-4, 4), denom(1, 3);
    HElement x;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational coeff(numer(rng), denom(rng));
        if (coeff.is_zero()) coeff = Rational(1);
        x += HElement::monomial(PbwMono{apow(rng), bpow(rng), bpow(rng)},
                                QLaurent::q_power(qexp(rng), coeff));
    }
    return x;
}

const std::array<HElement, 4>& generators() {
    static const std::array<HElement, 4> g = {HElement::alpha(), HElement::beta(),
                                              HElement::alpha_star(), HElement::beta_star()};
    return g;
}

using Key3 = std::array<PbwMono, 3>;
using Tensor3 = std::map<Key3, QLaurent>;

void add3(Tensor3& t, const Key3& k, const QLaurent& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

Tensor3 delta_on_leg(const HTensor& t, bool left_leg) {
    Tensor3 r;
    for (const auto& [m, c] : t.terms()) {
        HTensor d = coproduct(HElement::monomial(left_leg ? m.first : m.second, QLaurent(1)));
        for (const auto& [dm, dc] : d.terms()) {
            Key3 k = left_leg ? Key3{dm.first, dm.second, m.second}
                              : Key3{m.first, dm.first, dm.second};
            add3(r, k, c * dc);
        }
    }
    return r;
}

}  // namespace

std::vector<HopfCheck> hopf_property_suite(unsigned associativity_trials, unsigned seed) {
    std::vector<HopfCheck> out;
    auto push = [&](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };

    // Relation kernel through the free-word reducer.
    bool relations_ok = true;
    std::string rel_detail;
    for (int i = 0; i < 7; ++i) {
        HElement nf = normal_form(relation_lhs_minus_rhs(i));
        if (!nf.is_zero()) {
            relations_ok = false;
            rel_detail += "relation " + std::to_string(i) + " residual " + nf.to_string() + "; ";
        }
    }
    push("relation_kernel", relations_ok, relations_ok ? "7 rewrite identities" : rel_detail);

    // Counit / antipode / star axioms on the generators.
    bool counit_ok = true, antipode_ok = true, starcompat_ok = true, coassoc_ok = true;
    for (const HElement& g : generators()) {
        HTensor d = coproduct(g);
        if (d.collapse_left_counit() != g || d.collapse_right_counit() != g) counit_ok = false;
        HElement eps1 = HElement(counit(g));
        if (d.collapse_mul_after(&antipode, &id_map) != eps1 ||
            d.collapse_mul_after(&id_map, &antipode) != eps1)
            antipode_ok = false;
        if (d.star() != coproduct(g.star())) starcompat_ok = false;
        if (delta_on_leg(d, true) != delta_on_leg(d, false)) coassoc_ok = false;
    }
    push("counit_axiom", counit_ok, "(eps(x)id)delta = id = (id(x)eps)delta on generators");
    push("antipode_axiom", antipode_ok, "m(S(x)id)delta = eps(.)1 = m(id(x)S)delta on generators");
    push("star_coproduct_compat", starcompat_ok, "(*(x)*)delta = delta* on generators");
    push("coassociativity", coassoc_ok, "(delta(x)id)delta = (id(x)delta)delta on generators");

    // Randomized exact ring laws.
    std::mt19937 rng(seed);
    bool assoc_ok = true, distrib_ok = true, star_antihom_ok = true, star_antipode_ok = true,
         counit_mult_ok = true;
    for (unsigned i = 0; i < associativity_trials; ++i) {
        HElement x = random_element(rng), y = random_element(rng), z = random_element(rng);
        if ((x * y) * z != x * (y * z)) assoc_ok = false;
        if (x * (y + z) != x * y + x * z) distrib_ok = false;
        if ((x * y).star() != y.star() * x.star()) star_antihom_ok = false;
        if (x.star().star() != x) star_antihom_ok = false;
        if (antipode(antipode(x).star()).star() != x) star_antipode_ok = false;
        if (counit(x * y) != counit(x) * counit(y)) counit_mult_ok = false;
    }
    std::string trials = std::to_string(associativity_trials) + " random triples";
    push("associativity", assoc_ok, trials);
    push("distributivity", distrib_ok, trials);
    push("star_antihomomorphism", star_antihom_ok, trials);
    push("star_antipode_involutive", star_antipode_ok, "*S*S = id, " + trials);
    push("counit_multiplicative", counit_mult_ok, trials);

    // Comultiplication is an algebra map; tensor products are quadratic in
    // term count, so a smaller randomized sample is used.
    bool coproduct_mult_ok = true;
    const unsigned delta_trials = std::min(associativity_trials, 25u);
    for (unsigned i = 0; i < delta_trials; ++i) {
        HElement x = random_element(rng), y = random_element(rng);
        if (coproduct(x * y) != coproduct(x) * coproduct(y)) coproduct_mult_ok = false;
    }
    push("coproduct_multiplicative", coproduct_mult_ok,
         std::to_string(delta_trials) + " random pairs");
    return out;
}

}  // namespace qinst
