#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qinst/fredholm.hpp"

using namespace qinst;

namespace {
const TruncRep kRep = TruncRep::make(0.5, 40, 12);
}

TEST_CASE("truncated representation geometry") {
    CHECK(kRep.lambda[0] == 0.0);
    for (int m = 1; m <= kRep.m_cut; ++m) {
        // strictly increasing toward 1; saturates at 1.0 once q0^{2m} underflows an ulp
        CHECK(kRep.lambda[std::size_t(m)] >= kRep.lambda[std::size_t(m - 1)]);
        if (kRep.lambda[std::size_t(m)] < 1.0)
            CHECK(kRep.lambda[std::size_t(m)] > kRep.lambda[std::size_t(m - 1)]);
        CHECK(kRep.lambda[std::size_t(m)] <= 1.0);
    }
    CHECK(kRep.lambda[1] > 0.0);
    CHECK(kRep.lambda[10] < 1.0);
    CHECK_THROWS_AS(TruncRep::make(1.0, 10, 10), std::invalid_argument);
    CHECK_THROWS_AS(TruncRep::make(0.0, 10, 10), std::invalid_argument);
}

TEST_CASE("generator actions on basis vectors") {
    TruncOp a = rep_of(HElement::alpha(), kRep);
    TruncOp as = rep_of(HElement::alpha_star(), kRep);
    TruncOp b = rep_of(HElement::beta(), kRep);
    // pi(alpha) e_{m,n} = lambda_m e_{m-1,n}
    CHECK(a.entry(a.index(0, 2, 3), a.index(0, 3, 3)).real() ==
          doctest::Approx(kRep.lambda[3]).epsilon(1e-15));
    CHECK(a.entry(a.index(0, 0, 0), a.index(0, 0, 0)) == 0.0);  // lambda_0 = 0
    // pi(alpha*) e_{m,n} = lambda_{m+1} e_{m+1,n}
    CHECK(as.entry(as.index(0, 4, -2), as.index(0, 3, -2)).real() ==
          doctest::Approx(kRep.lambda[4]).epsilon(1e-15));
    // pi(beta) e_{m,n} = q^m e_{m,n+1}
    CHECK(b.entry(b.index(0, 3, 1), b.index(0, 3, 0)).real() == doctest::Approx(0.125).epsilon(1e-15));
    // identity and linearity
    CHECK(rep_of(HElement::one(), kRep).entry(0, 0) == 1.0);
    TruncOp sum = rep_of(HElement::alpha() + HElement::beta(), kRep);
    CHECK(sum.entry(a.index(0, 2, 3), a.index(0, 3, 3)).real() ==
          doctest::Approx(kRep.lambda[3]).epsilon(1e-15));
}

TEST_CASE("beta* beta is diagonal with entries q^{2m}") {
    TruncOp op = rep_of(HElement::beta_star() * HElement::beta(), kRep);
    for (int m = 0; m <= 5; ++m)
        CHECK(op.entry(op.index(0, m, 1), op.index(0, m, 1)).real() ==
              doctest::Approx(std::pow(0.5, 2 * m)).epsilon(1e-14));
}

TEST_CASE("representation satisfies the relations away from the cutoff") {
    auto rel_norm = [&](const HElement& lhs, const HElement& rhs) {
        TruncOp d = rep_of(lhs, kRep) - rep_of(rhs, kRep);
        // check columns with m <= m_cut - 2 (truncation-interior exactness)
        double worst = 0;
        for (const auto& [i, cols] : d.rows())
            for (const auto& [j, v] : cols) {
                int m_col = (j % kRep.dim()) / kRep.n_span();
                if (m_col <= kRep.m_cut - 2) worst = std::max(worst, std::abs(v));
            }
        return worst;
    };
    HElement al = HElement::alpha(), as = HElement::alpha_star(), be = HElement::beta(),
             bs = HElement::beta_star();
    QLaurent q = QLaurent::q();
    CHECK(rel_norm(al * be, q * (be * al)) < 1e-14);
    CHECK(rel_norm(al * bs, q * (bs * al)) < 1e-14);
    CHECK(rel_norm(be * bs, bs * be) < 1e-14);
    CHECK(rel_norm(as * al + be * bs, HElement::one()) < 1e-14);
    CHECK(rel_norm(al * as + (q * q) * (be * bs), HElement::one()) < 1e-14);
}

TEST_CASE("commutator with F has the expected support") {
    TruncOp b = rep_of(HElement::beta(), kRep);
    TruncOp fb = b.commutator_f();
    // [F, beta] e_{m,-1} = 2 q^m e_{m,0}, zero elsewhere
    for (int m = 0; m <= 4; ++m)
        CHECK(fb.entry(fb.index(0, m, 0), fb.index(0, m, -1)).real() ==
              doctest::Approx(2 * std::pow(0.5, m)).epsilon(1e-14));
    for (const auto& [i, cols] : fb.rows())
        for (const auto& [j, v] : cols) {
            int n_col = (j % kRep.dim()) % kRep.n_span() - kRep.n_win;
            CHECK(n_col == -1);
        }
    // [F, beta* beta] = 0 and [F, 1] = 0
    CHECK(rep_of(HElement::beta_star() * HElement::beta(), kRep).commutator_f().nnz() == 0);
    CHECK(rep_of(HElement::one(), kRep).commutator_f().nnz() == 0);
}

TEST_CASE("trace locality bound") {
    // the F-commutator support sits inside |n| <= beta-degree + 1
    HElement x = HElement::beta() * HElement::beta() * HElement::alpha() +
                 HElement::beta_star() * HElement::alpha_star();
    TruncOp fx = rep_of(x, kRep).commutator_f();
    const int bound = x.beta_degree() + 1;
    for (const auto& [i, cols] : fx.rows())
        for (const auto& [j, v] : cols) {
            int n_row = (i % kRep.dim()) % kRep.n_span() - kRep.n_win;
            int n_col = (j % kRep.dim()) % kRep.n_span() - kRep.n_win;
            CHECK(std::abs(n_row) <= bound);
            CHECK(std::abs(n_col) <= bound);
        }
}

TEST_CASE("trace formula matches the closed form") {
    TruncRep rep = TruncRep::make(0.5, 60, 16);
    CHECK(trace_term(0, rep) == doctest::Approx(-2.0).epsilon(1e-10));
    CHECK(trace_term(1, rep) == doctest::Approx(8.0).epsilon(1e-10));
    CHECK(trace_term(2, rep) == doctest::Approx(-32.0).epsilon(1e-10));
    // q0-independence of the closed form
    TruncRep rep2 = TruncRep::make(0.3, 60, 16);
    CHECK(trace_term(1, rep2) == doctest::Approx(8.0).epsilon(1e-10));
}

TEST_CASE("generator pairing values") {
    TruncRep rep = TruncRep::make(0.5, 60, 16);
    for (int k = 0; k <= 2; ++k) {
        PairingResult pu = odd_pairing(su2q_unitary(), k, rep, "U", 1);
        CHECK(pu.value == doctest::Approx(-1.0).epsilon(1e-9));
        CHECK(pu.nearest_integer == -1);
        PairingResult pv = v_pairing(k, rep);
        CHECK(pv.value == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(pu.value == doctest::Approx(-pv.value).epsilon(1e-9));
    }
}

TEST_CASE("identity pairs to zero") {
    TruncRep rep = TruncRep::make(0.5, 30, 10);
    PairingResult p = odd_pairing(HMatrix::identity(2), 1, rep, "I", 0);
    CHECK(p.value == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("pairing rejects bad input") {
    TruncRep rep = TruncRep::make(0.5, 30, 10);
    HMatrix not_unitary(2);
    not_unitary(0, 0) = HElement::alpha();
    not_unitary(1, 1) = HElement::alpha();
    CHECK_THROWS_AS(odd_pairing(not_unitary, 1, rep), std::invalid_argument);
    // window too small for U^2 at k = 2: beta-degree 2 gives 2*(2+2)*(2+1) = 24
    CHECK_THROWS_WITH_AS(odd_pairing(su2q_unitary_power(2), 2, rep),
                         doctest::Contains("need N >= 24"), std::invalid_argument);
}

TEST_CASE("sign operator is the diagonal n-sign with sign(0) = +1") {
    TruncOp f = sign_f(kRep);
    CHECK(f.entry(f.index(0, 2, 0), f.index(0, 2, 0)) == 1.0);
    CHECK(f.entry(f.index(0, 2, 5), f.index(0, 2, 5)) == 1.0);
    CHECK(f.entry(f.index(0, 2, -5), f.index(0, 2, -5)) == -1.0);
    CHECK(f.nnz() == std::size_t(kRep.dim()));
    // squares to the identity
    TruncOp sq = f * f;
    CHECK(sq.nnz() == std::size_t(kRep.dim()));
    CHECK(sq.entry(3, 3) == 1.0);
}

TEST_CASE("v unitary action and unitarity on the window interior") {
    TruncOp v = v_unitary(kRep);
    CHECK(v.entry(v.index(0, 0, 2), v.index(0, 0, 3)) == 1.0);
    CHECK(v.entry(v.index(0, 2, 3), v.index(0, 2, 3)) == 1.0);
    TruncOp prod = v.adjoint() * v;
    for (int m = 0; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n)
            CHECK(prod.entry(prod.index(0, m, n), prod.index(0, m, n)) == 1.0);
}

TEST_CASE("charge additivity across powers, k and resolution stability") {
    for (int n : {-2, -1, 0, 1, 2, 3}) {
        CAPTURE(n);
        HMatrix u = su2q_unitary_power(n);
        TruncRep rep40 = TruncRep::make(0.5, 40, required_window(u, 2));
        TruncRep rep60 = TruncRep::make(0.5, 60, required_window(u, 2));
        double v1 = odd_pairing(u, 1, rep60, "U^n", n).value;
        CHECK(v1 == doctest::Approx(double(-n)).epsilon(1e-9));
        CHECK(odd_pairing(u, 0, rep60, "U^n", n).value == doctest::Approx(v1).epsilon(1e-9));
        CHECK(odd_pairing(u, 2, rep60, "U^n", n).value == doctest::Approx(v1).epsilon(1e-9));
        CHECK(odd_pairing(u, 1, rep40, "U^n", n).value == doctest::Approx(v1).epsilon(1e-8));
    }
}

TEST_CASE("winding degree integrates to the power") {
    for (int n = -2; n <= 2; ++n) {
        CAPTURE(n);
        CHECK(std::abs(winding_degree(n, 24) - n) < 0.05);
    }
    CHECK_THROWS_AS(winding_degree(1, 4), std::invalid_argument);
}

TEST_CASE("winding degree error at least halves when resolution doubles") {
    for (int n : {1, 2}) {
        double e1 = std::abs(winding_degree(n, 16) - n);
        double e2 = std::abs(winding_degree(n, 32) - n);
        CHECK((e2 <= 0.55 * e1 || e2 < 1e-6));
    }
}
