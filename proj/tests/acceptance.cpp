// Acceptance suite: each case prints one PASS/FAIL line and asserts it.
// Tolerances and thresholds are fixed here, not configurable.

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include "qinst/bspace.hpp"
#include "qinst/fredholm.hpp"
#include "qinst/ringmat.hpp"
#include "support/eig.hpp"

using namespace qinst;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int criterion, const char* what, bool pass) {
    std::printf("ACCEPTANCE %d %-52s %s\n", criterion, what, pass ? "PASS" : "FAIL");
    std::fflush(stdout);
}

BMatrix diag1100() {
    BMatrix m(4);
    m(0, 0) = BPoly::one();
    m(1, 1) = BPoly::one();
    return m;
}

}  // namespace

TEST_CASE("criterion 1: symbolic idempotency of p_n, n in [-3,3], generic q") {
    bool pass = true;
    for (int n = -3; n <= 3; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        BMatrix p = instanton_idempotent(n);
        Certificate cert = verify(p, std::nullopt, n);
        double dt = seconds_since(t0);
        bool ok = cert.passed("idempotent") && dt < 60.0;
        std::printf("  p_%-2d idempotent residual zero: %s  (%.1fs)\n", n,
                    cert.passed("idempotent") ? "yes" : "NO", dt);
        CHECK(cert.passed("idempotent"));
        CHECK(dt < 60.0);
        pass = pass && ok;
    }
    report(1, "symbolic idempotency p_n^2 = p_n, n in [-3,3]", pass);
    CHECK(pass);
}

TEST_CASE("criterion 2: locality: p_n constant diag(1,1,0,0) on [0,1/2] and at t=1") {
    bool pass = true;
    const HMatrix expect = diag1100().map<HElement>(
        [](const BPoly& x) { return x.eval(Rational(0)); });
    for (int n = -3; n <= 3; ++n) {
        BMatrix p = instanton_idempotent(n);
        Certificate cert = verify(p, std::nullopt, n);
        bool ok = cert.passed("left_piece_constant") && cert.passed("boundary_scalar");
        for (const Rational& t :
             {Rational(0), Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)}) {
            HMatrix at = p.map<HElement>([&](const BPoly& x) { return x.eval(t); });
            ok = ok && (at == expect);
        }
        CHECK(ok);
        pass = pass && ok;
    }
    report(2, "p_n = diag(1,1,0,0) on [0,1/2] and at t = 1, exactly", pass);
    CHECK(pass);
}

TEST_CASE("criterion 3: trace formula values -2, +8, -32 at q0 = 1/2, M = 60") {
    const double expected[3] = {-2.0, 8.0, -32.0};
    TruncRep rep = TruncRep::make(0.5, 60, 16);
    bool pass = true;
    for (int k = 0; k <= 2; ++k) {
        auto t0 = std::chrono::steady_clock::now();
        double tr = trace_term(k, rep);
        double dt = seconds_since(t0);
        bool ok = std::abs(tr - expected[k]) < 1e-8 && dt < 10.0;
        std::printf("  k=%d trace = %.12f (expect %+g, %.2fs)\n", k, tr, expected[k], dt);
        CHECK(std::abs(tr - expected[k]) < 1e-8);
        CHECK(dt < 10.0);
        pass = pass && ok;
    }
    report(3, "pairing trace equals (-1)^{k+1} 2^{2k+1}, k in {0,1,2}", pass);
    CHECK(pass);
}

TEST_CASE("criterion 4: generator pairings -1 and +1, opposite classes") {
    TruncRep rep = TruncRep::make(0.5, 60, 16);
    PairingResult pu = odd_pairing(su2q_unitary(), 1, rep, "U", 1);
    PairingResult pv = v_pairing(1, rep);
    std::printf("  <U> = %.12f, <V> = %.12f\n", pu.value, pv.value);
    bool pass = std::abs(pu.value + 1.0) < 1e-8 && std::abs(pv.value - 1.0) < 1e-8 &&
                std::abs(pu.value + pv.value) < 1e-8;
    CHECK(std::abs(pu.value + 1.0) < 1e-8);
    CHECK(std::abs(pv.value - 1.0) < 1e-8);
    CHECK(std::abs(pu.value + pv.value) < 1e-8);
    report(4, "generator pairing <U> = -1, <V> = +1, [U] = -[V]", pass);
    CHECK(pass);
}

TEST_CASE("criterion 5: charge additivity and two-resolution stability") {
    bool pass = true;
    for (int n : {-2, -1, 0, 1, 2, 3}) {
        HMatrix u = su2q_unitary_power(n);
        const int window = required_window(u, 2);
        TruncRep rep60 = TruncRep::make(0.5, 60, window);
        TruncRep rep40 = TruncRep::make(0.5, 40, window);
        const double v60 = odd_pairing(u, 1, rep60, "U^n", n).value;
        const double v40 = odd_pairing(u, 1, rep40, "U^n", n).value;
        const double vk0 = odd_pairing(u, 0, rep60, "U^n", n).value;
        const double vk2 = odd_pairing(u, 2, rep60, "U^n", n).value;
        std::printf("  n=%+d: value = %.9f (M=40: %.9f, k=0: %.9f, k=2: %.9f)\n", n, v60, v40,
                    vk0, vk2);
        bool ok = std::abs(v60 + n) < 1e-6 && std::abs(v60 - v40) < 1e-6 &&
                  std::abs(v60 - vk0) < 1e-6 && std::abs(v60 - vk2) < 1e-6;
        CHECK(std::abs(v60 + n) < 1e-6);
        CHECK(std::abs(v60 - v40) < 1e-6);
        CHECK(std::abs(v60 - vk0) < 1e-6);
        CHECK(std::abs(v60 - vk2) < 1e-6);
        pass = pass && ok;
    }
    report(5, "odd_pairing(U^n, k) = -n, stable in k and cutoff", pass);
    CHECK(pass);
}

TEST_CASE("criterion 6: classical winding degree") {
    bool pass = true;
    for (int n = -2; n <= 2; ++n) {
        auto t0 = std::chrono::steady_clock::now();
        double v = winding_degree(n, 32);
        double dt = seconds_since(t0);
        std::printf("  n=%+d: degree = %.6f (%.2fs)\n", n, v, dt);
        bool ok = std::abs(v - n) <= 0.05 && dt < 60.0;
        CHECK(std::abs(v - n) <= 0.05);
        CHECK(dt < 60.0);
        pass = pass && ok;
    }
    for (int n : {1, 2}) {
        double e1 = std::abs(winding_degree(n, 32) - n);
        double e2 = std::abs(winding_degree(n, 64) - n);
        std::printf("  n=%+d: error %.2e -> %.2e on doubled resolution\n", n, e1, e2);
        bool halves = e2 <= 0.5 * e1 + 1e-9 || e2 < 1e-6;
        CHECK(halves);
        pass = pass && halves;
    }
    report(6, "winding_degree(n) = n +/- 0.05; error halves", pass);
    CHECK(pass);
}

TEST_CASE("criterion 7: commutative fiber checks at q = 1") {
    std::mt19937 rng(20240531);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::uniform_int_distribution<int> tnum(0, 48);
    bool pass = true;
    for (int n = -2; n <= 2; ++n) {
        BMatrix p = instanton_idempotent(n);
        double worst_idem = 0, worst_trace = 0, worst_eig = 0;
        for (int s = 0; s < 100; ++s) {
            // uniform-ish random point of S^3 via normalized gaussian-free pairs
            double x1 = unif(rng), x2 = unif(rng), x3 = unif(rng), x4 = unif(rng);
            double r = std::sqrt(x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4);
            if (r < 1e-3) { --s; continue; }
            Cplx a0(x1 / r, x2 / r), b0(x3 / r, x4 / r);
            Rational t(tnum(rng), 48);
            CMatrix m = classical_fiber(p, t, a0, b0);
            CMatrix sq = m.mul(m);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    worst_idem = std::max(worst_idem, std::abs(sq(i, j) - m(i, j)));
            worst_trace = std::max(worst_trace, std::abs(m.trace() - Cplx(2.0)));
            for (Cplx l : testsupport::eigenvalues(m)) {
                double d = std::min(std::abs(l), std::abs(l - Cplx(1.0)));
                worst_eig = std::max(worst_eig, d);
            }
        }
        std::printf("  n=%+d: max |p^2-p| = %.2e, |tr-2| = %.2e, spectral dist = %.2e\n", n,
                    worst_idem, worst_trace, worst_eig);
        bool ok = worst_idem < 1e-10 && worst_trace < 1e-10 && worst_eig < 1e-8;
        CHECK(worst_idem < 1e-10);
        CHECK(worst_trace < 1e-10);
        CHECK(worst_eig < 1e-8);
        pass = pass && ok;
    }
    report(7, "classical fibers: idempotent, trace 2, spectrum {0,1}", pass);
    CHECK(pass);
}

TEST_CASE("criterion 8: exact algebra property suites") {
    auto checks = hopf_property_suite(1000, 1234);
    bool pass = true;
    for (const auto& c : checks) {
        std::printf("  %-24s %s\n", c.name.c_str(), c.pass ? "ok" : "FAILED");
        CHECK(c.pass);
        pass = pass && c.pass;
    }
    report(8, "relation kernel, ring laws, star, Hopf axioms (exact)", pass);
    CHECK(pass);
}

TEST_CASE("criterion 9: ring-generic Whitehead and Milnor invariants") {
    using IMat = RingMatrix<long long>;
    std::mt19937 rng(555);
    std::uniform_int_distribution<long long> d(-3, 3);
    bool pass = true;
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = (trial % 2) ? 2 : 3;
        IMat c(n), dd(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                c(i, j) = d(rng);
                dd(i, j) = d(rng);
            }
        auto [C, D] = whitehead_lift(c, dd);
        IMat Q = milnor_block(c, dd);
        IMat E(2 * n);
        for (int i = 0; i < n; ++i) E(i, i) = 1;
        bool ok = C * D == IMat::identity(2 * n) && D * C == IMat::identity(2 * n) &&
                  Q * Q == Q && Q == C * E * D;
        if (!ok) ++failures;
    }
    std::printf("  1000 trials over 2x2 and 3x3 integer matrices, %d failures\n", failures);
    pass = failures == 0;
    CHECK(failures == 0);
    report(9, "C D = D C = I and Q^2 = Q, 1000 random integer trials", pass);
    CHECK(pass);
}
