#include <doctest.h>

#include <random>
#include <stdexcept>

#include "qinst/qalgebra.hpp"
#include "qinst/ringmat.hpp"

using namespace qinst;
using IMat = RingMatrix<long long>;
using HMat = RingMatrix<HElement>;

namespace {

IMat imat2(long long a, long long b, long long c, long long d) {
    IMat m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

IMat random_imat(std::mt19937& rng, int n) {
    std::uniform_int_distribution<long long> d(-3, 3);
    IMat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

// The generator unitary U = [[alpha, -q beta*], [beta, alpha*]].
HMat su2q_u() {
    HMat u(2);
    u(0, 0) = HElement::alpha();
    u(0, 1) = QLaurent::q_power(1, Rational(-1)) * HElement::beta_star();
    u(1, 0) = HElement::beta();
    u(1, 1) = HElement::alpha_star();
    return u;
}

}  // namespace

TEST_CASE("matrix algebra basics") {
    std::mt19937 rng(1);
    IMat x = random_imat(rng, 3);
    CHECK(IMat::identity(3) * x == x);
    CHECK(x * IMat::identity(3) == x);
    CHECK(x.star().star() == x);
    IMat y = random_imat(rng, 3);
    CHECK((x * y).star() == y.star() * x.star());
    CHECK_THROWS_AS((void)(x * random_imat(rng, 2)), std::invalid_argument);
    CHECK_THROWS_AS((void)(x + random_imat(rng, 2)), std::invalid_argument);
}

TEST_CASE("matrix star over a noncommutative star ring") {
    HMat u = su2q_u();
    HMat v = u.star();
    std::mt19937 rng(2);
    CHECK(v.star() == u);
    CHECK((u * v).star() == v.star() * u.star());
}

TEST_CASE("whitehead lift on scalars") {
    // c = d = [1] collapses to the identity
    IMat one(1);
    one(0, 0) = 1;
    auto [C1, D1] = whitehead_lift(one, one);
    CHECK(C1 == IMat::identity(2));
    CHECK(D1 == IMat::identity(2));

    // c = [2], d = [0]: direct block-formula evaluation
    IMat c(1), d(1);
    c(0, 0) = 2;
    d(0, 0) = 0;
    auto [C, D] = whitehead_lift(c, d);
    CHECK(C == imat2(4, -1, 1, 0));
    CHECK(D == imat2(0, 1, -1, 4));
    CHECK(C * D == IMat::identity(2));
    CHECK(D * C == IMat::identity(2));
}

TEST_CASE("whitehead lift is a two-sided inverse pair for random integer matrices") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3;
        IMat c = random_imat(rng, n), d = random_imat(rng, n);
        auto [C, D] = whitehead_lift(c, d);
        CHECK(C * D == IMat::identity(2 * n));
        CHECK(D * C == IMat::identity(2 * n));
    }
}

TEST_CASE("milnor block examples") {
    // d c = c d = 1 collapses to diag(I, 0)
    IMat one(1);
    one(0, 0) = 1;
    IMat Q1 = milnor_block(one, one);
    CHECK(Q1 == imat2(1, 0, 0, 0));

    // c = [2], d = [0]: evaluate blocks, square against the multiplication oracle
    IMat c(1), d(1);
    c(0, 0) = 2;
    d(0, 0) = 0;
    IMat Q = milnor_block(c, d);
    CHECK(Q == imat2(0, 4, 0, 1));
    CHECK(Q * Q == Q);
}

TEST_CASE("milnor block is idempotent and equals C diag(I,0) D") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        int n = (trial % 2) ? 2 : 3;
        IMat c = random_imat(rng, n), d = random_imat(rng, n);
        IMat Q = milnor_block(c, d);
        CHECK(Q * Q == Q);
        auto [C, D] = whitehead_lift(c, d);
        IMat E(2 * n);
        for (int i = 0; i < n; ++i) E(i, i) = 1;
        CHECK(Q == C * E * D);
    }
}

TEST_CASE("milnor block over the quantum group: unitary specialization") {
    // c = U, d = U*: dc = 1 exactly, so Q = diag(I,0) -- the matching condition
    HMat u = su2q_u();
    HMat ustar = u.star();
    CHECK(u * ustar == HMat::identity(2));
    CHECK(ustar * u == HMat::identity(2));
    HMat Q = milnor_block(u, ustar);
    HMat E(4);
    E(0, 0) = HElement::one();
    E(1, 1) = HElement::one();
    CHECK(Q == E);
    CHECK(Q * Q == Q);
}

TEST_CASE("milnor block idempotent over the quantum group with a non-inverse pair") {
    // c = U^2, d deliberately = (U*)^1: dc is not 1, Q is a genuine idempotent
    HMat u = su2q_u();
    HMat c = u * u, d = u.star();
    HMat Q = milnor_block(c, d);
    CHECK(Q * Q == Q);
    CHECK(!(Q == milnor_block(u, u.star())));
}
