#include <doctest.h>

#include <stdexcept>

#include "qinst/qlaurent.hpp"

using qinst::QLaurent;
using qinst::Rational;

TEST_CASE("qlaurent arithmetic keeps canonical sparse form") {
    QLaurent q = QLaurent::q();
    QLaurent p = q * q - QLaurent(1);
    CHECK(p.terms().size() == 2);
    CHECK((p - p).is_zero());
    CHECK((p + QLaurent(1)) == q.pow(2));
    CHECK((q * q.inverse()) == QLaurent(1));
    CHECK(q.pow(-3) == QLaurent::q_power(-3));
    CHECK((QLaurent(2) * QLaurent(Rational(1, 2))) == QLaurent(1));
    CHECK(p.min_exp() == 0);
    CHECK(p.max_exp() == 2);
}

TEST_CASE("qlaurent inverse only for monomials") {
    CHECK(QLaurent::q_power(2, Rational(4)).inverse() ==
          QLaurent::q_power(-2, Rational(1, 4)));
    CHECK_THROWS_AS((QLaurent(1) + QLaurent::q()).inverse(), std::domain_error);
    CHECK_THROWS_AS(QLaurent().inverse(), std::domain_error);
}

TEST_CASE("qlaurent exact evaluation") {
    QLaurent p = QLaurent::q_power(-1) + QLaurent::q_power(2, Rational(3)) - QLaurent(2);
    CHECK(p.eval(Rational(1, 2)) == Rational(2) + Rational(3, 4) - Rational(2));
    CHECK(p.eval(Rational(1)) == Rational(2));
    CHECK_THROWS_AS(p.eval(Rational(0)), std::domain_error);
    CHECK(p.eval_double(0.5) == doctest::Approx(0.75));
}

TEST_CASE("qlaurent printing") {
    CHECK(QLaurent().to_string() == "0");
    CHECK(QLaurent(1).to_string() == "1");
    CHECK(QLaurent::q().to_string() == "q");
    CHECK(QLaurent::q_power(-1).to_string() == "q^-1");
    CHECK((QLaurent(1) - QLaurent::q_power(2)).to_string() == "1 - q^2");
    CHECK(QLaurent::q_power(3, Rational(-5, 2)).to_string() == "-5/2*q^3");
    CHECK((QLaurent::q_power(-2) + QLaurent::q_power(1, Rational(2))).to_string() ==
          "q^-2 + 2*q");
}
