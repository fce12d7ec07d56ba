#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace chowcalc;

namespace {
ParamPolynomial s() { return ParamPolynomial::parameter("s"); }
}

TEST_CASE("rational parsing and canonical rendering") {
    CHECK(parse_rational("3/2") == Rational(3) / 2);
    CHECK(parse_rational("-1/2") == Rational(-1) / 2);
    CHECK(parse_rational("6/4") == Rational(3) / 2);
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(6) / -4) == "-3/2");
    CHECK(to_string(Rational(14) / 7) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("1/ 2"), Error);
}

TEST_CASE("polynomial arithmetic is exact") {
    ParamPolynomial p = ParamPolynomial(1) + ParamPolynomial(2) * s();
    ParamPolynomial q = ParamPolynomial(Rational(-1) / 2) + s();
    CHECK((p * q).to_string() == "-1/2 + 2*s^2");
    CHECK((p * (q + ParamPolynomial(1))).to_string() == "1/2 + 2*s + 2*s^2");
    CHECK((p - p).is_zero());
    CHECK(p + q == q + p);
    CHECK((p * q) * p == p * (q * p));
    CHECK(p * (q + ParamPolynomial(3)) == p * q + p * ParamPolynomial(3));
}

TEST_CASE("no zero terms are ever stored") {
    testsupport::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        ParamPolynomial a = rng.poly({"s", "u"});
        ParamPolynomial b = rng.poly({"s", "u"});
        ParamPolynomial diff = a + b - b - a;
        CHECK(diff.is_zero());
        CHECK(diff.terms().empty());
        ParamPolynomial prod = a * b;
        for (const auto& [mono, coeff] : prod.terms())
            CHECK(coeff != 0);
    }
}

TEST_CASE("substitution is an evaluation homomorphism") {
    testsupport::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        ParamPolynomial a = rng.poly({"s"});
        ParamPolynomial b = rng.poly({"s"});
        Rational q = rng.rational();
        CHECK((a * b).substitute("s", q) == a.substitute("s", q) * b.substitute("s", q));
        CHECK((a + b).substitute("s", q) == a.substitute("s", q) + b.substitute("s", q));
    }
    ParamPolynomial p = ParamPolynomial(2) + ParamPolynomial(14) * s();
    CHECK(p.substitute("s", Rational(-1) / 2).constant_value() == Rational(-5));
    CHECK(!p.substitute("s", 0).depends_on("s"));
}

TEST_CASE("rendering uses ascending powers and explicit signs") {
    CHECK(ParamPolynomial().to_string() == "0");
    CHECK(ParamPolynomial(-15).to_string() == "-15");
    CHECK((ParamPolynomial(1) + ParamPolynomial(2) * s()).to_string() == "1 + 2*s");
    CHECK((ParamPolynomial(-2) - ParamPolynomial(4) * s()).to_string() == "-2 - 4*s");
    CHECK((s() * s()).to_string() == "s^2");
    CHECK((ParamPolynomial(Rational(3) / 2) * s()).to_string() == "3/2*s");
    ParamPolynomial multi = ParamPolynomial::parameter("u") + s();
    CHECK(multi.to_string() == "u + s");
}

TEST_CASE("exact division") {
    ParamPolynomial p = (ParamPolynomial(1) + s()) * (ParamPolynomial(2) - s());
    auto q = p.divide_exact(ParamPolynomial(1) + s());
    REQUIRE(q.has_value());
    CHECK(*q == ParamPolynomial(2) - s());
    CHECK_FALSE((ParamPolynomial(1) + s() * s()).divide_exact(s()).has_value());
    CHECK_FALSE(p.divide_exact(ParamPolynomial()).has_value());

    testsupport::Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        ParamPolynomial a = rng.poly({"s", "u"});
        ParamPolynomial b = rng.poly({"s", "u"});
        if (b.is_zero())
            continue;
        auto quotient = (a * b).divide_exact(b);
        REQUIRE(quotient.has_value());
        CHECK(*quotient == a);
    }
}

TEST_CASE("linear solve used by the adjunction checkpoint") {
    // x + (1 + 2s) == 0  ->  x = -1 - 2s
    ParamPolynomial eq = ParamPolynomial::parameter("x") + ParamPolynomial(1) +
                         ParamPolynomial(2) * s();
    CHECK(chowcalc::detail::solve_linear(eq, "x") == ParamPolynomial(-1) - ParamPolynomial(2) * s());
    // 2x - 6 == 0 -> 3
    ParamPolynomial eq2 = ParamPolynomial(2) * ParamPolynomial::parameter("x") - ParamPolynomial(6);
    CHECK(chowcalc::detail::solve_linear(eq2, "x") == ParamPolynomial(3));
    ParamPolynomial quadratic = ParamPolynomial::parameter("x") * ParamPolynomial::parameter("x");
    CHECK_THROWS_AS(chowcalc::detail::solve_linear(quadratic, "x"), Error);
}
