#include <doctest.h>

#include <stdexcept>
#include "wslab/polynomial.hpp"

using namespace wslab;

namespace {

Polynomial c(int e = 1) { return Polynomial::variable(Var::c, e); }
Polynomial h(int e = 1) { return Polynomial::variable(Var::h, e); }
Polynomial d(int e = 1) { return Polynomial::variable(Var::d, e); }

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("ring operations are exact") {
    Polynomial p = c(2) - Polynomial(2) * c();  // c^2 - 2c
    CHECK(p + Polynomial(2) * c() == c(2));
    CHECK(p - p == Polynomial());
    CHECK((p * Polynomial()).is_zero());
    CHECK(-(-p) == p);
    CHECK(Polynomial(3) * Polynomial(make_rational(1, 3)) == Polynomial(1));
}

TEST_CASE("substitution expands c -> (d^2-1)/2") {
    Polynomial minus_2c = Polynomial(-2) * c();
    Polynomial casimir =
        Polynomial::term(make_rational(1, 2), 0, 0, 2) + Polynomial(make_rational(-1, 2));
    CHECK(minus_2c.substitute(Var::c, casimir) == Polynomial(1) - d(2));
    /* substitution into an unused variable is the identity */
    CHECK(minus_2c.substitute(Var::h, Polynomial(7)) == minus_2c);
}

TEST_CASE("coefficient extraction") {
    Polynomial p = c(2) - Polynomial(2) * c();
    CHECK(p.coefficient(Var::c, 1) == Polynomial(-2));
    CHECK(p.coefficient(Var::c, 2) == Polynomial(1));
    CHECK(p.coefficient(Var::c, 0).is_zero());
    Polynomial mixed = c(2) * h() + Polynomial(3) * h();
    CHECK(mixed.coefficient(Var::h, 1) == c(2) + Polynomial(3));
}

TEST_CASE("constant handling") {
    CHECK(Polynomial(5).constant_value() == 5);
    CHECK(Polynomial().is_constant());
    CHECK(Polynomial().constant_value() == 0);
    CHECK_THROWS_AS((void)c().constant_value(), std::domain_error);
    CHECK(c().constant_term() == 0);
    CHECK((c() + Polynomial(4)).constant_term() == 4);
}

TEST_CASE("degrees") {
    Polynomial p = c(3) * h(2) + d(1);
    CHECK(p.degree(Var::c) == 3);
    CHECK(p.degree(Var::h) == 2);
    CHECK(p.degree(Var::d) == 1);
    CHECK(p.total_degree() == 5);
    CHECK(Polynomial().degree(Var::c) == -1);
}

TEST_CASE("large exact coefficients") {
    Polynomial p = (c() + Polynomial(1)).pow(20);
    CHECK(p.coefficient(Var::c, 10).constant_value() == 184756);  // C(20,10)
    CHECK(p.coefficient(Var::c, 20).constant_value() == 1);
    CHECK(p.substitute(Var::c, Polynomial(1)).constant_value() ==
          make_rational("1048576"));  // 2^20
}

TEST_CASE("printing matches the documented format") {
    CHECK(Polynomial().str() == "0");
    CHECK((c(2) - Polynomial(2) * c()).str() == "c^2 - 2*c");
    CHECK((c(3) - Polynomial(6) * c(2) + Polynomial(8) * c()).str() ==
          "c^3 - 6*c^2 + 8*c");
    CHECK((Polynomial(1) - d(2)).str() == "-d^2 + 1");
    CHECK((c(2) + h(2)).str() == "c^2 + h^2");
    CHECK((Polynomial(make_rational(1, 2)) * c()).str() == "1/2*c");
    CHECK((Polynomial(make_rational(-3, 2)) * c() * h() * d()).str() == "-3/2*c*h*d");
}

TEST_CASE("canonical JSON round trip") {
    Polynomial p = c(2) - Polynomial(2) * c();
    CHECK(p.to_json() ==
          R"({"vars":["c","h","d"],"terms":[{"exp":[2,0,0],"num":"1","den":"1"},)"
          R"({"exp":[1,0,0],"num":"-2","den":"1"}]})");
    CHECK(Polynomial::from_json(p.to_json()) == p);
    Polynomial q = Polynomial(make_rational(-7, 3)) * h(2) * d(4) + Polynomial(1);
    CHECK(Polynomial::from_json(q.to_json()) == q);
    CHECK(Polynomial::from_json(Polynomial().to_json()).is_zero());
}

TEST_CASE("JSON rejects malformed input") {
    CHECK_THROWS_AS((void)Polynomial::from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS((void)Polynomial::from_json(R"({"terms":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        (void)Polynomial::from_json(R"({"vars":["x"],"terms":[]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        (void)Polynomial::from_json(
            R"({"vars":["c","h","d"],"terms":[{"exp":[-1,0,0],"num":"1","den":"1"}]})"),
        std::invalid_argument);
}

}  // TEST_SUITE
