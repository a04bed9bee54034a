#include <doctest.h>

#include <stdexcept>
#include "wslab/gl11.hpp"
#include "wslab/sl2.hpp"

using namespace wslab;

namespace {

Polynomial c(int e = 1) { return Polynomial::variable(Var::c, e); }
Polynomial h(int e = 1) { return Polynomial::variable(Var::h, e); }

}  // namespace

TEST_SUITE("gl11") {

TEST_CASE("framed values on small diagrams") {
    CHECK(gl11::framed(ChordDiagram()) == Polynomial(1));
    CHECK(gl11::framed(theta()) == c());
    CHECK(gl11::framed(ChordDiagram::parse("1 1 2 2")) == c(2));
    CHECK(gl11::framed(ChordDiagram::parse("1 2 1 2")) == c(2) + h(2));
    CHECK(gl11::framed(ChordDiagram::parse("1 2 3 1 2 3")) ==
          c(3) + Polynomial(3) * c() * h(2));
}

TEST_CASE("deframed values on small diagrams") {
    CHECK(gl11::deframed(ChordDiagram()) == Polynomial(1));
    CHECK(gl11::deframed(theta()).is_zero());
    CHECK(gl11::deframed(ChordDiagram::parse("1 2 1 2")) == h(2));
    CHECK(gl11::deframed(ChordDiagram::parse("1 2 3 1 2 3")).is_zero());
}

TEST_CASE("deframed equals framed at c = 0") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            CHECK(gl11::framed(d).substitute(Var::c, Polynomial()) ==
                  gl11::deframed(d));
}

TEST_CASE("homogeneity: every term of order n has total degree n") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            const Polynomial w = gl11::framed(d);
            for (const auto& [mono, coeff] : w.terms()) {
                CHECK(mono[0] + mono[1] == n);    // powers of c and h
                CHECK(mono[1] % 2 == 0);          // h only in even powers
                CHECK(mono[2] == 0);              // no d variable
            }
            const Polynomial bar = gl11::deframed(d);
            CHECK((bar.is_zero() ||
                   bar == bar.coefficient(Var::h, n) * h(n)));
        }
}

TEST_CASE("every pivot chord gives the same value") {
    for (int n = 1; n <= 3; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            for (int a = 1; a <= n; ++a) {
                CHECK(gl11::framed_with_pivot(d, a) == gl11::framed(d));
                CHECK(gl11::deframed_with_pivot(d, a) == gl11::deframed(d));
            }
}

TEST_CASE("the arc convention drops out") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            CHECK(gl11::framed_via(d, ArcConvention::second_to_first) ==
                  gl11::framed(d));
            CHECK(gl11::deframed_via(d, ArcConvention::second_to_first) ==
                  gl11::deframed(d));
        }
}

TEST_CASE("deframing the framed system recovers the deframed one") {
    WeightFunction general = deframe(gl11::framed_system());
    WeightFunction shortcut = deframe_multiplicative(gl11::framed_system());
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            CHECK(general(d) == gl11::deframed(d));
            CHECK(shortcut(d) == gl11::deframed(d));
        }
}

TEST_CASE("Alexander coefficients") {
    CHECK(gl11::alexander_c(ChordDiagram()) == 1);
    CHECK(gl11::alexander_c(theta()) == 0);
    CHECK(gl11::alexander_c(ChordDiagram::parse("1 2 1 2")) == 1);
    CHECK(gl11::alexander_c(ChordDiagram::parse("1 2 3 1 2 3")) == 0);
    /* deframed is h-homogeneous, so h = 1 just reads off the top coefficient */
    for (const ChordDiagram& d : enumerate_diagrams(4))
        CHECK(Polynomial(gl11::alexander_c(d)) ==
              gl11::deframed(d).coefficient(Var::h, 4));
}

TEST_CASE("weight-function wrappers agree with the direct evaluators") {
    for (const ChordDiagram& d : enumerate_diagrams(3)) {
        CHECK(gl11::framed_system()(d) == gl11::framed(d));
        CHECK(gl11::deframed_system()(d) == gl11::deframed(d));
        CHECK(gl11::alexander_system()(d) == Polynomial(gl11::alexander_c(d)));
    }
}

}  // TEST_SUITE
