#include <doctest.h>

#include <stdexcept>
#include "wslab/sl2.hpp"

using namespace wslab;

namespace {

Polynomial c(int e = 1) { return Polynomial::variable(Var::c, e); }
Polynomial d2() { return Polynomial::variable(Var::d, 2); }

}  // namespace

TEST_SUITE("sl2") {

TEST_CASE("framed values on small diagrams") {
    CHECK(sl2::framed(ChordDiagram()) == Polynomial(1));
    CHECK(sl2::framed(theta()) == c());
    CHECK(sl2::framed(ChordDiagram::parse("1 1 2 2")) == c(2));
    CHECK(sl2::framed(ChordDiagram::parse("1 2 1 2")) == c(2) - Polynomial(2) * c());
    CHECK(sl2::framed(ChordDiagram::parse("1 2 3 1 2 3")) ==
          c(3) - Polynomial(6) * c(2) + Polynomial(8) * c());
}

TEST_CASE("deframed values on small diagrams") {
    CHECK(sl2::deframed(ChordDiagram()) == Polynomial(1));
    CHECK(sl2::deframed(theta()).is_zero());
    CHECK(sl2::deframed(ChordDiagram::parse("1 1 2 2")).is_zero());
    CHECK(sl2::deframed(ChordDiagram::parse("1 2 1 2")) == Polynomial(-2) * c());
    CHECK(sl2::deframed(ChordDiagram::parse("1 2 3 1 2 3")) == Polynomial(8) * c());
}

TEST_CASE("leading framed coefficients count crossings") {
    /* framed(D) = c^n - 2p c^(n-1) + lower order, p = number of crossings */
    for (int n = 1; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            const Polynomial w = sl2::framed(d);
            CHECK(w.coefficient(Var::c, n) == Polynomial(1));
            CHECK(w.coefficient(Var::c, n - 1) ==
                  Polynomial(-2L * d.crossing_pairs()));
        }
}

TEST_CASE("deframed vanishes on isolated chords and matches deframing") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            if (d.has_isolated_chord()) CHECK(sl2::deframed(d).is_zero());
            CHECK(deframe(sl2::framed_system())(d) == sl2::deframed(d));
        }
}

TEST_CASE("every pivot chord gives the same value") {
    for (int n = 1; n <= 3; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            for (int a = 1; a <= n; ++a) {
                CHECK(sl2::framed_with_pivot(d, a) == sl2::framed(d));
                CHECK(sl2::deframed_with_pivot(d, a) == sl2::deframed(d));
            }
}

TEST_CASE("the arc convention drops out") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            CHECK(sl2::framed_via(d, ArcConvention::second_to_first) ==
                  sl2::framed(d));
            CHECK(sl2::deframed_via(d, ArcConvention::second_to_first) ==
                  sl2::deframed(d));
        }
}

TEST_CASE("substituting the Casimir eigenvalue") {
    CHECK(sl2::mm_polynomial(ChordDiagram()) == Polynomial(1));
    CHECK(sl2::mm_polynomial(theta()).is_zero());
    CHECK(sl2::mm_polynomial(ChordDiagram::parse("1 2 1 2")) ==
          Polynomial(1) - d2());
    CHECK(sl2::mm_polynomial(ChordDiagram::parse("1 2 3 1 2 3")) ==
          Polynomial(4) * d2() - Polynomial(4));
    /* only even powers of d can appear */
    for (const ChordDiagram& d : enumerate_diagrams(4)) {
        const Polynomial p = sl2::mm_polynomial(d);
        for (int k = 1; k <= p.degree(Var::d); k += 2)
            CHECK(p.coefficient(Var::d, k).is_zero());
    }
}

TEST_CASE("diagonal coefficients") {
    CHECK(sl2::diagonal_w0(ChordDiagram()) == 1);
    CHECK(sl2::diagonal_w0(theta()) == 0);
    CHECK(sl2::diagonal_w0(ChordDiagram::parse("1 2 1 2")) == -1);
    CHECK(sl2::diagonal_w0(ChordDiagram::parse("1 2 3 1 2 3")) == 0);
}

TEST_CASE("the diagonal recursion reproduces the diagonal coefficients") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            CHECK(sl2::w0_recursive(d) == sl2::diagonal_w0(d));
}

TEST_CASE("line extraction from the deframed polynomial") {
    CHECK(sl2::c_line(ChordDiagram::parse("1 2 1 2"), 0) == -2);
    CHECK(sl2::c_line(ChordDiagram::parse("1 2 1 2"), 1) == 0);  // parity gap
    CHECK(sl2::c_line(ChordDiagram::parse("1 2 1 2"), 2) == 0);
    CHECK(sl2::c_line(ChordDiagram::parse("1 2 3 1 2 3"), 1) == 8);
    CHECK(sl2::c_line(theta(), 1) == 0);
    CHECK(sl2::c_line(ChordDiagram(), 0) == 1);
    /* the lines exhaust the polynomial: summing c^((n-k)/2) c_line terms over
     * k recovers deframed(D) */
    for (const ChordDiagram& d : enumerate_diagrams(4)) {
        Polynomial rebuilt;
        for (int k = 0; k <= 4; ++k) {
            if ((4 - k) % 2 != 0) continue;
            rebuilt += Polynomial(sl2::c_line(d, k)) *
                       Polynomial::variable(Var::c, (4 - k) / 2);
        }
        CHECK(rebuilt == sl2::deframed(d));
    }
}

TEST_CASE("the top-line recursion reproduces line zero") {
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            CHECK(sl2::top_line_recursive(d) == sl2::c_line(d, 0));
}

TEST_CASE("the two-term line recursion reproduces every line") {
    CHECK(sl2::lower_line(ChordDiagram::parse("1 2 1 2"), 2) == 0);
    CHECK(sl2::lower_line(ChordDiagram::parse("1 2 3 1 2 3"), 1) == 8);
    for (int n = 0; n <= 4; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            for (int k = 0; k <= n; ++k) {
                CAPTURE(d.str());
                CAPTURE(k);
                CHECK(sl2::lower_line(d, k) == sl2::c_line(d, k));
            }
}

TEST_CASE("weight-function wrappers agree with the direct evaluators") {
    for (const ChordDiagram& d : enumerate_diagrams(3)) {
        CHECK(sl2::framed_system()(d) == sl2::framed(d));
        CHECK(sl2::deframed_system()(d) == sl2::deframed(d));
        CHECK(sl2::w0_system()(d) == Polynomial(sl2::diagonal_w0(d)));
    }
}

}  // TEST_SUITE
