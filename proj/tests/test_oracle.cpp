#include <doctest.h>

#include <stdexcept>
#include "wslab/oracle.hpp"
#include "wslab/sl2.hpp"

using namespace wslab;

namespace {

Rational half_casimir(int d) { return Rational(d * d - 1) / 2; }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("sl2 structure data") {
    const LieAlgebraData g = sl2_data();
    CHECK(g.dim == 3);
    CHECK((g.parity == std::vector<int>{0, 0, 0}));
    /* trace form in the (e, f, h) basis */
    CHECK(g.metric[0][1] == 1);
    CHECK(g.metric[1][0] == 1);
    CHECK(g.metric[2][2] == 2);
    CHECK(g.metric[0][0] == 0);
    CHECK(g.metric[0][2] == 0);
    /* [e,f] = h against the form: <[e,f],h> = <h,h> = 2 */
    CHECK(g.f_lower[0][1][2] == 2);
    CHECK(g.f_lower[1][0][2] == -2);
    /* [h,e] = 2e: <[h,e],f> = 2<e,f> = 2 */
    CHECK(g.f_lower[2][0][1] == 2);
    CHECK(g.f_upper[0][1][2] == 1);  // [e,f] = 1*h
}

TEST_CASE("gl11 structure data") {
    const LieAlgebraData g = gl11_data();
    CHECK(g.dim == 4);
    CHECK((g.parity == std::vector<int>{0, 0, 1, 1}));
    /* supertrace form in the (h, g, q, r) basis */
    CHECK(g.metric[0][0] == 0);
    CHECK(g.metric[0][1] == 1);
    CHECK(g.metric[1][0] == 1);
    CHECK(g.metric[1][1] == 1);
    CHECK(g.metric[2][3] == 1);
    CHECK(g.metric[3][2] == -1);  // odd-odd: super-antisymmetric block
    /* h = I is central */
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) CHECK(g.f_lower[0][j][k] == 0);
    /* [g,q] = q, [q,r] = q r + r q = h */
    CHECK(g.f_upper[1][2][2] == 1);
    CHECK(g.f_upper[2][3][0] == 1);
}

TEST_CASE("a perturbed metric fails validation invariants") {
    const LieAlgebraData g = with_metric_entry(sl2_data(), 2, 2, Rational(3));
    CHECK(g.metric[2][2] == 3);
    /* inverse was recomputed */
    CHECK(g.metric_inv[2][2] == Rational(1, 3));
    CHECK_FALSE(check_lagrange(g));
}

TEST_CASE("irreducible sl2 representations") {
    CHECK_THROWS_AS((void)irrep_sl2(0), std::invalid_argument);

    const Representation two = irrep_sl2(2);
    CHECK((two.rho[0] == RatMat{{0, 1}, {0, 0}}));   // e
    CHECK((two.rho[1] == RatMat{{0, 0}, {1, 0}}));   // f
    CHECK((two.rho[2] == RatMat{{1, 0}, {0, -1}}));  // h

    /* Casimir ef + fe + h^2/2 acts as ((d^2-1)/2) Id */
    for (int d = 1; d <= 6; ++d) {
        const Representation rep = irrep_sl2(d);
        const RatMat ef = rat_mat_mul(rep.rho[0], rep.rho[1]);
        const RatMat fe = rat_mat_mul(rep.rho[1], rep.rho[0]);
        const RatMat hh = rat_mat_mul(rep.rho[2], rep.rho[2]);
        RatMat casimir = rat_mat_identity(d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                casimir[i][j] =
                    ef[i][j] + fe[i][j] + hh[i][j] / 2 -
                    (i == j ? half_casimir(d) : Rational(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) CHECK(casimir[i][j] == 0);
    }
}

TEST_CASE("trace weights of small diagrams") {
    CHECK(trace_weight(ChordDiagram(), irrep_sl2(2)) == 2);  // trace of Id
    CHECK(trace_weight(ChordDiagram(), irrep_sl2(5)) == 5);
    CHECK(trace_weight(theta(), irrep_sl2(2)) == 3);
    CHECK(trace_weight(theta(), irrep_sl2(3)) == 12);
    CHECK(trace_weight(ChordDiagram::parse("1 2 1 2"), irrep_sl2(2)) ==
          Rational(-3, 2));
}

TEST_CASE("trace weights are rotation invariant") {
    const Representation rep = irrep_sl2(3);
    const ChordDiagram d = ChordDiagram::parse("1 2 3 1 3 2");
    const Rational base = trace_weight(d, rep);
    for (int k = 0; k < 6; ++k) CHECK(trace_weight(d.rotated(k), rep) == base);
}

TEST_CASE("trace weights match the recursion at the Casimir eigenvalue") {
    for (int n = 0; n <= 3; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n)) {
            const Polynomial w = sl2::framed(d);
            for (int dim = 2; dim <= 4; ++dim) {
                CAPTURE(d.str());
                CAPTURE(dim);
                const Polynomial at =
                    w.substitute(Var::c, Polynomial(half_casimir(dim)));
                CHECK(trace_weight(d, irrep_sl2(dim)) ==
                      Rational(dim) * at.constant_value());
            }
        }
}

TEST_CASE("interpolation recovers the framed polynomial") {
    CHECK(interpolate_central(ChordDiagram()) == Polynomial(1));
    CHECK(interpolate_central(theta()) == Polynomial::variable(Var::c));
    CHECK(interpolate_central(ChordDiagram::parse("1 2 1 2")) ==
          sl2::framed(ChordDiagram::parse("1 2 1 2")));
    for (int n = 0; n <= 3; ++n)
        for (const ChordDiagram& d : enumerate_diagrams(n))
            CHECK(interpolate_central(d) == sl2::framed(d));
}

TEST_CASE("algebraic identities") {
    CHECK(check_lagrange());
    CHECK(check_sl2_killing());
    CHECK(check_gl11_killing());
    CHECK(check_gl11_identities());
    CHECK(check_gl11_fundamental(gl11_data()));
    /* the 4-leg relation is special to gl(1|1) */
    CHECK_FALSE(check_gl11_fundamental(sl2_data()));
}

}  // TEST_SUITE
