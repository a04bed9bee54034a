#pragma once

#include "wslab/chord_diagram.hpp"
#include "wslab/lie_data.hpp"
#include "wslab/polynomial.hpp"

namespace wslab {

/* Recursion-free evaluation of the framed sl2 system in a representation:
 * place the Casimir 2-tensor sum b^{ij} e_i (x) e_j on every chord, multiply
 * the matrices along the circle order, take the trace. Equals
 * d * sl2_framed(D) at c = (d^2-1)/2. */
Rational trace_weight(const ChordDiagram& diagram, const Representation& rep);

/* Oracle for the framed sl2 recursion: trace_weight(D, R_d)/d sampled at
 * d = 2..n+2, mapped to c = (d^2-1)/2 and Lagrange-interpolated to the unique
 * polynomial in c of degree <= n. Must equal sl2_framed(D). */
Polynomial interpolate_central(const ChordDiagram& diagram);

/* Lagrange identity <[a,b],[c,d]> = 2<a,d><b,c> - 2<a,c><b,d>, checked on all
 * dim^4 components by contracting the structure tensors. True for sl2_data();
 * false for a perturbed metric (negative control). */
bool check_lagrange(const LieAlgebraData& data);
bool check_lagrange();  // on sl2_data()

/* Killing relation for sl2: the raised Killing tensor equals 4x the Casimir
 * tensor (the inverse metric). */
bool check_sl2_killing();

/* gl(1|1) Killing: the raised (super-)Killing tensor equals -2 h(x)h in the
 * (h, g, q, r) basis. */
bool check_gl11_killing();

/* Fundamental 4-leg relation K = M/2, where K is the double-cobracket tensor
 * and M the signed four-way placement of the Killing and Casimir 2-tensors.
 * True for gl11_data(); false for sl2_data() (negative control). */
bool check_gl11_fundamental(const LieAlgebraData& data);

/* Both gl(1|1) identities on gl11_data(). */
bool check_gl11_identities();

}  // namespace wslab
