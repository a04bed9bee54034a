#pragma once

#include "wslab/chord_diagram.hpp"
#include "wslab/polynomial.hpp"
#include "wslab/weight_system.hpp"

namespace wslab::sl2 {

/* Universal framed sl2 weight system (Chmutov-Varchenko recursion):
 * W(empty) = 1, W(D) = (c - 2p) W(D_a) + 2 sum_{i<j} [W(parallel) - W(cross)]
 * over any pivot a with p = |I_a|. Polynomial in c. */
Polynomial framed(const ChordDiagram& d);

/* Deframed companion:
 * Wbar(empty) = 1,
 * Wbar(D) = -2p Wbar(D_a) - 2c sum_i Wbar(D_{a,i})
 *           + 2 sum_{i<j} [Wbar(parallel) - Wbar(cross)]
 *           - 2c sum_{i<j} [Wbar(lr) + Wbar(rl) - Wbar(ll) - Wbar(rr)].
 * Vanishes on isolated chords. Polynomial in c. */
Polynomial deframed(const ChordDiagram& d);

/* One recursion step forced through a specific pivot chord (children evaluated
 * normally); must agree with framed/deframed for every pivot. */
Polynomial framed_with_pivot(const ChordDiagram& d, int pivot);
Polynomial deframed_with_pivot(const ChordDiagram& d, int pivot);

/* Full evaluation under a fixed left/right arc convention; results must not
 * depend on it. */
Polynomial framed_via(const ChordDiagram& d, ArcConvention conv);
Polynomial deframed_via(const ChordDiagram& d, ArcConvention conv);

/* Melvin-Morton polynomial: deframed(D) with c -> (d^2-1)/2. Polynomial in d. */
Polynomial mm_polynomial(const ChordDiagram& d);

/* Coefficient of d^n in mm_polynomial(D), n = |D| (the diagonal series). */
Rational diagonal_w0(const ChordDiagram& d);

/* The diagonal series again, via its own recursion
 * W0(empty) = 1, W0(D) = -sum_i W0(D_{a,i}) - sum_{i<j} [lr + rl - ll - rr];
 * must equal diagonal_w0 everywhere. */
Rational w0_recursive(const ChordDiagram& d);

/* Line k of the deframed system at order n = |D|: the coefficient of
 * c^((n-k)/2) when n-k is even and >= 0, else 0. k = 0 is the top line. */
Rational c_line(const ChordDiagram& d, int k);

/* Top line via its own recursion
 * V(empty) = 1, V(D) = -2 sum_i V(D_{a,i}) - 2 sum_{i<j} [lr + rl - ll - rr];
 * must equal c_line(D, 0). */
Rational top_line_recursive(const ChordDiagram& d);

/* Experimental cross-check of the full line family:
 * V_k(empty) = [k == 0],
 * V_k(D) = -2 sum_i V_k(D_{a,i}) - 2 sum_{i<j} [lr + rl - ll - rr]_k
 *          - 2p V_{k-1}(D_a) + 2 sum_{i<j} [V_{k-1}(parallel) - V_{k-1}(cross)].
 * Cross-checked against c_line in the test suite only. */
Rational lower_line(const ChordDiagram& d, int k);

/* The systems as cached WeightFunction values. */
WeightFunction framed_system();
WeightFunction deframed_system();
/* diagonal_w0 wrapped as a constant-polynomial weight function (W0). */
WeightFunction w0_system();

}  // namespace wslab::sl2
