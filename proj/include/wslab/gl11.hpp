#pragma once

#include "wslab/chord_diagram.hpp"
#include "wslab/polynomial.hpp"
#include "wslab/weight_system.hpp"

namespace wslab::gl11 {

/* Universal framed gl(1|1) weight system:
 * W(empty) = 1,
 * W(D) = c W(D_a) + h^2 sum_i W(D_{a,i})
 *        - h^2 sum_{i<j} [W(lr) + W(rl) - W(ll) - W(rr)].
 * Polynomial in c and h (even powers of h only). */
Polynomial framed(const ChordDiagram& d);

/* Deframed companion (equals framed with c = 0):
 * Wbar(empty) = 1,
 * Wbar(D) = h^2 sum_i Wbar(D_{a,i})
 *           - h^2 sum_{i<j} [Wbar(lr) + Wbar(rl) - Wbar(ll) - Wbar(rr)].
 * Polynomial in h. */
Polynomial deframed(const ChordDiagram& d);

/* One recursion step forced through a specific pivot chord. */
Polynomial framed_with_pivot(const ChordDiagram& d, int pivot);
Polynomial deframed_with_pivot(const ChordDiagram& d, int pivot);

/* Full evaluation under a fixed left/right arc convention. */
Polynomial framed_via(const ChordDiagram& d, ArcConvention conv);
Polynomial deframed_via(const ChordDiagram& d, ArcConvention conv);

/* Alexander weight series: deframed(D) at h = 1 (equivalently the coefficient
 * of h^|D|). */
Rational alexander_c(const ChordDiagram& d);

WeightFunction framed_system();
WeightFunction deframed_system();
/* alexander_c wrapped as a constant-polynomial weight function (C). */
WeightFunction alexander_system();

}  // namespace wslab::gl11
