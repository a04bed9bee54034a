#pragma once

#include <vector>

#include "wslab/rational.hpp"

namespace wslab {

using RatMat = std::vector<std::vector<Rational>>;
using RatTensor3 = std::vector<RatMat>;  // t[i][j][k]

/* Structure data of a metrized Lie (super)algebra in a fixed basis: parities,
 * the invariant metric with its inverse, and the bracket tensor both with the
 * last index lowered (f_lower[i][j][k] = <[e_i,e_j], e_k>) and raised
 * ([e_i,e_j] = sum_k f_upper[i][j][k] e_k).
 *
 * Built from explicit matrices; construction verifies super-symmetry and
 * invertibility of the metric, invariance (<[x,y],z> = <x,[y,z]>), the graded
 * Jacobi identity, and consistency of the two bracket tensors — all exactly.
 * Throws std::logic_error when a check fails. */
struct LieAlgebraData {
    int dim = 0;
    std::vector<int> parity;  // 0 even, 1 odd
    RatMat metric;            // b_ij
    RatMat metric_inv;        // b^ij
    RatTensor3 f_lower;
    RatTensor3 f_upper;
};

/* sl2 in the basis (e, f, h) with the trace form of the 2-dim representation:
 * <e,f> = 1, <h,h> = 2. */
LieAlgebraData sl2_data();

/* gl(1|1) in the basis (h, g, q, r) = (I, E11, E12, E21), parities (0,0,1,1),
 * with the supertrace form str(xy). */
LieAlgebraData gl11_data();

/* Negative-control helper: the same data with one metric entry replaced and
 * the inverse recomputed, structure tensors untouched. The result is NOT
 * re-validated — its whole point is that metric-dependent identities break. */
LieAlgebraData with_metric_entry(LieAlgebraData data, int i, int j, const Rational& value);

/* Exact matrices of the sl2 generators (e, f, h) — basis order matching
 * sl2_data() — in the d-dimensional irreducible representation. Construction
 * verifies the bracket relations exactly. */
struct Representation {
    int d = 0;
    std::vector<RatMat> rho;  // rho[0] = e, rho[1] = f, rho[2] = h
};

Representation irrep_sl2(int d);

/* Small exact-matrix helpers shared by the oracle layer. */
RatMat rat_mat_mul(const RatMat& a, const RatMat& b);
Rational rat_mat_trace(const RatMat& a);
RatMat rat_mat_identity(int n);
/* Inverse by Gaussian elimination; throws std::logic_error if singular. */
RatMat rat_mat_inverse(const RatMat& a);

}  // namespace wslab
