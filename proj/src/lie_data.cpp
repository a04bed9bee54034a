#include "wslab/lie_data.hpp"

#include <functional>
#include <stdexcept>
#include <string>

namespace wslab {

RatMat rat_mat_mul(const RatMat& a, const RatMat& b) {
    const size_t n = a.size(), m = b[0].size(), k = b.size();
    RatMat out(n, std::vector<Rational>(m, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

Rational rat_mat_trace(const RatMat& a) {
    Rational t(0);
    for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

RatMat rat_mat_identity(int n) {
    RatMat out(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

RatMat rat_mat_inverse(const RatMat& a) {
    const int n = static_cast<int>(a.size());
    RatMat lhs = a, inv = rat_mat_identity(n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (lhs[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("matrix inverse: singular matrix");
        std::swap(lhs[col], lhs[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational scale = lhs[col][col];
        for (int j = 0; j < n; ++j) {
            lhs[col][j] /= scale;
            inv[col][j] /= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || lhs[r][col] == 0) continue;
            const Rational factor = lhs[r][col];
            for (int j = 0; j < n; ++j) {
                lhs[r][j] -= factor * lhs[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

namespace {

RatMat mat_sub(const RatMat& a, const RatMat& b) {
    RatMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

RatMat mat_add_scaled(RatMat a, const Rational& s, const RatMat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += s * b[i][j];
    return a;
}

bool mat_eq(const RatMat& a, const RatMat& b) {
    return a == b;
}

/* [x, y] = xy - (-1)^{px py} yx */
RatMat super_bracket(const RatMat& x, const RatMat& y, int px, int py) {
    RatMat xy = rat_mat_mul(x, y), yx = rat_mat_mul(y, x);
    if (px == 1 && py == 1)
        return mat_add_scaled(xy, Rational(1), yx);
    return mat_sub(xy, yx);
}

/* Build structure data from defining matrices and validate everything the
 * oracle relies on. `form` is the invariant trace functional ((super)trace of
 * the defining representation); `expand` writes a matrix in the basis. */
LieAlgebraData build(const std::string& what, const std::vector<RatMat>& mats,
                     std::vector<int> parity,
                     const std::function<Rational(const RatMat&)>& form,
                     const std::function<std::vector<Rational>(const RatMat&)>& expand) {
    LieAlgebraData data;
    data.dim = static_cast<int>(mats.size());
    data.parity = std::move(parity);
    const int n = data.dim;
    auto fail = [&](const std::string& why) {
        throw std::logic_error(what + ": " + why);
    };

    data.metric.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            data.metric[i][j] = form(rat_mat_mul(mats[i], mats[j]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rational flipped = (data.parity[i] && data.parity[j])
                                         ? -data.metric[j][i]
                                         : data.metric[j][i];
            if (data.metric[i][j] != flipped) fail("metric not super-symmetric");
        }
    data.metric_inv = rat_mat_inverse(data.metric);  // throws if degenerate

    data.f_lower.assign(n, RatMat(n, std::vector<Rational>(n, Rational(0))));
    data.f_upper = data.f_lower;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const RatMat br = super_bracket(mats[i], mats[j], data.parity[i], data.parity[j]);
            std::vector<Rational> coords = expand(br);
            RatMat recombined(mats[0].size(),
                              std::vector<Rational>(mats[0].size(), Rational(0)));
            for (int k = 0; k < n; ++k) {
                data.f_upper[i][j][k] = coords[k];
                recombined = mat_add_scaled(std::move(recombined), coords[k], mats[k]);
                data.f_lower[i][j][k] = form(rat_mat_mul(br, mats[k]));
            }
            if (!mat_eq(recombined, br)) fail("bracket does not expand in the basis");
            const int bracket_parity = (data.parity[i] + data.parity[j]) % 2;
            for (int k = 0; k < n; ++k)
                if (data.parity[k] != bracket_parity && data.f_upper[i][j][k] != 0)
                    fail("bracket violates the grading");
        }

    /* f_lower must be f_upper with the last index lowered by the metric. */
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational lowered(0);
                for (int m = 0; m < n; ++m)
                    lowered += data.f_upper[i][j][m] * data.metric[m][k];
                if (lowered != data.f_lower[i][j][k])
                    fail("lowered and raised structure tensors disagree");
            }

    /* Invariance of the form: <[x,y],z> = <x,[y,z]>. */
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Rational rhs = form(rat_mat_mul(
                    mats[i], super_bracket(mats[j], mats[k], data.parity[j], data.parity[k])));
                if (data.f_lower[i][j][k] != rhs) fail("form is not invariant");
            }

    /* Graded Jacobi: [x,[y,z]] = [[x,y],z] + (-1)^{px py} [y,[x,z]]. */
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int px = data.parity[x], py = data.parity[y], pz = data.parity[z];
                RatMat lhs = super_bracket(
                    mats[x], super_bracket(mats[y], mats[z], py, pz), px, (py + pz) % 2);
                RatMat rhs = super_bracket(
                    super_bracket(mats[x], mats[y], px, py), mats[z], (px + py) % 2, pz);
                RatMat nested = super_bracket(
                    mats[y], super_bracket(mats[x], mats[z], px, pz), py, (px + pz) % 2);
                rhs = mat_add_scaled(std::move(rhs),
                                     Rational((px && py) ? -1 : 1), nested);
                if (!mat_eq(lhs, rhs)) fail("Jacobi identity fails");
            }

    return data;
}

}  // namespace

LieAlgebraData sl2_data() {
    const Rational z(0), o(1);
    RatMat e{{z, o}, {z, z}};
    RatMat f{{z, z}, {o, z}};
    RatMat h{{o, z}, {z, -o}};
    return build(
        "sl2_data", {e, f, h}, {0, 0, 0},
        [](const RatMat& a) { return a[0][0] + a[1][1]; },
        [](const RatMat& x) {
            return std::vector<Rational>{x[0][1], x[1][0], x[0][0]};
        });
}

LieAlgebraData gl11_data() {
    const Rational z(0), o(1);
    RatMat h{{o, z}, {z, o}};
    RatMat g{{o, z}, {z, z}};
    RatMat q{{z, o}, {z, z}};
    RatMat r{{z, z}, {o, z}};
    return build(
        "gl11_data", {h, g, q, r}, {0, 0, 1, 1},
        [](const RatMat& a) { return a[0][0] - a[1][1]; },  // supertrace
        [](const RatMat& x) {
            return std::vector<Rational>{x[1][1], x[0][0] - x[1][1], x[0][1], x[1][0]};
        });
}

LieAlgebraData with_metric_entry(LieAlgebraData data, int i, int j, const Rational& value) {
    data.metric.at(i).at(j) = value;
    data.metric_inv = rat_mat_inverse(data.metric);
    return data;
}

Representation irrep_sl2(int d) {
    if (d < 1) throw std::invalid_argument("irrep_sl2: dimension must be positive");
    Representation rep;
    rep.d = d;
    RatMat e(d, std::vector<Rational>(d, Rational(0)));
    RatMat f = e, h = e;
    for (int k = 0; k < d; ++k) {
        h[k][k] = d - 1 - 2 * k;                  // weight of the k-th basis vector
        if (k >= 1) e[k - 1][k] = k;              // e raises the weight
        if (k + 1 < d) f[k + 1][k] = d - 1 - k;   // f lowers it
    }
    rep.rho = {e, f, h};

    /* Bracket relations, exactly. */
    auto commutator = [](const RatMat& a, const RatMat& b) {
        return mat_sub(rat_mat_mul(a, b), rat_mat_mul(b, a));
    };
    auto scaled = [](const Rational& s, const RatMat& a) {
        RatMat out = a;
        for (auto& row : out)
            for (auto& v : row) v *= s;
        return out;
    };
    if (!mat_eq(commutator(e, f), h) || !mat_eq(commutator(h, e), scaled(Rational(2), e)) ||
        !mat_eq(commutator(h, f), scaled(Rational(-2), f)))
        throw std::logic_error("irrep_sl2: bracket relations fail");
    return rep;
}

}  // namespace wslab
