#include "wslab/oracle.hpp"

#include <array>
#include <vector>

namespace wslab {

namespace {

struct CasimirPair {
    int i, j;
    Rational coeff;  // b^{ij}
};

std::vector<CasimirPair> casimir_pairs(const LieAlgebraData& data) {
    std::vector<CasimirPair> out;
    for (int i = 0; i < data.dim; ++i)
        for (int j = 0; j < data.dim; ++j)
            if (data.metric_inv[i][j] != 0) out.push_back({i, j, data.metric_inv[i][j]});
    return out;
}

/* Raised (super-)Killing tensor B^{ij} = b^{ia} b^{jb} str(ad_a ad_b). */
RatMat killing_raised(const LieAlgebraData& data) {
    const int n = data.dim;
    RatMat lowered(n, std::vector<Rational>(n, Rational(0)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Rational sum(0);
            for (int m = 0; m < n; ++m)
                for (int k = 0; k < n; ++k) {
                    Rational term = data.f_upper[a][k][m] * data.f_upper[b][m][k];
                    if (data.parity[m]) term = -term;
                    sum += term;
                }
            lowered[a][b] = sum;
        }
    RatMat raised(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational sum(0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    sum += data.metric_inv[i][a] * data.metric_inv[j][b] * lowered[a][b];
            raised[i][j] = sum;
        }
    return raised;
}

/* Dense rank-4 tensor over the basis. */
struct Tensor4 {
    int dim = 0;
    std::vector<Rational> v;
    explicit Tensor4(int n) : dim(n), v(static_cast<size_t>(n) * n * n * n, Rational(0)) {}
    Rational& at(int i, int j, int k, int l) {
        return v[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
    }
    const Rational& at(int i, int j, int k, int l) const {
        return v[((static_cast<size_t>(i) * dim + j) * dim + k) * dim + l];
    }
    bool operator==(const Tensor4&) const = default;
};

/* Place two 2-tensors into four slots with the Koszul sign of interleaving
 * their factors: factors are created in the order (first of A, second of A,
 * first of B, second of B) and each transposition of two odd factors on the
 * way to slot order contributes a -1. */
Tensor4 place_pair(const LieAlgebraData& data, const RatMat& ta, int sa1, int sa2,
                   const RatMat& tb, int sb1, int sb2) {
    const int n = data.dim;
    Tensor4 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ta[i][j] == 0) continue;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (tb[k][l] == 0) continue;
                    const std::array<std::array<int, 2>, 4> factors{{
                        {sa1, data.parity[i]},
                        {sa2, data.parity[j]},
                        {sb1, data.parity[k]},
                        {sb2, data.parity[l]},
                    }};
                    int sign = 1;
                    for (int u = 0; u < 4; ++u)
                        for (int w = u + 1; w < 4; ++w)
                            if (factors[u][0] > factors[w][0] && factors[u][1] &&
                                factors[w][1])
                                sign = -sign;
                    std::array<int, 4> idx{};
                    idx[sa1] = i;
                    idx[sa2] = j;
                    idx[sb1] = k;
                    idx[sb2] = l;
                    Rational term = ta[i][j] * tb[k][l];
                    out.at(idx[0], idx[1], idx[2], idx[3]) += sign > 0 ? term : -term;
                }
        }
    return out;
}

void accumulate(Tensor4& into, const Tensor4& t, int sign) {
    for (size_t i = 0; i < into.v.size(); ++i)
        into.v[i] += sign > 0 ? t.v[i] : -t.v[i];
}

}  // namespace

Rational trace_weight(const ChordDiagram& diagram, const Representation& rep) {
    static const LieAlgebraData data = sl2_data();
    const std::vector<CasimirPair> pairs = casimir_pairs(data);
    const int n = diagram.order();
    const int d = rep.d;
    if (n == 0) return Rational(d);

    std::vector<std::array<int, 2>> ends(n);
    for (int c = 1; c <= n; ++c) ends[c - 1] = diagram.endpoints(c);

    Rational total(0);
    std::vector<size_t> pick(n, 0);  // assignment: Casimir pair index per chord
    while (true) {
        Rational coeff(1);
        std::vector<const RatMat*> at(2 * n, nullptr);
        for (int c = 0; c < n; ++c) {
            const CasimirPair& p = pairs[pick[c]];
            coeff *= p.coeff;
            at[ends[c][0]] = &rep.rho[p.i];
            at[ends[c][1]] = &rep.rho[p.j];
        }
        RatMat prod = rat_mat_identity(d);
        for (int pos = 0; pos < 2 * n; ++pos) prod = rat_mat_mul(prod, *at[pos]);
        total += coeff * rat_mat_trace(prod);

        int c = n - 1;
        while (c >= 0 && pick[c] + 1 == pairs.size()) pick[c--] = 0;
        if (c < 0) break;
        ++pick[c];
    }
    return total;
}

Polynomial interpolate_central(const ChordDiagram& diagram) {
    const int n = diagram.order();
    std::vector<Rational> nodes, values;
    for (int d = 2; d <= n + 2; ++d) {
        nodes.push_back(make_rational(static_cast<long>(d) * d - 1, 2));
        values.push_back(trace_weight(diagram, irrep_sl2(d)) / d);
    }
    const Polynomial c = Polynomial::variable(Var::c);
    Polynomial out;
    for (size_t i = 0; i < nodes.size(); ++i) {
        Polynomial basis(values[i]);
        for (size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            basis *= (c - Polynomial(nodes[j])) * Polynomial(1 / (nodes[i] - nodes[j]));
        }
        out += basis;
    }
    return out;
}

bool check_lagrange(const LieAlgebraData& data) {
    const int n = data.dim;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    Rational lhs(0);
                    for (int m = 0; m < n; ++m)
                        for (int k = 0; k < n; ++k)
                            lhs += data.f_lower[a][b][m] * data.metric_inv[m][k] *
                                   data.f_lower[c][d][k];
                    const Rational rhs = 2 * data.metric[a][d] * data.metric[b][c] -
                                         2 * data.metric[a][c] * data.metric[b][d];
                    if (lhs != rhs) return false;
                }
    return true;
}

bool check_lagrange() {
    return check_lagrange(sl2_data());
}

bool check_sl2_killing() {
    const LieAlgebraData data = sl2_data();
    const RatMat raised = killing_raised(data);
    for (int i = 0; i < data.dim; ++i)
        for (int j = 0; j < data.dim; ++j)
            if (raised[i][j] != 4 * data.metric_inv[i][j]) return false;
    return true;
}

bool check_gl11_killing() {
    const LieAlgebraData data = gl11_data();
    const RatMat raised = killing_raised(data);
    for (int i = 0; i < data.dim; ++i)
        for (int j = 0; j < data.dim; ++j) {
            const Rational expected = (i == 0 && j == 0) ? Rational(-2) : Rational(0);
            if (raised[i][j] != expected) return false;
        }
    return true;
}

bool check_gl11_fundamental(const LieAlgebraData& data) {
    const int n = data.dim;

    /* Cobracket components: delta[m][a][b] = b^{as} b^{bt} f_{stm}. */
    std::vector<RatMat> delta(n, RatMat(n, std::vector<Rational>(n, Rational(0))));
    for (int m = 0; m < n; ++m)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Rational sum(0);
                for (int s = 0; s < n; ++s)
                    for (int t = 0; t < n; ++t)
                        sum += data.metric_inv[a][s] * data.metric_inv[b][t] *
                               data.f_lower[s][t][m];
                delta[m][a][b] = sum;
            }

    /* K = (delta (x) delta) applied to the Casimir. */
    Tensor4 k_tensor(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational sum(0);
                    for (int m = 0; m < n; ++m)
                        for (int t = 0; t < n; ++t)
                            sum += data.metric_inv[m][t] * delta[m][i][j] * delta[t][k][l];
                    k_tensor.at(i, j, k, l) = sum;
                }

    /* M: Killing and Casimir 2-tensors interleaved (+) and nested (-). */
    const RatMat killing = killing_raised(data);
    const RatMat& casimir = data.metric_inv;
    Tensor4 m_tensor(n);
    accumulate(m_tensor, place_pair(data, killing, 0, 2, casimir, 1, 3), +1);
    accumulate(m_tensor, place_pair(data, casimir, 0, 2, killing, 1, 3), +1);
    accumulate(m_tensor, place_pair(data, casimir, 0, 3, killing, 1, 2), -1);
    accumulate(m_tensor, place_pair(data, killing, 0, 3, casimir, 1, 2), -1);

    for (size_t i = 0; i < k_tensor.v.size(); ++i)
        if (2 * k_tensor.v[i] != m_tensor.v[i]) return false;
    return true;
}

bool check_gl11_identities() {
    return check_gl11_killing() && check_gl11_fundamental(gl11_data());
}

}  // namespace wslab
