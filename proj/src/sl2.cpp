#include "wslab/sl2.hpp"

#include "memo.hpp"
#include "recursion_step.hpp"

namespace wslab::sl2 {

namespace {

const char* framed_cache(ArcConvention conv) {
    return conv == ArcConvention::first_to_second ? "sl2/framed" : "sl2/framed@flipped";
}
const char* deframed_cache(ArcConvention conv) {
    return conv == ArcConvention::first_to_second ? "sl2/deframed" : "sl2/deframed@flipped";
}

Polynomial var_c() { return Polynomial::variable(Var::c); }

Polynomial framed_eval(const ChordDiagram& canon, ArcConvention conv);
Polynomial deframed_eval(const ChordDiagram& canon, ArcConvention conv);

Polynomial framed_step(const ChordDiagram& d, int pivot, ArcConvention conv) {
    detail::RecursionStep step = detail::make_step(d, pivot, conv);
    Polynomial out = (var_c() - Polynomial(2 * step.p)) * framed_eval(step.without_pivot, conv);
    for (const detail::PairSurgeries& s : step.pairs) {
        Polynomial diff = framed_eval(s.parallel, conv) - framed_eval(s.cross, conv);
        out += Polynomial(2) * diff;
    }
    return out;
}

Polynomial deframed_step(const ChordDiagram& d, int pivot, ArcConvention conv) {
    detail::RecursionStep step = detail::make_step(d, pivot, conv);
    Polynomial out = Polynomial(-2 * step.p) * deframed_eval(step.without_pivot, conv);
    Polynomial c2 = Polynomial(2) * var_c();
    for (const ChordDiagram& child : step.without_pivot_and_one)
        out -= c2 * deframed_eval(child, conv);
    for (const detail::PairSurgeries& s : step.pairs) {
        out += Polynomial(2) *
               (deframed_eval(s.parallel, conv) - deframed_eval(s.cross, conv));
        out -= c2 * (deframed_eval(s.lr, conv) + deframed_eval(s.rl, conv) -
                     deframed_eval(s.ll, conv) - deframed_eval(s.rr, conv));
    }
    return out;
}

Polynomial framed_eval(const ChordDiagram& canon, ArcConvention conv) {
    if (canon.order() == 0) return Polynomial(1);
    return detail::poly_memo(framed_cache(conv))
        .get_or_compute(canon.str(), [&] {
            return framed_step(canon, detail::choose_pivot(canon), conv);
        });
}

Polynomial deframed_eval(const ChordDiagram& canon, ArcConvention conv) {
    if (canon.order() == 0) return Polynomial(1);
    return detail::poly_memo(deframed_cache(conv))
        .get_or_compute(canon.str(), [&] {
            return deframed_step(canon, detail::choose_pivot(canon), conv);
        });
}

}  // namespace

Polynomial framed(const ChordDiagram& d) {
    return framed_eval(d.canonical(), ArcConvention::first_to_second);
}

Polynomial deframed(const ChordDiagram& d) {
    return deframed_eval(d.canonical(), ArcConvention::first_to_second);
}

Polynomial framed_with_pivot(const ChordDiagram& d, int pivot) {
    if (d.order() == 0) return Polynomial(1);
    return framed_step(d, pivot, ArcConvention::first_to_second);
}

Polynomial deframed_with_pivot(const ChordDiagram& d, int pivot) {
    if (d.order() == 0) return Polynomial(1);
    return deframed_step(d, pivot, ArcConvention::first_to_second);
}

Polynomial framed_via(const ChordDiagram& d, ArcConvention conv) {
    return framed_eval(d.canonical(), conv);
}

Polynomial deframed_via(const ChordDiagram& d, ArcConvention conv) {
    return deframed_eval(d.canonical(), conv);
}

Polynomial mm_polynomial(const ChordDiagram& d) {
    /* c -> (d^2 - 1)/2 */
    Polynomial casimir = Polynomial::term(make_rational(1, 2), 0, 0, 2) +
                         Polynomial(make_rational(-1, 2));
    return deframed(d).substitute(Var::c, casimir);
}

Rational diagonal_w0(const ChordDiagram& d) {
    ChordDiagram canon = d.canonical();
    return mm_polynomial(canon).coefficient(Var::d, canon.order()).constant_value();
}

namespace {

Rational w0_eval(const ChordDiagram& canon) {
    if (canon.order() == 0) return Rational(1);
    return detail::scalar_memo("sl2/w0").get_or_compute(canon.str(), [&] {
        detail::RecursionStep step =
            detail::make_step(canon, detail::choose_pivot(canon));
        Rational out(0);
        for (const ChordDiagram& child : step.without_pivot_and_one)
            out -= w0_eval(child);
        for (const detail::PairSurgeries& s : step.pairs)
            out -= w0_eval(s.lr) + w0_eval(s.rl) - w0_eval(s.ll) - w0_eval(s.rr);
        return out;
    });
}

Rational top_line_eval(const ChordDiagram& canon) {
    if (canon.order() == 0) return Rational(1);
    return detail::scalar_memo("sl2/top_line").get_or_compute(canon.str(), [&] {
        detail::RecursionStep step =
            detail::make_step(canon, detail::choose_pivot(canon));
        Rational out(0);
        for (const ChordDiagram& child : step.without_pivot_and_one)
            out -= 2 * top_line_eval(child);
        for (const detail::PairSurgeries& s : step.pairs)
            out -= 2 * (top_line_eval(s.lr) + top_line_eval(s.rl) -
                        top_line_eval(s.ll) - top_line_eval(s.rr));
        return out;
    });
}

Rational lower_line_eval(const ChordDiagram& canon, int k) {
    if (k < 0) return Rational(0);
    if (canon.order() == 0) return Rational(k == 0 ? 1 : 0);
    std::string key = canon.str() + "#" + std::to_string(k);
    return detail::scalar_memo("sl2/lines").get_or_compute(key, [&] {
        detail::RecursionStep step =
            detail::make_step(canon, detail::choose_pivot(canon));
        Rational out(0);
        for (const ChordDiagram& child : step.without_pivot_and_one)
            out -= 2 * lower_line_eval(child, k);
        for (const detail::PairSurgeries& s : step.pairs)
            out -= 2 * (lower_line_eval(s.lr, k) + lower_line_eval(s.rl, k) -
                        lower_line_eval(s.ll, k) - lower_line_eval(s.rr, k));
        out -= 2 * step.p * lower_line_eval(step.without_pivot, k - 1);
        for (const detail::PairSurgeries& s : step.pairs)
            out += 2 * (lower_line_eval(s.parallel, k - 1) -
                        lower_line_eval(s.cross, k - 1));
        return out;
    });
}

}  // namespace

Rational w0_recursive(const ChordDiagram& d) {
    return w0_eval(d.canonical());
}

Rational c_line(const ChordDiagram& d, int k) {
    ChordDiagram canon = d.canonical();
    const int n = canon.order();
    if (k < 0 || k > n || (n - k) % 2 != 0) return Rational(0);
    return deframed(canon).coefficient(Var::c, (n - k) / 2).constant_value();
}

Rational top_line_recursive(const ChordDiagram& d) {
    return top_line_eval(d.canonical());
}

Rational lower_line(const ChordDiagram& d, int k) {
    return lower_line_eval(d.canonical(), k);
}

WeightFunction framed_system() {
    return WeightFunction("sl2_framed", [](const ChordDiagram& d) { return framed(d); });
}

WeightFunction deframed_system() {
    return WeightFunction("sl2_deframed",
                          [](const ChordDiagram& d) { return deframed(d); });
}

WeightFunction w0_system() {
    return WeightFunction("sl2_w0", [](const ChordDiagram& d) {
        return Polynomial(diagonal_w0(d));
    });
}

}  // namespace wslab::sl2
