#include "wslab/gl11.hpp"

#include "memo.hpp"
#include "recursion_step.hpp"

namespace wslab::gl11 {

namespace {

const char* framed_cache(ArcConvention conv) {
    return conv == ArcConvention::first_to_second ? "gl11/framed" : "gl11/framed@flipped";
}
const char* deframed_cache(ArcConvention conv) {
    return conv == ArcConvention::first_to_second ? "gl11/deframed"
                                                  : "gl11/deframed@flipped";
}

Polynomial framed_eval(const ChordDiagram& canon, ArcConvention conv);
Polynomial deframed_eval(const ChordDiagram& canon, ArcConvention conv);

Polynomial framed_step(const ChordDiagram& d, int pivot, ArcConvention conv) {
    detail::RecursionStep step = detail::make_step(d, pivot, conv);
    Polynomial h2 = Polynomial::variable(Var::h, 2);
    Polynomial out = Polynomial::variable(Var::c) * framed_eval(step.without_pivot, conv);
    for (const ChordDiagram& child : step.without_pivot_and_one)
        out += h2 * framed_eval(child, conv);
    for (const detail::PairSurgeries& s : step.pairs)
        out -= h2 * (framed_eval(s.lr, conv) + framed_eval(s.rl, conv) -
                     framed_eval(s.ll, conv) - framed_eval(s.rr, conv));
    return out;
}

Polynomial deframed_step(const ChordDiagram& d, int pivot, ArcConvention conv) {
    detail::RecursionStep step = detail::make_step(d, pivot, conv);
    Polynomial h2 = Polynomial::variable(Var::h, 2);
    Polynomial out;
    for (const ChordDiagram& child : step.without_pivot_and_one)
        out += h2 * deframed_eval(child, conv);
    for (const detail::PairSurgeries& s : step.pairs)
        out -= h2 * (deframed_eval(s.lr, conv) + deframed_eval(s.rl, conv) -
                     deframed_eval(s.ll, conv) - deframed_eval(s.rr, conv));
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

Rational alexander_c(const ChordDiagram& d) {
    return deframed(d).substitute(Var::h, Polynomial(1)).constant_value();
}

WeightFunction framed_system() {
    return WeightFunction("gl11_framed",
                          [](const ChordDiagram& d) { return framed(d); });
}

WeightFunction deframed_system() {
    return WeightFunction("gl11_deframed",
                          [](const ChordDiagram& d) { return deframed(d); });
}

WeightFunction alexander_system() {
    return WeightFunction("gl11_alexander", [](const ChordDiagram& d) {
        return Polynomial(alexander_c(d));
    });
}

}  // namespace wslab::gl11
