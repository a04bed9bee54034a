#include "wslab/weight_system.hpp"

#include <map>
#include <memory>
#include <sstream>

#include "memo.hpp"

namespace wslab {

namespace detail {

namespace {
template <typename T>
MemoTable<T>& registry(const std::string& name) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<MemoTable<T>>> tables;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = tables[name];
    if (!slot) slot = std::make_unique<MemoTable<T>>();
    return *slot;
}
}  // namespace

MemoTable<Polynomial>& poly_memo(const std::string& name) {
    return registry<Polynomial>(name);
}

MemoTable<Rational>& scalar_memo(const std::string& name) {
    return registry<Rational>(name);
}

}  // namespace detail

WeightFunction::WeightFunction(std::string name, Evaluator evaluator)
    : name_(std::move(name)), evaluator_(std::move(evaluator)) {}

Polynomial WeightFunction::operator()(const ChordDiagram& d) const {
    ChordDiagram canon = d.canonical();
    return detail::poly_memo(name_).get_or_compute(
        canon.str(), [&] { return evaluator_(canon); });
}

WeightFunction epsilon() {
    return WeightFunction("epsilon", [](const ChordDiagram& d) {
        return d.order() == 0 ? Polynomial(1) : Polynomial();
    });
}

WeightFunction product(const WeightFunction& w1, const WeightFunction& w2) {
    std::string name = "product(" + w1.name() + "," + w2.name() + ")";
    return WeightFunction(name, [w1, w2](const ChordDiagram& d) {
        Polynomial sum;
        for (const SubsetSplit& s : subsets(d)) sum += w1(s.part) * w2(s.rest);
        return sum;
    });
}

WeightFunction deframe(const WeightFunction& w) {
    std::string name = "deframe(" + w.name() + ")";
    return WeightFunction(name, [w](const ChordDiagram& d) {
        Polynomial sum;
        for (const SubsetSplit& s : subsets(d)) {
            Polynomial value = w(with_isolated_chords(s.rest, s.size));
            sum += (s.size % 2 == 0) ? value : -value;
        }
        return sum;
    });
}

WeightFunction deframe_multiplicative(const WeightFunction& w) {
    std::string name = "deframe_mult(" + w.name() + ")";
    return WeightFunction(name, [w](const ChordDiagram& d) {
        const Polynomial minus_c0 = -w(theta());
        Polynomial sum;
        for (const SubsetSplit& s : subsets(d))
            sum += minus_c0.pow(static_cast<unsigned>(s.size)) * w(s.rest);
        return sum;
    });
}

CheckReport check_four_term(const WeightFunction& w, int n) {
    CheckReport report;
    report.check = "four-term(" + w.name() + ", n=" + std::to_string(n) + ")";
    for (const FourTermQuadruple& quad : four_term_quadruples(n)) {
        Polynomial sum;
        for (int k = 0; k < 4; ++k) {
            Polynomial value = w(quad.diagram[k]);
            sum += FourTermQuadruple::sign[k] > 0 ? value : -value;
        }
        ++report.checked;
        if (!sum.is_zero()) {
            std::ostringstream os;
            os << "quadruple [" << quad.diagram[0].str() << "] - ["
               << quad.diagram[1].str() << "] + [" << quad.diagram[2].str()
               << "] - [" << quad.diagram[3].str() << "]: expected 0, got "
               << sum.str();
            report.violations.push_back(os.str());
        }
    }
    return report;
}

CheckReport check_one_term(const WeightFunction& w, int n) {
    CheckReport report;
    report.check = "one-term(" + w.name() + ", n=" + std::to_string(n) + ")";
    for (const ChordDiagram& d : enumerate_diagrams(n)) {
        if (!d.has_isolated_chord()) continue;
        ++report.checked;
        Polynomial value = w(d);
        if (!value.is_zero())
            report.violations.push_back("diagram [" + d.str() +
                                        "]: expected 0, got " + value.str());
    }
    return report;
}

CheckReport check_multiplicative(const WeightFunction& w, int max_total_order) {
    CheckReport report;
    report.check =
        "multiplicative(" + w.name() + ", n<=" + std::to_string(max_total_order) + ")";
    for (int n1 = 0; 2 * n1 <= max_total_order; ++n1) {
        for (const ChordDiagram& d1 : enumerate_diagrams(n1)) {
            for (int n2 = n1; n1 + n2 <= max_total_order; ++n2) {
                for (const ChordDiagram& d2 : enumerate_diagrams(n2)) {
                    if (n1 == n2 && d2 < d1) continue;
                    ++report.checked;
                    Polynomial joined = w(d1.connect(d2));
                    Polynomial split = w(d1) * w(d2);
                    if (joined == split) continue;
                    report.violations.push_back(
                        "pair [" + d1.str() + "] . [" + d2.str() + "]: W(D1.D2) = " +
                        joined.str() + " but W(D1)W(D2) = " + split.str());
                }
            }
        }
    }
    return report;
}

}  // namespace wslab
