#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wslab/chord_diagram.hpp"
#include "wslab/polynomial.hpp"

namespace wslab {

/* A weight function: a polynomial-valued function on chord diagrams that
 * depends only on the canonical form. Evaluation is memoized in a process-wide
 * cache keyed by (name, canonical word), with single-flight computation per
 * key, so instances are cheap to copy and safe to call concurrently. The name
 * must therefore identify the function semantically. */
class WeightFunction {
  public:
    using Evaluator = std::function<Polynomial(const ChordDiagram& /*canonical*/)>;

    WeightFunction(std::string name, Evaluator evaluator);

    const std::string& name() const { return name_; }
    Polynomial operator()(const ChordDiagram& d) const;

  private:
    std::string name_;
    Evaluator evaluator_;
};

/* The unit of the series algebra: 1 on the empty diagram, 0 elsewhere. */
WeightFunction epsilon();

/* (W1*W2)(D) = sum over chord subsets E of D of W1(E) * W2(D\E). */
WeightFunction product(const WeightFunction& w1, const WeightFunction& w2);

/* Deframing projection: sum over subsets E of (-1)^|E| W(Theta^|E| . (D\E)).
 * Output vanishes on diagrams with an isolated chord when W satisfies 4T. */
WeightFunction deframe(const WeightFunction& w);

/* Deframing shortcut for multiplicative W with c0 = W(Theta):
 * sum over subsets E of (-c0)^|E| W(D\E). */
WeightFunction deframe_multiplicative(const WeightFunction& w);

/* Outcome of one relation check: the violating instances, each rendered with
 * both sides, plus the number of comparisons made. */
struct CheckReport {
    std::string check;
    long checked = 0;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

/* Alternating sum over every four-term quadruple of order n must vanish. */
CheckReport check_four_term(const WeightFunction& w, int n);
/* W must vanish on every order-n diagram with an isolated chord. */
CheckReport check_one_term(const WeightFunction& w, int n);
/* W(D1.D2) = W(D1) W(D2) on all pairs with |D1|+|D2| <= max_total_order. */
CheckReport check_multiplicative(const WeightFunction& w, int max_total_order);

}  // namespace wslab
