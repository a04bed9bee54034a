#pragma once

#include <vector>

#include "wslab/chord_diagram.hpp"

namespace wslab::detail {

/* Everything the recursion formulas consume after fixing a pivot chord a:
 * D_a, the D_{a,i}, and the six surgeries for every crossing pair i < j. */
struct PairSurgeries {
    ChordDiagram cross, parallel, lr, rl, ll, rr;
};

struct RecursionStep {
    int p = 0;                                   // |I_a|
    ChordDiagram without_pivot;                  // D_a
    std::vector<ChordDiagram> without_pivot_and_one;  // D_{a,i}, i in I_a
    std::vector<PairSurgeries> pairs;            // i < j from I_a
};

inline RecursionStep make_step(const ChordDiagram& d, int pivot,
                               ArcConvention conv = ArcConvention::first_to_second) {
    RecursionStep step;
    std::vector<int> crossing = d.intersecting(pivot);
    step.p = static_cast<int>(crossing.size());
    step.without_pivot = d.without({pivot});
    for (int b : crossing) step.without_pivot_and_one.push_back(d.without({pivot, b}));
    for (size_t i = 0; i < crossing.size(); ++i) {
        for (size_t j = i + 1; j < crossing.size(); ++j) {
            const int bi = crossing[i], bj = crossing[j];
            step.pairs.push_back({d.surgery(pivot, bi, bj, SurgeryKind::cross, conv),
                                  d.surgery(pivot, bi, bj, SurgeryKind::parallel, conv),
                                  d.surgery(pivot, bi, bj, SurgeryKind::lr, conv),
                                  d.surgery(pivot, bi, bj, SurgeryKind::rl, conv),
                                  d.surgery(pivot, bi, bj, SurgeryKind::ll, conv),
                                  d.surgery(pivot, bi, bj, SurgeryKind::rr, conv)});
        }
    }
    return step;
}

/* Pivot heuristic: fewest intersections, ties to the smallest label. The
 * recursions are chord-choice independent; this only shrinks the tree. */
inline int choose_pivot(const ChordDiagram& d) {
    int best = 1, best_count = -1;
    for (int a = 1; a <= d.order(); ++a) {
        int count = static_cast<int>(d.intersecting(a).size());
        if (best_count < 0 || count < best_count) {
            best = a;
            best_count = count;
        }
    }
    return best;
}

}  // namespace wslab::detail
