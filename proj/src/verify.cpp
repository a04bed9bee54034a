#include "wslab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "wslab/gl11.hpp"
#include "wslab/oracle.hpp"
#include "wslab/sl2.hpp"
#include "wslab/weight_system.hpp"

namespace wslab {

namespace {

/* Dynamic work distribution over [0, count). The workers only append to a
 * mutex-guarded violation list; results get sorted afterwards, so the output
 * does not depend on scheduling. */
void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    const size_t worker_count = std::min<size_t>(static_cast<size_t>(jobs), count);
    for (size_t t = 0; t < worker_count; ++t)
        workers.emplace_back([&] {
            for (size_t i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& w : workers) w.join();
}

struct Collector {
    std::mutex mutex;
    SuiteResult result;

    void count(long n = 1) {
        std::lock_guard<std::mutex> lock(mutex);
        result.checks += n;
    }
    void violation(const std::string& text) {
        std::lock_guard<std::mutex> lock(mutex);
        result.violations.push_back(text);
    }
    /* Record a comparison; report both sides when they differ. */
    template <typename T>
    void expect_equal(const T& lhs, const T& rhs, const std::string& context,
                      const std::string& lhs_name, const std::string& rhs_name) {
        count();
        if (lhs == rhs) return;
        std::ostringstream os;
        os << context << ": " << lhs_name << " = " << render(lhs) << " but "
           << rhs_name << " = " << render(rhs);
        violation(os.str());
    }

    static std::string render(const Polynomial& p) { return p.str(); }
    static std::string render(const Rational& q) { return to_string(q); }
};

std::vector<ChordDiagram> diagrams_up_to(int lo, int hi) {
    std::vector<ChordDiagram> out;
    for (int n = lo; n <= hi; ++n)
        for (ChordDiagram& d : enumerate_diagrams(n)) out.push_back(std::move(d));
    return out;
}

void run_four_term(Collector& col, int max_order, int jobs) {
    struct System {
        const char* name;
        WeightFunction fn;
    };
    const std::vector<System> systems{{"sl2_framed", sl2::framed_system()},
                                      {"sl2_deframed", sl2::deframed_system()},
                                      {"gl11_framed", gl11::framed_system()},
                                      {"gl11_deframed", gl11::deframed_system()}};
    for (int n = 2; n <= max_order; ++n) {
        const std::vector<FourTermQuadruple> quads = four_term_quadruples(n);
        parallel_for(quads.size(), jobs, [&](size_t qi) {
            const FourTermQuadruple& quad = quads[qi];
            for (const System& sys : systems) {
                Polynomial sum;
                for (int k = 0; k < 4; ++k) {
                    Polynomial value = sys.fn(quad.diagram[k]);
                    sum += FourTermQuadruple::sign[k] > 0 ? value : -value;
                }
                col.count();
                if (!sum.is_zero()) {
                    std::ostringstream os;
                    os << "order " << n << " quadruple [" << quad.diagram[0].str()
                       << "] - [" << quad.diagram[1].str() << "] + ["
                       << quad.diagram[2].str() << "] - [" << quad.diagram[3].str()
                       << "] under " << sys.name << ": expected 0, got " << sum.str();
                    col.violation(os.str());
                }
            }
        });
    }
}

void run_one_term(Collector& col, int max_order, int jobs) {
    const std::vector<ChordDiagram> all = diagrams_up_to(1, max_order);
    parallel_for(all.size(), jobs, [&](size_t i) {
        const ChordDiagram& d = all[i];
        if (!d.has_isolated_chord()) return;
        col.expect_equal(sl2::deframed(d), Polynomial(),
                         "diagram [" + d.str() + "]", "sl2_deframed", "0");
        col.expect_equal(gl11::deframed(d), Polynomial(),
                         "diagram [" + d.str() + "]", "gl11_deframed", "0");
    });
}

void run_deframing(Collector& col, int max_order, int jobs) {
    const WeightFunction sl2_defr_mult = deframe_multiplicative(sl2::framed_system());
    const WeightFunction sl2_defr_full = deframe(sl2::framed_system());
    const WeightFunction gl11_defr_mult = deframe_multiplicative(gl11::framed_system());
    const std::vector<ChordDiagram> all = diagrams_up_to(0, max_order);
    parallel_for(all.size(), jobs, [&](size_t i) {
        const ChordDiagram& d = all[i];
        const std::string ctx = "diagram [" + d.str() + "]";
        const Polynomial direct = sl2::deframed(d);
        col.expect_equal(direct, sl2_defr_mult(d), ctx, "sl2_deframed",
                         "deframe_multiplicative(sl2_framed)");
        col.expect_equal(direct, sl2_defr_full(d), ctx, "sl2_deframed",
                         "deframe(sl2_framed)");
        const Polynomial gdirect = gl11::deframed(d);
        col.expect_equal(gdirect, gl11::framed(d).substitute(Var::c, Polynomial()),
                         ctx, "gl11_deframed", "gl11_framed|c=0");
        col.expect_equal(gdirect, gl11_defr_mult(d), ctx, "gl11_deframed",
                         "deframe_multiplicative(gl11_framed)");
    });
}

void run_vanishing(Collector& col, int max_order, int jobs) {
    const std::vector<ChordDiagram> all = diagrams_up_to(0, max_order);
    parallel_for(all.size(), jobs, [&](size_t i) {
        const ChordDiagram& d = all[i];
        const int n = d.order();
        const Polynomial p = sl2::deframed(d);
        col.count();
        for (const auto& [mono, coeff] : p.terms()) {
            if (2 * mono[0] <= n) continue;
            std::ostringstream os;
            os << "diagram [" << d.str() << "]: coefficient of c^" << mono[0]
               << " is " << to_string(coeff) << " but must vanish above c^floor(" << n
               << "/2)";
            col.violation(os.str());
        }
    });
}

void run_lines(Collector& col, int max_order, int jobs) {
    const std::vector<ChordDiagram> all = diagrams_up_to(0, max_order);
    parallel_for(all.size(), jobs, [&](size_t i) {
        const ChordDiagram& d = all[i];
        const std::string ctx = "diagram [" + d.str() + "]";
        col.expect_equal(sl2::w0_recursive(d), sl2::diagonal_w0(d), ctx,
                         "W0_recursive", "diagonal_W0");
        col.expect_equal(sl2::top_line_recursive(d), sl2::c_line(d, 0), ctx,
                         "top_line_recursive", "c_line(.,0)");
    });
}

void run_mm(Collector& col, int max_order, int jobs) {
    const WeightFunction mm = product(sl2::w0_system(), gl11::alexander_system());
    const WeightFunction unit = epsilon();
    const std::vector<ChordDiagram> all = diagrams_up_to(0, max_order);
    parallel_for(all.size(), jobs, [&](size_t i) {
        const ChordDiagram& d = all[i];
        col.expect_equal(mm(d), unit(d), "diagram [" + d.str() + "]",
                         "product(W0, C)", "epsilon");
    });
}

void run_multiplicativity(Collector& col, int max_order, int jobs) {
    std::vector<std::pair<ChordDiagram, ChordDiagram>> pairs;
    for (int n1 = 0; 2 * n1 <= max_order; ++n1)
        for (const ChordDiagram& d1 : enumerate_diagrams(n1))
            for (int n2 = n1; n1 + n2 <= max_order; ++n2)
                for (const ChordDiagram& d2 : enumerate_diagrams(n2)) {
                    if (n1 == n2 && d2 < d1) continue;
                    pairs.emplace_back(d1, d2);
                }
    parallel_for(pairs.size(), jobs, [&](size_t i) {
        const auto& [d1, d2] = pairs[i];
        const ChordDiagram sum = d1.connect(d2);
        const std::string ctx = "pair [" + d1.str() + "] . [" + d2.str() + "]";
        col.expect_equal(sl2::framed(sum), sl2::framed(d1) * sl2::framed(d2), ctx,
                         "sl2_framed(D1.D2)", "sl2_framed(D1)*sl2_framed(D2)");
        col.expect_equal(gl11::framed(sum), gl11::framed(d1) * gl11::framed(d2), ctx,
                         "gl11_framed(D1.D2)", "gl11_framed(D1)*gl11_framed(D2)");
    });
}

void run_chord_choice(Collector& col, int max_order, int jobs) {
    const std::vector<ChordDiagram> all = diagrams_up_to(1, max_order);
    parallel_for(all.size(), jobs, [&](size_t i) {
        const ChordDiagram& d = all[i];
        const Polynomial sf = sl2::framed(d), sd = sl2::deframed(d);
        const Polynomial gf = gl11::framed(d), gd = gl11::deframed(d);
        for (int pivot = 1; pivot <= d.order(); ++pivot) {
            const std::string ctx =
                "diagram [" + d.str() + "] pivot " + std::to_string(pivot);
            col.expect_equal(sl2::framed_with_pivot(d, pivot), sf, ctx,
                             "sl2_framed(pivot)", "sl2_framed");
            col.expect_equal(sl2::deframed_with_pivot(d, pivot), sd, ctx,
                             "sl2_deframed(pivot)", "sl2_deframed");
            col.expect_equal(gl11::framed_with_pivot(d, pivot), gf, ctx,
                             "gl11_framed(pivot)", "gl11_framed");
            col.expect_equal(gl11::deframed_with_pivot(d, pivot), gd, ctx,
                             "gl11_deframed(pivot)", "gl11_deframed");
        }
    });
}

void run_oracle(Collector& col, int max_order, int jobs) {
    const std::vector<ChordDiagram> all = diagrams_up_to(0, max_order);
    parallel_for(all.size(), jobs, [&](size_t i) {
        const ChordDiagram& d = all[i];
        const std::string ctx = "diagram [" + d.str() + "]";
        const Polynomial interpolated = interpolate_central(d);
        col.expect_equal(interpolated, sl2::framed(d), ctx, "interpolate_central",
                         "sl2_framed");
        /* Residual at one extra node: the interpolant through d = 2..n+2 must
         * also reproduce d = n+3. */
        const int extra = d.order() + 3;
        const Rational node = make_rational(static_cast<long>(extra) * extra - 1, 2);
        col.expect_equal(
            interpolated.substitute(Var::c, Polynomial(node)).constant_value(),
            Rational(trace_weight(d, irrep_sl2(extra)) / extra), ctx,
            "interpolant at d=" + std::to_string(extra), "trace_weight/d");
    });
}

void run_identities(Collector& col) {
    auto check = [&](const char* name, bool ok) {
        col.count();
        if (!ok)
            col.violation(std::string(name) + ": identity check returned false");
    };
    check("lagrange(sl2)", check_lagrange());
    check("killing(sl2) = 4*casimir", check_sl2_killing());
    check("killing(gl11) = -2 h(x)h", check_gl11_killing());
    check("fundamental(gl11) K = M/2", check_gl11_fundamental(gl11_data()));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "4t",  "1t", "deframing",        "vanishing",    "lines",
        "mm",  "multiplicativity", "chord-choice", "oracle",
        "identities"};
    return names;
}

int suite_default_max_order(const std::string& suite) {
    static const std::map<std::string, int> defaults{
        {"4t", 5},        {"1t", 6},
        {"deframing", 6}, {"vanishing", 6},
        {"lines", 6},     {"mm", 5},
        {"multiplicativity", 5},  {"chord-choice", 6},
        {"oracle", 4},    {"identities", -1}};
    auto it = defaults.find(suite);
    if (it == defaults.end())
        throw std::invalid_argument("unknown suite '" + suite + "'");
    return it->second;
}

SuiteResult run_suite(const std::string& suite, int max_order, int jobs) {
    const int fallback = suite_default_max_order(suite);  // validates the name
    if (max_order <= 0) max_order = fallback;

    Collector col;
    col.result.suite = suite;
    col.result.max_order = suite == "identities" ? -1 : max_order;

    if (suite == "4t") run_four_term(col, max_order, jobs);
    else if (suite == "1t") run_one_term(col, max_order, jobs);
    else if (suite == "deframing") run_deframing(col, max_order, jobs);
    else if (suite == "vanishing") run_vanishing(col, max_order, jobs);
    else if (suite == "lines") run_lines(col, max_order, jobs);
    else if (suite == "mm") run_mm(col, max_order, jobs);
    else if (suite == "multiplicativity") run_multiplicativity(col, max_order, jobs);
    else if (suite == "chord-choice") run_chord_choice(col, max_order, jobs);
    else if (suite == "oracle") run_oracle(col, max_order, jobs);
    else run_identities(col);

    std::sort(col.result.violations.begin(), col.result.violations.end());
    return col.result;
}

}  // namespace wslab
