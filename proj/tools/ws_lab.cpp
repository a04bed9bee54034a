#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "wslab/chord_diagram.hpp"
#include "wslab/gl11.hpp"
#include "wslab/polynomial.hpp"
#include "wslab/sl2.hpp"
#include "wslab/verify.hpp"

namespace {

constexpr const char* kSchema = "ws-lab/1";

using nlohmann::ordered_json;

int cmd_eval(const std::string& algebra, const std::string& framing,
             const std::string& diagram, bool as_json) {
    const wslab::ChordDiagram d = wslab::ChordDiagram::parse(diagram);
    const wslab::ChordDiagram canon = d.canonical();
    wslab::Polynomial value;
    if (algebra == "sl2")
        value = framing == "framed" ? wslab::sl2::framed(d) : wslab::sl2::deframed(d);
    else
        value = framing == "framed" ? wslab::gl11::framed(d) : wslab::gl11::deframed(d);

    if (as_json) {
        ordered_json out;
        out["schema"] = kSchema;
        out["command"] = "eval";
        out["algebra"] = algebra;
        out["framing"] = framing;
        out["diagram"] = diagram;
        out["canonical"] = canon.str();
        out["polynomial"] = ordered_json::parse(value.to_json());
        out["text"] = value.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "canonical: " << canon.str() << "\n"
                  << algebra << " " << framing << ": " << value.str() << "\n";
    }
    return 0;
}

int cmd_enumerate(int order, bool as_json) {
    const std::vector<wslab::ChordDiagram> all = wslab::enumerate_diagrams(order);
    if (as_json) {
        ordered_json out;
        out["schema"] = kSchema;
        out["command"] = "enumerate";
        out["order"] = order;
        out["count"] = all.size();
        out["diagrams"] = ordered_json::array();
        for (const auto& d : all) out["diagrams"].push_back(d.str());
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& d : all) std::cout << d.str() << "\n";
        std::cout << "count: " << all.size() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_order, int jobs, bool as_json) {
    const wslab::SuiteResult result = wslab::run_suite(suite, max_order, jobs);
    if (as_json) {
        ordered_json out;
        out["schema"] = kSchema;
        out["command"] = "verify";
        out["suite"] = result.suite;
        if (result.max_order >= 0) out["max_order"] = result.max_order;
        out["checks"] = result.checks;
        out["violations"] = result.violations;
        out["passed"] = result.passed();
        std::cout << out.dump() << "\n";
    } else {
        if (result.max_order >= 0)
            std::cout << "suite " << result.suite << ": orders <= " << result.max_order
                      << "\n";
        else
            std::cout << "suite " << result.suite << "\n";
        for (const auto& v : result.violations) std::cout << "violation: " << v << "\n";
        if (result.passed())
            std::cout << "suite " << result.suite << ": PASS (" << result.checks
                      << " checks)\n";
        else
            std::cout << "suite " << result.suite << ": FAIL (" << result.checks
                      << " checks, " << result.violations.size() << " violations)\n";
    }
    return result.passed() ? 0 : 1;
}

int cmd_table(int max_order, const std::string& format) {
    struct Row {
        std::string word;
        int order, crossings;
        wslab::Polynomial sl2_framed, sl2_deframed, mm, gl11_framed, gl11_deframed;
        wslab::Rational diagonal_w0, alexander_c;
    };
    std::vector<Row> rows;
    for (int n = 0; n <= max_order; ++n)
        for (const wslab::ChordDiagram& d : wslab::enumerate_diagrams(n))
            rows.push_back({d.str(), n, d.crossing_pairs(), wslab::sl2::framed(d),
                            wslab::sl2::deframed(d), wslab::sl2::mm_polynomial(d),
                            wslab::gl11::framed(d), wslab::gl11::deframed(d),
                            wslab::sl2::diagonal_w0(d), wslab::gl11::alexander_c(d)});

    if (format == "csv") {
        std::cout << "word,order,crossings,sl2_framed,sl2_deframed,mm,diagonal_w0,"
                     "gl11_framed,gl11_deframed,alexander_c\n";
        for (const Row& r : rows)
            std::cout << r.word << "," << r.order << "," << r.crossings << ","
                      << r.sl2_framed.str() << "," << r.sl2_deframed.str() << ","
                      << r.mm.str() << "," << wslab::to_string(r.diagonal_w0) << ","
                      << r.gl11_framed.str() << "," << r.gl11_deframed.str() << ","
                      << wslab::to_string(r.alexander_c) << "\n";
    } else {
        ordered_json out;
        out["schema"] = kSchema;
        out["command"] = "table";
        out["max_order"] = max_order;
        out["rows"] = ordered_json::array();
        for (const Row& r : rows) {
            ordered_json row;
            row["word"] = r.word;
            row["order"] = r.order;
            row["crossings"] = r.crossings;
            row["sl2_framed"] = ordered_json::parse(r.sl2_framed.to_json());
            row["sl2_deframed"] = ordered_json::parse(r.sl2_deframed.to_json());
            row["mm"] = ordered_json::parse(r.mm.to_json());
            row["diagonal_w0"] = wslab::to_string(r.diagonal_w0);
            row["gl11_framed"] = ordered_json::parse(r.gl11_framed.to_json());
            row["gl11_deframed"] = ordered_json::parse(r.gl11_deframed.to_json());
            row["alexander_c"] = wslab::to_string(r.alexander_c);
            out["rows"].push_back(std::move(row));
        }
        std::cout << out.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Universal sl2 / gl(1|1) weight systems on chord diagrams"};
    app.require_subcommand(1);

    std::string algebra, framing, diagram, suite, format = "csv";
    int order = 0, max_order = 0, jobs = 1;
    bool as_json = false;

    CLI::App* eval = app.add_subcommand("eval", "Evaluate one weight system on one diagram");
    eval->add_option("--algebra", algebra, "Lie algebra")
        ->required()
        ->check(CLI::IsMember({"sl2", "gl11"}));
    eval->add_option("--framing", framing, "framed or deframed system")
        ->required()
        ->check(CLI::IsMember({"framed", "deframed"}));
    eval->add_option("--diagram", diagram,
                     "chord diagram (\"1 2 1 2\", \"abab\", or \"1212\")")
        ->required();
    eval->add_flag("--json", as_json, "machine-readable output");

    CLI::App* enumerate = app.add_subcommand("enumerate", "List canonical diagrams of one order");
    enumerate->add_option("order", order, "diagram order n")->required();
    enumerate->add_flag("--json", as_json, "machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(wslab::suite_names()));
    verify->add_option("--max-order", max_order, "order bound (0 = suite default)");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--json", as_json, "machine-readable output");

    CLI::App* table = app.add_subcommand("table", "Emit all weight systems for all diagrams");
    table->add_option("--max-order", max_order, "largest order to include");
    table->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return cmd_eval(algebra, framing, diagram, as_json);
        if (enumerate->parsed()) return cmd_enumerate(order, as_json);
        if (verify->parsed()) return cmd_verify(suite, max_order, jobs, as_json);
        return cmd_table(max_order > 0 ? max_order : 4, format);
    } catch (const std::exception& e) {
        std::cerr << "ws-lab: " << e.what() << "\n";
        return 2;
    }
}
