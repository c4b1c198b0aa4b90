// Command-line front end: graph generation, invariants, arboricity, transforms
// and corpus verification. Every command writes JSON lines to stdout.
//
// Exit codes: 0 success, 1 verification failures, 2 budget exhausted,
// 3 input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arbor/arboricity.hpp"
#include "arbor/corpus.hpp"
#include "arbor/graph_io.hpp"
#include "arbor/registry.hpp"
#include "arbor/topology.hpp"
#include "arbor/transforms.hpp"
#include "arbor/whitney.hpp"

namespace {

using arbor::Graph;
using nlohmann::json;

constexpr int kExitFailures = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

struct Globals {
    std::string format = "json";
    std::int64_t budget = 1'000'000;
    std::uint64_t seed = 42;
    int jobs = 1;

    arbor::RecognitionBudget recognition() const { return {budget, arbor::kDefaultCliqueCap}; }
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw arbor::InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Graph load_graph(const std::string& path) { return arbor::parse_graph(read_input(path)); }

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void emit_graph(const Graph& g, const Globals& globals) {
    if (globals.format == "graph6") {
        std::cout << arbor::to_graph6(g) << '\n';
    } else {
        emit(arbor::to_json(g));
    }
}

}  // namespace

int main(int argc, char** argv) {
    Globals globals;
    if (const char* env = std::getenv("ARBOR_BUDGET")) {
        try {
            globals.budget = std::stoll(env);
        } catch (const std::exception&) {
            std::cerr << "ARBOR_BUDGET must be an integer\n";
            return kExitInput;
        }
    }

    CLI::App app{"Discrete manifolds, arboricity and Nash-Williams density"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", globals.format, "Graph output format")->check(CLI::IsMember({"json", "graph6"}));
    app.add_option("--budget", globals.budget, "Recognition memo budget (default from ARBOR_BUDGET)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", globals.seed, "Root random seed");
    app.add_option("--jobs", globals.jobs, "Worker threads")->check(CLI::PositiveNumber);

    // generate
    auto* generate = app.add_subcommand("generate", "Write a graph from a named family");
    std::string family;
    std::optional<int> d, m, n, a, b;
    std::optional<double> p;
    std::string facets_file;
    int generate_refine = 0;
    generate->add_option("family", family, "Family name")->required()->check(CLI::IsMember(arbor::family_names()));
    generate->add_option("--d", d, "Dimension");
    generate->add_option("--m", m, "First size");
    generate->add_option("--n", n, "Size");
    generate->add_option("--a", a, "First part size");
    generate->add_option("--b", b, "Second part size");
    generate->add_option("--p", p, "Edge probability");
    generate->add_option("--facets", facets_file, "JSON file with a facet list (family 'complex')");
    generate->add_option("--refine", generate_refine, "Barycentric refinements to apply")->check(CLI::NonNegativeNumber);

    // invariants
    auto* invariants = app.add_subcommand("invariants", "Manifold report of a graph");
    std::string input = "-";
    invariants->add_option("graph", input, "Graph file (JSON or graph6), '-' for stdin");

    // arboricity
    auto* arb = app.add_subcommand("arboricity", "Exact arboricity with certificates");
    bool oracle = false;
    bool density_only = false;
    arb->add_option("graph", input, "Graph file, '-' for stdin");
    arb->add_flag("--oracle", oracle, "Cross-check with brute force (at most 16 edges)");
    arb->add_flag("--density-only", density_only, "Only the maximum density and its lower bound");

    // refine
    auto* refine = app.add_subcommand("refine", "Barycentric refinement");
    int times = 1;
    refine->add_option("graph", input, "Graph file, '-' for stdin");
    refine->add_option("--times", times, "Number of refinements")->check(CLI::NonNegativeNumber);

    // inflate
    auto* inflate = app.add_subcommand("inflate", "Raise the arboricity of a 3-manifold by edge subdivisions");
    int target = 0;
    arbor::InflationOptions inflation;
    inflate->add_option("graph", input, "Graph file, '-' for stdin");
    inflate->add_option("--target", target, "Density to exceed")->required()->check(CLI::PositiveNumber);
    inflate->add_option("--max-steps", inflation.max_steps, "Subdivision budget");
    inflate->add_option("--validate-every", inflation.validate_every, "Re-recognize every N steps (0: never)");

    // whitney
    auto* whitney = app.add_subcommand("whitney", "Planarity and the 2-sphere classification");
    whitney->add_option("graph", input, "Graph file, '-' for stdin");

    // conjecture
    auto* conjecture = app.add_subcommand("conjecture", "Search for an induced subgraph with larger E/(V-1)");
    bool sampled = false;
    std::int64_t samples = 10'000;
    std::string graph_id;
    conjecture->add_option("graph", input, "Graph file, '-' for stdin");
    conjecture->add_flag("--sampled", sampled, "Sampled search instead of exhaustive enumeration");
    conjecture->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
    conjecture->add_option("--id", graph_id, "Graph identifier for the report");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a corpus file and report per entry");
    std::string corpus_path;
    bool no_timing = false;
    verify->add_option("corpus", corpus_path, "Corpus JSON file")->required();
    verify->add_flag("--no-timing", no_timing, "Omit wall-clock fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*generate) {
            json params = json::object();
            if (d) params["d"] = *d;
            if (m) params["m"] = *m;
            if (n) params["n"] = *n;
            if (a) params["a"] = *a;
            if (b) params["b"] = *b;
            if (p) params["p"] = *p;
            if (family == "random") params["seed"] = globals.seed;
            if (!facets_file.empty()) {
                json f = json::parse(read_input(facets_file));
                params["facets"] = f.is_object() ? f.at("facets") : f;
            }
            emit_graph(arbor::generate_from_spec({{"family", family}, {"params", params}, {"refine", generate_refine}}),
                       globals);
        } else if (*invariants) {
            const auto report = arbor::manifold_report(load_graph(input), globals.recognition());
            emit(arbor::to_json(report));
            if (report.recognition.verdict == arbor::Verdict::Unknown) return kExitBudget;
        } else if (*arb) {
            const Graph g = load_graph(input);
            if (density_only) {
                const auto w = arbor::max_density(g);
                emit({{"density", arbor::to_json(w)}, {"lower_bound", arbor::ceil(w.value).str()}});
            } else {
                const auto r = arbor::arboricity(g);
                json out{{"k", r.k},
                         {"partition", arbor::to_json(r.partition)},
                         {"certificate_valid", arbor::is_valid_forest_partition(g, r.partition)}};
                if (r.density) out["density"] = arbor::to_json(*r.density);
                if (oracle) out["oracle_k"] = arbor::brute_force_arboricity(g);
                emit(out);
                if (oracle && out["oracle_k"] != r.k) return kExitFailures;
            }
        } else if (*refine) {
            Graph g = load_graph(input);
            for (int i = 0; i < times; ++i) g = arbor::barycentric_refinement(g);
            emit_graph(g, globals);
        } else if (*inflate) {
            inflation.budget = globals.recognition();
            const auto r = arbor::inflate_arboricity(load_graph(input), target, inflation);
            emit_graph(r.graph, globals);
            std::cerr << json{{"steps", r.steps.size()},
                              {"pivot", {r.pivot.first, r.pivot.second}},
                              {"pivot_degree", r.pivot_degree},
                              {"phi", arbor::to_json(arbor::phi(r.graph))}}
                             .dump()
                      << '\n';
        } else if (*whitney) {
            const auto v = arbor::whitney_classify(load_graph(input), globals.recognition());
            emit(arbor::to_json(v));
            if (!v.consistency) return kExitBudget;
        } else if (*conjecture) {
            const Graph g = load_graph(input);
            const auto r = sampled ? arbor::phi_maximality_check(g, {samples, globals.seed, globals.jobs}, graph_id)
                                   : arbor::phi_maximality_check(g, graph_id);
            emit(arbor::to_json(r));
        } else if (*verify) {
            const auto entries = arbor::parse_corpus(json::parse(read_input(corpus_path)));
            arbor::RunOptions options{globals.jobs, globals.seed, globals.recognition(), 10'000};
            const auto report = arbor::run_corpus(entries, options);
            for (const auto& e : report.entries) emit(arbor::to_json(e, !no_timing));
            emit(arbor::summary_json(report));
            return report.exit_code();
        }
    } catch (const arbor::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const arbor::BudgetError& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    }
    return 0;
}
