#include "arbor/whitney.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "arbor/generators.hpp"

namespace arbor {

bool is_planar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<std::size_t>(g.vertex_count()));
    for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_maximal_planar(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    if (n <= 2) return g.edge_count() == n * (n - 1) / 2;
    return g.edge_count() == 3 * n - 6 && is_planar(g);
}

std::string to_string(WhitneyClass c) {
    switch (c) {
        case WhitneyClass::TwoSphere: return "two-sphere";
        case WhitneyClass::K4: return "K4";
        case WhitneyClass::Neither: return "neither";
    }
    return "neither";
}

WhitneyVerdict whitney_classify(const Graph& g, RecognitionBudget budget) {
    if (g.edge_count() == 0) throw InputError("whitney_classify needs at least one edge");
    WhitneyVerdict v;
    v.is_planar = is_planar(g);
    v.is_maximal_planar = is_maximal_planar(g);
    v.is_4_connected = vertex_connectivity_at_least(g, 4);

    auto sphere = sphere_dimension(g, budget);
    bool indeterminate = false;
    if (sphere.yes() && sphere.dimension == 2) {
        v.classification = WhitneyClass::TwoSphere;
    } else if (g == complete(4)) {
        v.classification = WhitneyClass::K4;
    } else {
        indeterminate = sphere.verdict == Verdict::Unknown;
    }
    if (!indeterminate) v.consistency = v.left() == (v.classification != WhitneyClass::Neither);
    return v;
}

nlohmann::json to_json(const WhitneyVerdict& v) {
    nlohmann::json j{{"is_planar", v.is_planar},
                     {"is_maximal_planar", v.is_maximal_planar},
                     {"is_4_connected", v.is_4_connected},
                     {"classification", to_string(v.classification)}};
    j["consistency"] = v.consistency ? nlohmann::json(*v.consistency) : nlohmann::json("indeterminate");
    return j;
}

}  // namespace arbor
