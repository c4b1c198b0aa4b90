#include "arbor/registry.hpp"

#include <functional>
#include <map>

#include "arbor/exact.hpp"
#include "arbor/generators.hpp"
#include "arbor/transforms.hpp"

namespace arbor {

namespace {

using Params = nlohmann::json;
using Builder = std::function<Graph(const Params&)>;

int int_param(const Params& p, const char* key) {
    if (!p.is_object() || !p.contains(key)) throw InputError(std::string("missing parameter --") + key);
    const auto& v = p.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("parameter --") + key + " must be an integer");
    return v.get<int>();
}

SimplicialComplex complex_param(const Params& p) {
    if (!p.is_object() || !p.contains("facets") || !p.at("facets").is_array()) {
        throw InputError("complex needs a \"facets\" array");
    }
    SimplicialComplex c;
    for (const auto& f : p.at("facets")) {
        if (!f.is_array()) throw InputError("each facet must be an array of vertex ids");
        c.facets.push_back(f.get<std::vector<Vertex>>());
    }
    return c;
}

const std::map<std::string, Builder>& registry() {
    static const std::map<std::string, Builder> families{
        {"complete", [](const Params& p) { return complete(int_param(p, "n")); }},
        {"complete-bipartite", [](const Params& p) { return complete_bipartite(int_param(p, "a"), int_param(p, "b")); }},
        {"complex", [](const Params& p) { return barycentric_of_complex(complex_param(p)); }},
        {"cross-polytope", [](const Params& p) { return cross_polytope(int_param(p, "d")); }},
        {"cycle", [](const Params& p) { return cycle(int_param(p, "n")); }},
        {"edgeless", [](const Params& p) { return edgeless(int_param(p, "n")); }},
        {"icosahedron", [](const Params&) { return icosahedron(); }},
        {"klein", [](const Params& p) { return klein_bottle_grid(int_param(p, "m"), int_param(p, "n")); }},
        {"octahedron", [](const Params&) { return octahedron(); }},
        {"path", [](const Params& p) { return path(int_param(p, "n")); }},
        {"projective-plane", [](const Params&) { return projective_plane(); }},
        {"random",
         [](const Params& p) {
             if (!p.contains("p") || !p.at("p").is_number()) throw InputError("missing parameter --p");
             return random_graph(int_param(p, "n"), p.at("p").get<double>(),
                                 static_cast<std::uint64_t>(int_param(p, "seed")));
         }},
        {"star", [](const Params& p) { return star(int_param(p, "n")); }},
        {"three-torus", [](const Params& p) { return three_torus(int_param(p, "n")); }},
        {"torus", [](const Params& p) { return torus_grid(int_param(p, "m"), int_param(p, "n")); }},
        {"wheel", [](const Params& p) { return wheel(int_param(p, "n")); }},
    };
    return families;
}

}  // namespace

std::vector<std::string> family_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
}

Graph generate_family(const std::string& family, const nlohmann::json& params) {
    auto it = registry().find(family);
    if (it == registry().end()) throw InputError("unknown family '" + family + "'");
    return it->second(params.is_null() ? nlohmann::json::object() : params);
}

Graph generate_from_spec(const nlohmann::json& spec) {
    if (!spec.is_object() || !spec.contains("family") || !spec.at("family").is_string()) {
        throw InputError("generator spec needs a \"family\" string");
    }
    Graph g = generate_family(spec.at("family").get<std::string>(), spec.value("params", nlohmann::json::object()));
    const int refine = spec.value("refine", 0);
    if (refine < 0) throw InputError("refine must be non-negative");
    for (int i = 0; i < refine; ++i) g = barycentric_refinement(g);
    if (spec.contains("remove")) {
        const auto v = spec.at("remove").get<Vertex>();
        if (!g.has_vertex(v)) throw InputError("remove: no such vertex");
        g = remove_vertex(g, v);
    }
    if (spec.contains("isolated")) {
        const int k = spec.at("isolated").get<int>();
        if (k < 0) throw InputError("isolated must be non-negative");
        g = disjoint_union(g, edgeless(k));
    }
    return g;
}

}  // namespace arbor
