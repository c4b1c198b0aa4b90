#include "arbor/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <vector>

namespace arbor {

using nlohmann::json;

json to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json out{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (g.has_labels()) out["labels"] = g.labels();
    return out;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw InputError("graph JSON needs \"n\" and \"edges\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0 ||
        j["n"].get<std::int64_t>() > std::numeric_limits<int>::max()) {
        throw InputError("graph JSON: \"n\" must be a non-negative integer");
    }
    const int n = j["n"].get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("graph JSON: each edge must be [u, v]");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null()) {
        labels = j["labels"].get<std::vector<std::string>>();
    }
    return Graph(n, edges, std::move(labels));
}

namespace {

json big_to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return json(static_cast<std::int64_t>(v));
    }
    return json(v.str());
}

BigInt big_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InputError("rational component must be an integer or a decimal string");
}

}  // namespace

json to_json(const ExactRatio& r) {
    return json{{"num", big_to_json(numerator_of(r))}, {"den", big_to_json(denominator_of(r))}};
}

ExactRatio ratio_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw InputError("rational JSON needs \"num\" and \"den\"");
    }
    BigInt den = big_from_json(j["den"]);
    if (den == 0) throw InputError("rational JSON: zero denominator");
    return ExactRatio(big_from_json(j["num"]), den);
}

// --- graph6 ------------------------------------------------------------------

std::string to_graph6(const Graph& g) {
    const std::int64_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph graph_from_graph6(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) throw InputError("graph6: truncated input");
        int c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) throw InputError("graph6: byte outside printable range");
        return c - 63;
    };
    std::int64_t n = 0;
    int first = next();
    if (first < 63) {
        n = first;
    } else {
        int second = next();
        int groups = 3;
        if (second == 63) {
            groups = 6;
        } else {
            n = second;
            groups = 2;
        }
        for (int i = 0; i < groups; ++i) n = (n << 6) | next();
    }
    if (n > std::numeric_limits<int>::max()) throw InputError("graph6: vertex count too large");
    std::vector<Edge> edges;
    int acc = 0;
    int remaining = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (remaining == 0) {
                acc = next();
                remaining = 6;
            }
            --remaining;
            if ((acc >> remaining) & 1) edges.emplace_back(i, j);
        }
    }
    if (pos != text.size()) throw InputError("graph6: trailing bytes");
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
    std::size_t first = 0;
    while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
    if (first < text.size() && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("graph JSON parse error: ") + e.what());
        }
        return graph_from_json(j);
    }
    return graph_from_graph6(text.substr(first));
}

}  // namespace arbor
