#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "arbor/graph.hpp"
#include "arbor/topology.hpp"

namespace arbor {

bool is_planar(const Graph& g);

/// Planar with E = 3V - 6 when V >= 3; complete when V <= 2.
bool is_maximal_planar(const Graph& g);

enum class WhitneyClass { TwoSphere, K4, Neither };

std::string to_string(WhitneyClass c);

/// Both sides of "4-connected and maximal planar <=> 2-sphere or K4",
/// computed independently.
struct WhitneyVerdict {
    bool is_planar = false;
    bool is_maximal_planar = false;
    bool is_4_connected = false;
    WhitneyClass classification = WhitneyClass::Neither;
    /// Left side equals right side; empty when sphere recognition ran out of budget.
    std::optional<bool> consistency;

    bool left() const { return is_maximal_planar && is_4_connected; }
};

/// Throws InputError for graphs without edges.
WhitneyVerdict whitney_classify(const Graph& g, RecognitionBudget budget = {});

nlohmann::json to_json(const WhitneyVerdict& v);

}  // namespace arbor
