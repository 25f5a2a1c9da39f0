#pragma once

#include "mfb/boundary.hpp"
#include "mfb/sigma10.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace mfb {

// ---- expression parsing (integer/rational literals only, ^ for powers) ----

// univariate polynomial in `var` over Q, e.g. "x^2+1"
QPoly parse_minimal_polynomial(const std::string& text, const std::string& var = "x");

// bivariate polynomial in s, t over the field (generator symbol usable)
BivarPoly parse_curve(const std::string& text, const FieldPtr& field);

// branch literal component: polynomial in the parameter "t" over the field,
// e.g. "t^4*z" in { s = "t^4*z", t = "t^3" }
Series parse_series_literal(const std::string& text, const FieldPtr& field);

// ---- graph serialization ----

nlohmann::ordered_json plumbing_to_json(const PlumbingGraph& g);
PlumbingGraph plumbing_from_json(const nlohmann::json& j);
std::string plumbing_to_dot(const PlumbingGraph& g);

nlohmann::ordered_json resolution_to_json(const ResolutionGraph& g);
std::string resolution_to_dot(const ResolutionGraph& g);

std::string canonical_graph_text(const nlohmann::ordered_json& j);

// ---- input files ----

struct InputSpec {
    enum class Mode { sigma10, combinatorial };
    Mode mode = Mode::sigma10;
    // sigma10
    FieldPtr field;
    BivarPoly d;
    std::vector<std::pair<Series, Series>> literal_branches; // optional override
    // combinatorial
    ResolutionGraph graph;
    PairingData pairs;
    std::vector<std::optional<long>> m_at_attach;
};

InputSpec parse_input(const nlohmann::json& j); // SchemaError on malformed input
InputSpec load_input_file(const std::string& path);

// ---- pipeline drivers ----

struct ComputeOutput {
    ResolutionGraph graph;
    BoundaryGraph boundary;
    std::string report;
};

ComputeOutput run_compute(const InputSpec& in);
ResolutionGraph run_resolve(const InputSpec& in);

} // namespace mfb
