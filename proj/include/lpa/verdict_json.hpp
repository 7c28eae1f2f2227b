#pragma once

// JSON form of SimplicityVerdict. Vertices and edges are referred to by
// name; scalars are strings ("-1/2" over Q, residues over F_p).
//
//   {"outcome", "case", "field", "component", "W",
//    "balloons": [{"v", "loop", "edges_to_W", "conditions": {"i".."v"}, "balloon"}],
//    "memberships": [{"v", "target", "basis", "coefficients" | "ranks"}],
//    "identity_membership", "reason", "nonzero_components", "minimal_sets"}

#include <stdexcept>

#include <json.hpp>

#include "lpa/graph.hpp"
#include "lpa/simplicity.hpp"

namespace lpa {

class VerdictFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json verdict_to_json(const Graph& g, const SimplicityVerdict& v);

/// Throws VerdictFormatError on schema violations and GraphError on names
/// not in g.
SimplicityVerdict verdict_from_json(const Graph& g, const nlohmann::ordered_json& j);

}  // namespace lpa
