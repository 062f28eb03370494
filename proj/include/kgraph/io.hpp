#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "kgraph/dynamics.hpp"
#include "kgraph/instance.hpp"
#include "kgraph/quotient.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph::io {

using json = nlohmann::json;

/// {"k", "vertices", "edges": [{id, range, source, colour (1-based)}],
///  "squares": [{i, j, ci_first: [a, b], cj_first: [b2, a2]}], "metadata"}.
/// Square colours i, j are 1-based like edge colours.
json to_json(const Instance& instance);

/// Re-validates everything. Throws ErrorKind::Schema with the offending
/// field path (e.g. "edges[3].colour") for shape errors, duplicate ids,
/// unknown endpoints and out-of-range colours; ErrorKind::MalformedCollection
/// for squares that are not morphisms into the graph.
Instance instance_from_json(const json& j);

Instance load(const std::filesystem::path& path);
void save(const Instance& instance, const std::filesystem::path& path);

/// {"degree": [..], "vertices": {"(n1,..,nk)": v}, "edges": {"(n1,..,nk)+v_i": e}}
json to_json(const ColouredGraph& g, const CubeMorphism& lambda);

/// Inverse of the above; checks the result is a coloured-graph morphism.
CubeMorphism cube_from_json(const ColouredGraph& g, const json& j);

/// The skeleton as an instance document (same schema as to_json(Instance)).
json to_json(const Skeleton& skeleton);

json to_json(const ColouredGraph& g, const AperiodicityVerdict& v);
json to_json(const ColouredGraph& g, const CofinalityVerdict& v);
json to_json(const ColouredGraph& g, const SimplicityVerdict& v);
json to_json(const ColouredGraph& g, const SwapChain& chain);

std::vector<std::uint32_t> parse_uints(const std::string& csv);
std::vector<std::string> split_ids(const std::string& csv);

}  // namespace kgraph::io
