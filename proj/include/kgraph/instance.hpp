#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "kgraph/category.hpp"

namespace kgraph {

struct InstanceMetadata {
  std::string name;
  std::string provenance;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const InstanceMetadata&, const InstanceMetadata&) = default;
};

/// A presentation (E, C) plus bookkeeping. The graph is shared so that
/// paths and cubes built against it stay valid while copies circulate.
struct Instance {
  std::shared_ptr<const ColouredGraph> graph;
  SquareCollection squares;
  InstanceMetadata meta;

  KGraph kgraph() const { return KGraph(graph, squares); }
};

/// Structural equality: same ids, endpoints, colours and squares (square
/// order ignored).
bool same_instance(const Instance& a, const Instance& b);

/// The same presentation with vertex and edge ids renamed by `prefix` and
/// both listed in a shuffled order. The returned isomorphism maps a -> b.
std::pair<Instance, ColouredIsomorphism> relabel(const Instance& a, const std::string& prefix,
                                                 std::uint64_t seed);

}  // namespace kgraph
