#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/cube.hpp"

namespace kgraph {

/// Lambda_(E,C): a coloured graph together with a square collection, with
/// completeness and associativity checked once at construction.
class KGraph {
 public:
  KGraph(std::shared_ptr<const ColouredGraph> graph, SquareCollection squares);

  const ColouredGraph& graph() const noexcept { return *graph_; }
  std::shared_ptr<const ColouredGraph> graph_ptr() const noexcept { return graph_; }
  const SquareCollection& squares() const noexcept { return squares_; }
  std::size_t k() const noexcept { return graph_->k(); }

  bool complete() const noexcept { return complete_; }
  bool associative() const noexcept { return associative_; }
  bool valid() const noexcept { return complete_ && associative_; }
  /// Why validation failed (empty when valid).
  const std::string& problem() const noexcept { return problem_; }
  /// Throws ErrorKind::Precondition unless valid().
  void require_valid() const;

  std::size_t cell_budget() const noexcept { return cell_budget_; }
  void set_cell_budget(std::size_t cells) { cell_budget_ = cells; }

  CubeMorphism normalize(const ColouredPath& x) const;
  CubeMorphism compose(const CubeMorphism& mu, const CubeMorphism& nu) const;

 private:
  std::shared_ptr<const ColouredGraph> graph_;
  SquareCollection squares_;
  bool complete_ = false;
  bool associative_ = false;
  std::string problem_;
  std::size_t cell_budget_ = kDefaultCellBudget;
};

struct EnumerationOptions {
  /// Colour word used to walk E; empty means the canonical c1^m1 c2^m2 ...
  /// Any staircase of the right shape gives the same set of cubes.
  std::optional<ColourWord> word;
  std::size_t max_paths = 1'000'000;
};

/// Visits every lambda in v Lambda^m (or Lambda^m when v is empty) in the
/// order the E-walk meets them; return false from the visitor to stop.
/// Throws ErrorKind::EnumerationLimit beyond options.max_paths.
void for_each_path_of_degree(const KGraph& lambda, std::optional<Vertex> v, const Degree& m,
                             const std::function<bool(const CubeMorphism&)>& visit,
                             const EnumerationOptions& options = {});

/// v Lambda^m, deduplicated and sorted canonically.
std::vector<CubeMorphism> paths_of_degree(const KGraph& lambda, std::optional<Vertex> v,
                                          const Degree& m, const EnumerationOptions& options = {});

struct RowFiniteReport {
  bool holds = true;
  std::vector<std::pair<Vertex, Colour>> violations;  // (v, colour with no edge into v)
};

/// 0 < |{e : r(e) = v, c(e) = c_i}| for every v and i (finiteness is free).
RowFiniteReport is_row_finite_no_sources(const ColouredGraph& g);
inline RowFiniteReport is_row_finite_no_sources(const KGraph& lambda) {
  return is_row_finite_no_sources(lambda.graph());
}

struct CategoryLawOptions {
  /// Exhaustive for every degree with |m| <= this.
  std::uint32_t exhaustive_norm = 3;
  /// Extra random paths checked at degrees just above the bound.
  std::size_t samples = 64;
  std::uint64_t seed = 1;
};

struct CategoryLawReport {
  bool passed = true;
  std::size_t morphisms = 0;
  std::size_t identity_checks = 0;
  std::size_t associativity_checks = 0;
  std::size_t factorisation_checks = 0;
  std::size_t sampled = 0;
  std::optional<std::string> violation;
};

/// Identity, associativity, d(mu nu) = d(mu) + d(nu) and unique
/// factorisation. Unique factorisation is checked by composing every
/// composable pair in Lambda^n x Lambda^(m-n) and requiring the result to
/// hit each element of Lambda^m exactly once.
CategoryLawReport check_category_laws(const KGraph& lambda, const CategoryLawOptions& options = {});

/// Short human-readable label: the vertex id in degree 0, else the edge ids
/// of the lexicographically first staircase joined by '.'.
std::string canonical_name(const ColouredGraph& g, const CubeMorphism& lambda);

}  // namespace kgraph
