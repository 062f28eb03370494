#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/category.hpp"

namespace kgraph {

/// The skeleton (E_Lambda, C_Lambda): vertex <v> for each v in Lambda^0,
/// edge <f> for each f in Lambda^{e_i}, and one square phi_lambda for each
/// lambda in Lambda^{e_i + e_j}, i < j.
struct Skeleton {
  std::shared_ptr<const ColouredGraph> graph;
  SquareCollection squares;
  /// vertex_cubes[u] is the degree-0 path behind skeleton vertex u.
  std::vector<CubeMorphism> vertex_cubes;
  /// edge_cubes[e] is the degree-e_i path behind skeleton edge e.
  std::vector<CubeMorphism> edge_cubes;
  /// The degree e_i + e_j paths, in square order.
  std::vector<CubeMorphism> square_cubes;
  std::map<CubeMorphism, Vertex> vertex_of;
  std::map<CubeMorphism, Edge> edge_of;

  bool complete = false;
  bool associative = false;
};

Skeleton extract_skeleton(const KGraph& lambda);

struct RhoReport {
  bool passed = true;
  std::vector<Vertex> vertex_map;  // rho^0, indexed by vertex of E
  std::vector<Edge> edge_map;      // rho^1, indexed by edge of E
  std::size_t squares_checked = 0;
  std::vector<std::string> failures;
};

/// Builds rho : E -> E_Lambda (v -> <lambda_v>, f -> <lambda_f>) and checks
/// it is a colour, range and source preserving bijection carrying every
/// square of C into C_Lambda; also checks the skeleton squares are complete
/// and associative and their count matches.
RhoReport verify_rho(const KGraph& lambda);

struct ThetaOptions {
  std::uint32_t max_norm = 4;
  /// Keep the table of (gamma, theta_gamma) pairs in the report.
  bool keep_table = false;
};

struct ThetaReport {
  bool passed = true;
  std::size_t elements = 0;
  std::size_t composable_pairs = 0;
  std::size_t degrees = 0;
  std::vector<std::string> failures;
  std::vector<std::pair<CubeMorphism, CubeMorphism>> table;
};

/// Given Gamma, a presentation (E, C) = target, and psi : E_Gamma -> E a
/// coloured-graph isomorphism from the skeleton of Gamma, forms
///   theta_gamma(m)       = psi^0(<gamma(m)>)
///   theta_gamma(m + v_i) = psi^1(<gamma(m, m + e_i)>)
/// for every gamma with |d(gamma)| <= max_norm and checks that each is a
/// C-compatible cube, that theta preserves d, r, s, is injective and onto
/// Lambda_(E,C)^m at each degree, and that theta(gamma gamma') =
/// theta(gamma) theta(gamma') within the bound.
/// Throws ErrorKind::Precondition if psi is not an isomorphism or does not
/// carry C_Gamma into C.
ThetaReport build_theta(const KGraph& gamma, const Skeleton& gamma_skeleton, const KGraph& target,
                        const ColouredIsomorphism& psi, const ThetaOptions& options = {});

}  // namespace kgraph
