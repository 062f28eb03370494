#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/instance.hpp"

namespace kgraph {

/// The grid E_{k,m} with its only complete collection: one square per unit
/// face. Lambda is then Omega_{k,m}.
Instance omega(std::size_t k, const Degree& m);

/// A plain directed graph, used as one factor of a product.
struct OneGraph {
  std::string name;
  std::vector<std::string> vertices;
  struct Arrow {
    std::string id;
    std::size_t range;
    std::size_t source;
  };
  std::vector<Arrow> arrows;
};

OneGraph cycle_graph(std::size_t n);     // 0 <- 1 <- ... <- n-1 <- 0
OneGraph bouquet_graph(std::size_t n);   // one vertex, n loops
OneGraph complete_graph(std::size_t n);  // every ordered pair, loops included

/// "cycle:3", "bouquet:2", "complete:2" or "loop" (= bouquet:1).
OneGraph parse_factor(const std::string& spec);

/// Cartesian product: colour i moves coordinate i along factor i; every
/// pair of edges of different colours gives the commuting square
/// (f, g) ~ (g, f). Complete and associative by construction.
Instance product_of_1graphs(const std::vector<OneGraph>& factors);

/// (T, q, t, w): T a finite hereditary subset of N^2 with corners d_1 e_1
/// and d_2 e_2, weights w : T -> Z/q, target t.
struct BasicData {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> T;
  std::uint32_t q = 2;
  std::uint32_t t = 0;
  std::vector<std::uint32_t> w;  // aligned with T
};

struct PrwDegreeCheck {
  Degree m;
  std::size_t functions = 0;  // |Lambda(T,q,t,w)^m|
  std::size_t cubes = 0;      // |Lambda_(E,C)^m|
  bool injective = true;
  bool compatible = true;
  bool passed() const { return injective && compatible && functions == cubes; }
};

struct PrwResult {
  Instance instance;
  std::vector<PrwDegreeCheck> checks;  // one per m <= degree_cap
  bool bijective() const;
};

/// The coloured graph of the 2-graph Lambda(T,q,t,w): vertices the
/// solutions v : T -> Z/q of sum w(i) v(i) = t, colour-i edges the
/// functions on T u (T + e_i) whose two windows are vertices, squares from
/// the functions of degree e_1 + e_2. Then checks, at every m <= degree_cap,
/// that lambda -> mu_lambda is injective into the C-compatible cubes and
/// that both sides have the same size. Throws ErrorKind::Domain for bad
/// basic data and ErrorKind::EnumerationLimit when q^|T| > 10^5.
PrwResult prw_2graph(const BasicData& data, const Degree& degree_cap);

struct RandomSizes {
  std::size_t max_vertices = 3;
  /// Upper bound on the total in-degree (all colours) of every vertex.
  std::size_t max_in_degree = 4;
  std::size_t max_attempts = 1000;
};

/// k = 2: random blue adjacency A with no sources, red adjacency
/// alpha A + beta I + gamma A^2 (so blue-red and red-blue 2-path counts agree
/// between every pair of vertices), then a uniformly random matching in
/// each endpoint class. k = 3: product of three random small 1-graphs.
/// Deterministic in the seed. Throws ErrorKind::EnumerationLimit when no
/// draw fits the sizes.
Instance random_instance(std::size_t k, const RandomSizes& sizes, std::uint64_t seed);

/// Every complete collection of squares on g (one matching per endpoint
/// class and colour pair), fed to `visit` until it returns false or `limit`
/// collections have been produced. Returns how many were produced.
std::size_t enumerate_complete_collections(
    const ColouredGraph& g, std::size_t limit,
    const std::function<bool(const std::vector<Square>&)>& visit);

}  // namespace kgraph
