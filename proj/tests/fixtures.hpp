// Instances shared by the unit tests and the acceptance binary.
#pragma once

#include <string>
#include <vector>

#include "kgraph/generators.hpp"
#include "kgraph/io.hpp"

namespace fixtures {

using namespace kgraph;

inline Instance from_json(const io::json& j) { return io::instance_from_json(j); }

/// One vertex, blue loop f, red loop g, fg ~ gf.
inline Instance torus() {
  auto inst = from_json(R"({
    "k": 2, "vertices": ["v"],
    "edges": [{"id": "f", "range": "v", "source": "v", "colour": 1},
              {"id": "g", "range": "v", "source": "v", "colour": 2}],
    "squares": [{"i": 1, "j": 2, "ci_first": ["f", "g"], "cj_first": ["g", "f"]}]
  })"_json);
  inst.meta.name = "torus";
  return inst;
}

/// Single vertex, blue loops f1 f2, red loop g, with f_a g ~ g f_a.
inline Instance two_blue_one_red() {
  auto inst = from_json(R"({
    "k": 2, "vertices": ["v"],
    "edges": [{"id": "f1", "range": "v", "source": "v", "colour": 1},
              {"id": "f2", "range": "v", "source": "v", "colour": 1},
              {"id": "g", "range": "v", "source": "v", "colour": 2}],
    "squares": [{"i": 1, "j": 2, "ci_first": ["f1", "g"], "cj_first": ["g", "f1"]},
                {"i": 1, "j": 2, "ci_first": ["f2", "g"], "cj_first": ["g", "f2"]}]
  })"_json);
  inst.meta.name = "two blue one red";
  return inst;
}

/// Single vertex, blue loops e1 e2, red loops f1 f2 and the commuting
/// squares e_a f_b ~ f_b e_a.
inline Instance free_2b2r() {
  auto inst = product_of_1graphs({bouquet_graph(2), bouquet_graph(2)});
  inst.meta.name = "free 2b2r";
  return inst;
}

/// Same graph as free_2b2r with a twisted pairing e_a f_b ~ f_b e_(a+b).
inline Instance twisted_2b2r() {
  std::vector<EdgeSpec> edges{{"e0", "v", "v", 0}, {"e1", "v", "v", 0},
                              {"f0", "v", "v", 1}, {"f1", "v", "v", 1}};
  Instance inst;
  inst.graph = std::make_shared<const ColouredGraph>(2, std::vector<std::string>{"v"}, edges);
  const auto& g = *inst.graph;
  std::vector<Square> squares;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const auto e = [&](int x) { return g.edge("e" + std::to_string(x)); };
      const auto f = [&](int x) { return g.edge("f" + std::to_string(x)); };
      squares.push_back(Square{0, 1, e(a), f(b), f(b), e((a + b) % 2)});
    }
  inst.squares = SquareCollection(g, std::move(squares));
  inst.meta.name = "twisted 2b2r";
  return inst;
}

/// Disjoint union, ids prefixed "A:" and "B:".
inline Instance disjoint_union(const Instance& a, const Instance& b) {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  auto add = [&](const Instance& x, const std::string& p) {
    for (const auto& v : x.graph->vertex_ids()) vertices.push_back(p + v);
    for (auto e : x.graph->edge_specs()) edges.push_back({p + e.id, p + e.range, p + e.source, e.colour});
  };
  add(a, "A:");
  add(b, "B:");
  Instance out;
  out.graph = std::make_shared<const ColouredGraph>(a.graph->k(), vertices, edges);
  const auto& g = *out.graph;
  std::vector<Square> squares;
  auto map = [&](const Instance& x, const std::string& p) {
    for (const auto& s : x.squares.squares())
      squares.push_back(Square{s.i, s.j, g.edge(p + x.graph->id(s.a)), g.edge(p + x.graph->id(s.b)),
                               g.edge(p + x.graph->id(s.b2)), g.edge(p + x.graph->id(s.a2))});
  };
  map(a, "A:");
  map(b, "B:");
  out.squares = SquareCollection(g, std::move(squares));
  out.meta.name = a.meta.name + " + " + b.meta.name;
  return out;
}

inline Instance random_k2(std::uint64_t seed) { return random_instance(2, RandomSizes{}, seed); }

/// k = 3 products: small enough for exhaustive checks at |m| <= 4.
inline std::vector<Instance> k3_products() {
  std::vector<std::vector<std::string>> specs{
      {"loop", "loop", "loop"},
      {"cycle:2", "loop", "loop"},
      {"loop", "cycle:3", "loop"},
      {"bouquet:2", "loop", "cycle:2"},
      {"loop", "loop", "complete:2"}};
  std::vector<Instance> out;
  for (const auto& spec : specs) {
    std::vector<OneGraph> fs;
    for (const auto& f : spec) fs.push_back(parse_factor(f));
    out.push_back(product_of_1graphs(fs));
  }
  return out;
}

/// torus; Omega_{2,(2,2)}; Omega_{3,(1,1,1)}; loop x 3-cycle; 25 random
/// k = 2 instances (seeds 1..25); five k = 3 products.
inline std::vector<Instance> corpus() {
  std::vector<Instance> out;
  out.push_back(torus());
  out.push_back(omega(2, Degree{2, 2}));
  out.push_back(omega(3, Degree{1, 1, 1}));
  out.push_back(product_of_1graphs({bouquet_graph(1), cycle_graph(3)}));
  for (std::uint64_t seed = 1; seed <= 25; ++seed) out.push_back(random_k2(seed));
  for (auto& p : k3_products()) out.push_back(std::move(p));
  return out;
}

/// Instances whose k-graphs are aperiodic (products of aperiodic
/// 1-graphs, and a twisted single-vertex 2-graph).
inline std::vector<Instance> aperiodic_instances() {
  std::vector<Instance> out;
  out.push_back(free_2b2r());
  out.push_back(twisted_2b2r());
  out.push_back(product_of_1graphs({complete_graph(2), bouquet_graph(2)}));
  out.push_back(product_of_1graphs({bouquet_graph(2), bouquet_graph(2), bouquet_graph(2)}));
  out.push_back(product_of_1graphs({bouquet_graph(3), bouquet_graph(2)}));
  return out;
}

}  // namespace fixtures
