#include "kgraph/instance.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

namespace kgraph {

namespace {

std::vector<std::tuple<std::string, std::string, std::string, std::string, Colour, Colour>>
square_keys(const Instance& x) {
  const auto& g = *x.graph;
  std::vector<std::tuple<std::string, std::string, std::string, std::string, Colour, Colour>> out;
  for (const auto& s : x.squares.squares())
    out.emplace_back(g.id(s.a), g.id(s.b), g.id(s.b2), g.id(s.a2), s.i, s.j);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool same_instance(const Instance& a, const Instance& b) {
  if (!a.graph || !b.graph) return a.graph == b.graph;
  return *a.graph == *b.graph && square_keys(a) == square_keys(b);
}

std::pair<Instance, ColouredIsomorphism> relabel(const Instance& a, const std::string& prefix,
                                                 std::uint64_t seed) {
  const auto& g = *a.graph;
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> vorder(g.vertex_count()), eorder(g.edge_count());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::iota(eorder.begin(), eorder.end(), 0);
  std::shuffle(vorder.begin(), vorder.end(), rng);
  std::shuffle(eorder.begin(), eorder.end(), rng);

  ColouredIsomorphism iso;
  iso.vertex_map.resize(g.vertex_count());
  iso.edge_map.resize(g.edge_count());
  std::vector<std::string> vertices;
  for (std::uint32_t n = 0; n < vorder.size(); ++n) {
    iso.vertex_map[vorder[n]] = Vertex{n};
    vertices.push_back(prefix + g.id(Vertex{vorder[n]}));
  }
  std::vector<EdgeSpec> edges;
  for (std::uint32_t n = 0; n < eorder.size(); ++n) {
    const Edge e{eorder[n]};
    iso.edge_map[eorder[n]] = Edge{n};
    edges.push_back({prefix + g.id(e), prefix + g.id(g.range(e)), prefix + g.id(g.source(e)),
                     g.colour(e)});
  }
  Instance out;
  out.graph = std::make_shared<const ColouredGraph>(g.k(), std::move(vertices), std::move(edges));
  std::vector<Square> squares;
  for (const auto& s : a.squares.squares())
    squares.push_back(Square{s.i, s.j, iso.edge_map[ix(s.a)], iso.edge_map[ix(s.b)],
                             iso.edge_map[ix(s.b2)], iso.edge_map[ix(s.a2)]});
  out.squares = SquareCollection(*out.graph, std::move(squares));
  out.meta = a.meta;
  out.meta.name = a.meta.name.empty() ? prefix + "relabelled" : a.meta.name + " (relabelled)";
  return {std::move(out), std::move(iso)};
}

}  // namespace kgraph
