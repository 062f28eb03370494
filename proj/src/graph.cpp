#include "kgraph/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "kgraph/error.hpp"

namespace kgraph {

ColouredGraph::ColouredGraph(std::size_t k, std::vector<std::string> vertices,
                             std::vector<EdgeSpec> edges)
    : k_(k), vertex_ids_(std::move(vertices)) {
  if (k_ == 0) throw Error(ErrorKind::Schema, "k must be positive");
  for (std::size_t i = 0; i < vertex_ids_.size(); ++i) {
    auto [it, fresh] =
        vertex_index_.emplace(vertex_ids_[i], Vertex{static_cast<std::uint32_t>(i)});
    if (!fresh) throw Error(ErrorKind::Schema, "duplicate vertex id '" + vertex_ids_[i] + "'");
  }
  in_.assign(vertex_ids_.size() * k_, {});
  in_all_.assign(vertex_ids_.size(), {});
  out_all_.assign(vertex_ids_.size(), {});
  edge_ids_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& spec = edges[i];
    const Edge e{static_cast<std::uint32_t>(i)};
    if (!edge_index_.emplace(spec.id, e).second)
      throw Error(ErrorKind::Schema, "duplicate edge id '" + spec.id + "'");
    if (spec.colour >= k_)
      throw Error(ErrorKind::Schema, "edge '" + spec.id + "' has colour " +
                                         std::to_string(spec.colour + 1) +
                                         " outside 1.." + std::to_string(k_));
    auto r = find_vertex(spec.range);
    auto s = find_vertex(spec.source);
    if (!r) throw Error(ErrorKind::Schema, "edge '" + spec.id + "' has unknown range '" + spec.range + "'");
    if (!s) throw Error(ErrorKind::Schema, "edge '" + spec.id + "' has unknown source '" + spec.source + "'");
    edge_ids_.push_back(std::move(spec.id));
    range_.push_back(*r);
    source_.push_back(*s);
    colour_.push_back(spec.colour);
    in_[ix(*r) * k_ + spec.colour].push_back(e);
    in_all_[ix(*r)].push_back(e);
    out_all_[ix(*s)].push_back(e);
  }
}

std::optional<Vertex> ColouredGraph::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Edge> ColouredGraph::find_edge(std::string_view id) const {
  auto it = edge_index_.find(std::string(id));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

Vertex ColouredGraph::vertex(std::string_view id) const {
  auto v = find_vertex(id);
  if (!v) throw Error(ErrorKind::UnknownId, "unknown vertex '" + std::string(id) + "'");
  return *v;
}

Edge ColouredGraph::edge(std::string_view id) const {
  auto e = find_edge(id);
  if (!e) throw Error(ErrorKind::UnknownId, "unknown edge '" + std::string(id) + "'");
  return *e;
}

std::vector<EdgeSpec> ColouredGraph::edge_specs() const {
  std::vector<EdgeSpec> out;
  out.reserve(edge_count());
  for (std::uint32_t i = 0; i < edge_count(); ++i) {
    Edge e{i};
    out.push_back({id(e), id(range(e)), id(source(e)), colour(e)});
  }
  return out;
}

bool operator==(const ColouredGraph& a, const ColouredGraph& b) {
  return a.k_ == b.k_ && a.vertex_ids_ == b.vertex_ids_ && a.edge_ids_ == b.edge_ids_ &&
         a.range_ == b.range_ && a.source_ == b.source_ && a.colour_ == b.colour_;
}

// --- paths -----------------------------------------------------------------

ColouredPath::ColouredPath(const ColouredGraph& graph, Vertex vertex)
    : graph_(&graph), vertex_(vertex) {
  if (ix(vertex) >= graph.vertex_count())
    throw Error(ErrorKind::UnknownId, "vertex index out of range");
}

ColouredPath::ColouredPath(const ColouredGraph& graph, std::vector<Edge> edges)
    : graph_(&graph), vertex_(kNoVertex), edges_(std::move(edges)) {
  if (edges_.empty())
    throw Error(ErrorKind::Domain, "an empty path needs an explicit vertex");
  for (auto e : edges_)
    if (ix(e) >= graph.edge_count())
      throw Error(ErrorKind::UnknownId, "edge index out of range");
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (graph.source(edges_[i - 1]) != graph.range(edges_[i]))
      throw CompositionError(i, "edges " + graph.id(edges_[i - 1]) + " and " +
                                    graph.id(edges_[i]) + " are not composable (index " +
                                    std::to_string(i) + ")");
  }
  vertex_ = graph.range(edges_.front());
}

Vertex ColouredPath::range() const { return vertex_; }

Vertex ColouredPath::source() const {
  return edges_.empty() ? vertex_ : graph_->source(edges_.back());
}

ColourWord ColouredPath::colour_word() const {
  ColourWord w;
  w.letters.reserve(edges_.size());
  for (auto e : edges_) w.letters.push_back(graph_->colour(e));
  return w;
}

Degree ColouredPath::shape() const {
  Degree d(graph_->k());
  for (auto e : edges_) ++d[graph_->colour(e)];
  return d;
}

ColouredPath ColouredPath::then(const ColouredPath& other) const {
  if (source() != other.range())
    throw CompositionError(size(), "paths are not composable");
  if (other.empty()) return *this;
  if (empty()) return other;
  auto edges = edges_;
  edges.insert(edges.end(), other.edges_.begin(), other.edges_.end());
  return ColouredPath(*graph_, std::move(edges));
}

std::string ColouredPath::to_string() const {
  if (edges_.empty()) return graph_->id(vertex_);
  std::string s;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ',';
    s += graph_->id(edges_[i]);
  }
  return s;
}

ColouredPath validate_path(const ColouredGraph& g, std::span<const std::string> edge_ids) {
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (const auto& id : edge_ids) edges.push_back(g.edge(id));
  return ColouredPath(g, std::move(edges));
}

ColouredPath validate_path(const ColouredGraph& g, std::vector<Edge> edges) {
  return ColouredPath(g, std::move(edges));
}

// --- grids -----------------------------------------------------------------

GridShape::GridShape(const Degree& extent) : extent_(extent), strides_(extent.k(), 1) {
  std::size_t stride = 1;
  for (std::size_t i = extent.k(); i-- > 0;) {
    strides_[i] = stride;
    stride *= static_cast<std::size_t>(extent[i]) + 1;
  }
  count_ = stride;
}

std::size_t GridShape::index(const Degree& n) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k(); ++i) idx += strides_[i] * n[i];
  return idx;
}

Degree GridShape::point(std::size_t index) const {
  Degree n(k());
  for (std::size_t i = 0; i < k(); ++i) {
    n[i] = static_cast<Degree::value_type>(index / strides_[i]);
    index %= strides_[i];
  }
  return n;
}

std::size_t GridGraph::vertex_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= upper[i] - lower[i] + 1;
  return n;
}

std::size_t GridGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t n = upper[i] - lower[i];
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) n *= upper[j] - lower[j] + 1;
    total += n;
  }
  return total;
}

std::string GridGraph::vertex_id(const Degree& n) { return n.to_string(); }

std::string GridGraph::edge_id(const Degree& n, Colour i) {
  return n.to_string() + "+v_" + std::to_string(i + 1);
}

ColouredGraph GridGraph::to_graph() const {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  for (const auto& n : degrees_between(lower, upper)) vertices.push_back(vertex_id(n));
  for (const auto& n : degrees_between(lower, upper)) {
    for (Colour i = 0; i < k; ++i) {
      if (n[i] >= upper[i]) continue;
      Degree src = n + Degree::unit(k, i);
      edges.push_back({edge_id(n, i), vertex_id(n), vertex_id(src), i});
    }
  }
  return ColouredGraph(k, std::move(vertices), std::move(edges));
}

GridGraph build_grid(std::size_t k, const Degree& lower, const Degree& upper) {
  if (lower.k() != k || upper.k() != k || !lower.leq(upper))
    throw Error(ErrorKind::BadInterval,
                "grid interval " + lower.to_string() + " .. " + upper.to_string() + " is empty");
  return GridGraph{k, lower, upper};
}

// --- isomorphisms ----------------------------------------------------------

bool is_coloured_isomorphism(const ColouredGraph& g1, const ColouredGraph& g2,
                             const ColouredIsomorphism& iso) {
  if (g1.k() != g2.k() || g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count())
    return false;
  if (iso.vertex_map.size() != g1.vertex_count() || iso.edge_map.size() != g1.edge_count())
    return false;
  std::vector<bool> vseen(g2.vertex_count()), eseen(g2.edge_count());
  for (auto v : iso.vertex_map) {
    if (ix(v) >= g2.vertex_count() || vseen[ix(v)]) return false;
    vseen[ix(v)] = true;
  }
  for (std::uint32_t i = 0; i < g1.edge_count(); ++i) {
    Edge e{i};
    Edge f = iso.edge_map[i];
    if (ix(f) >= g2.edge_count() || eseen[ix(f)]) return false;
    eseen[ix(f)] = true;
    if (g2.colour(f) != g1.colour(e)) return false;
    if (g2.range(f) != iso.vertex_map[ix(g1.range(e))]) return false;
    if (g2.source(f) != iso.vertex_map[ix(g1.source(e))]) return false;
  }
  return true;
}

namespace {

// Multiset of (colour, other-endpoint) counts distinguishes candidate images.
struct VertexSignature {
  std::vector<std::size_t> in_by_colour;
  std::vector<std::size_t> out_by_colour;
  std::size_t loops = 0;
  friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
};

VertexSignature signature(const ColouredGraph& g, Vertex v) {
  VertexSignature sig{std::vector<std::size_t>(g.k()), std::vector<std::size_t>(g.k()), 0};
  for (auto e : g.edges_into(v)) {
    ++sig.in_by_colour[g.colour(e)];
    if (g.source(e) == v) ++sig.loops;
  }
  for (auto e : g.edges_out_of(v)) ++sig.out_by_colour[g.colour(e)];
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const ColouredGraph& g1, const ColouredGraph& g2, std::size_t limit)
      : g1_(g1), g2_(g2), limit_(limit) {
    vmap_.assign(g1.vertex_count(), kNoVertex);
    vused_.assign(g2.vertex_count(), false);
    for (std::uint32_t v = 0; v < g1.vertex_count(); ++v)
      sig1_.push_back(signature(g1, Vertex{v}));
    for (std::uint32_t v = 0; v < g2.vertex_count(); ++v)
      sig2_.push_back(signature(g2, Vertex{v}));
  }

  std::vector<ColouredIsomorphism> run() {
    if (g1_.k() != g2_.k() || g1_.vertex_count() != g2_.vertex_count() ||
        g1_.edge_count() != g2_.edge_count() || limit_ == 0)
      return {};
    assign_vertex(0);
    return std::move(results_);
  }

 private:
  bool done() const { return results_.size() >= limit_; }

  // Vertex maps must carry each parallel-edge bundle (u -> w, colour c) onto
  // a bundle of equal size; edges are matched afterwards.
  bool bundle_consistent(Vertex u) const {
    const Vertex mu = vmap_[ix(u)];
    auto check = [&](std::span<const Edge> edges, bool into) {
      std::map<std::pair<Colour, std::uint32_t>, long> balance;
      for (auto e : edges) {
        Vertex other = into ? g1_.source(e) : g1_.range(e);
        if (vmap_[ix(other)] == kNoVertex) continue;
        ++balance[{g1_.colour(e), ix(vmap_[ix(other)])}];
      }
      for (auto f : into ? g2_.edges_into(mu) : g2_.edges_out_of(mu)) {
        Vertex other = into ? g2_.source(f) : g2_.range(f);
        auto key = std::make_pair(g2_.colour(f), ix(other));
        if (std::find(vmap_.begin(), vmap_.end(), other) == vmap_.end()) continue;
        --balance[key];
      }
      return std::all_of(balance.begin(), balance.end(),
                         [](const auto& kv) { return kv.second == 0; });
    };
    return check(g1_.edges_into(u), true) && check(g1_.edges_out_of(u), false);
  }

  void assign_vertex(std::uint32_t v) {
    if (done()) return;
    if (v == g1_.vertex_count()) {
      assign_edges();
      return;
    }
    for (std::uint32_t w = 0; w < g2_.vertex_count() && !done(); ++w) {
      if (vused_[w] || !(sig1_[v] == sig2_[w])) continue;
      vmap_[v] = Vertex{w};
      vused_[w] = true;
      if (bundle_consistent(Vertex{v})) assign_vertex(v + 1);
      vmap_[v] = kNoVertex;
      vused_[w] = false;
    }
  }

  // Given the vertex bijection, edges inside each (range, source, colour)
  // bundle may be permuted freely; enumerate those permutations.
  void assign_edges() {
    using Key = std::tuple<std::uint32_t, std::uint32_t, Colour>;
    std::map<Key, std::vector<Edge>> bundles1, bundles2;
    for (std::uint32_t i = 0; i < g1_.edge_count(); ++i) {
      Edge e{i};
      bundles1[{ix(vmap_[ix(g1_.range(e))]), ix(vmap_[ix(g1_.source(e))]), g1_.colour(e)}]
          .push_back(e);
    }
    for (std::uint32_t i = 0; i < g2_.edge_count(); ++i) {
      Edge f{i};
      bundles2[{ix(g2_.range(f)), ix(g2_.source(f)), g2_.colour(f)}].push_back(f);
    }
    if (bundles1.size() != bundles2.size()) return;
    std::vector<std::pair<std::vector<Edge>, std::vector<Edge>>> pairs;
    for (auto& [key, edges] : bundles1) {
      auto it = bundles2.find(key);
      if (it == bundles2.end() || it->second.size() != edges.size()) return;
      pairs.emplace_back(edges, it->second);
    }
    ColouredIsomorphism iso{vmap_, std::vector<Edge>(g1_.edge_count(), kNoEdge)};
    permute_bundles(pairs, 0, iso);
  }

  void permute_bundles(std::vector<std::pair<std::vector<Edge>, std::vector<Edge>>>& pairs,
                       std::size_t b, ColouredIsomorphism& iso) {
    if (done()) return;
    if (b == pairs.size()) {
      results_.push_back(iso);
      return;
    }
    auto& [from, to] = pairs[b];
    std::vector<Edge> perm = to;
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < from.size(); ++i) iso.edge_map[ix(from[i])] = perm[i];
      permute_bundles(pairs, b + 1, iso);
    } while (!done() && std::next_permutation(perm.begin(), perm.end()));
  }

  const ColouredGraph& g1_;
  const ColouredGraph& g2_;
  std::size_t limit_;
  std::vector<VertexSignature> sig1_, sig2_;
  std::vector<Vertex> vmap_;
  std::vector<bool> vused_;
  std::vector<ColouredIsomorphism> results_;
};

}  // namespace

std::vector<ColouredIsomorphism> find_coloured_isomorphisms(const ColouredGraph& g1,
                                                            const ColouredGraph& g2,
                                                            std::size_t limit) {
  return IsoSearch(g1, g2, limit).run();
}

}  // namespace kgraph
