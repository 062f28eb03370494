#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgraph/degree.hpp"

namespace kgraph {

enum class Vertex : std::uint32_t {};
enum class Edge : std::uint32_t {};

constexpr std::uint32_t ix(Vertex v) noexcept { return static_cast<std::uint32_t>(v); }
constexpr std::uint32_t ix(Edge e) noexcept { return static_cast<std::uint32_t>(e); }

inline constexpr Vertex kNoVertex{std::numeric_limits<std::uint32_t>::max()};
inline constexpr Edge kNoEdge{std::numeric_limits<std::uint32_t>::max()};

/// Colours are stored 0-based; the external (JSON, CLI) form is 1-based.
using Colour = std::uint32_t;

struct EdgeSpec {
  std::string id;
  std::string range;
  std::string source;
  Colour colour = 0;  // 0-based
};

/// A finite k-coloured directed graph. Ids are opaque strings; internally
/// vertices and edges are dense indices in insertion order. Immutable once
/// built.
class ColouredGraph {
 public:
  /// Throws ErrorKind::Schema on duplicate ids, unknown endpoints or
  /// out-of-range colours.
  ColouredGraph(std::size_t k, std::vector<std::string> vertices,
                std::vector<EdgeSpec> edges);

  std::size_t k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
  std::size_t edge_count() const noexcept { return range_.size(); }

  Vertex range(Edge e) const { return range_[ix(e)]; }
  Vertex source(Edge e) const { return source_[ix(e)]; }
  Colour colour(Edge e) const { return colour_[ix(e)]; }

  const std::string& id(Vertex v) const { return vertex_ids_[ix(v)]; }
  const std::string& id(Edge e) const { return edge_ids_[ix(e)]; }

  std::optional<Vertex> find_vertex(std::string_view id) const;
  std::optional<Edge> find_edge(std::string_view id) const;
  /// Throws ErrorKind::UnknownId.
  Vertex vertex(std::string_view id) const;
  Edge edge(std::string_view id) const;

  /// Edges of colour c whose range is v.
  std::span<const Edge> edges_into(Vertex v, Colour c) const {
    return in_[ix(v) * k_ + c];
  }
  /// Edges (any colour) whose range is v.
  std::span<const Edge> edges_into(Vertex v) const { return in_all_[ix(v)]; }
  /// Edges (any colour) whose source is v.
  std::span<const Edge> edges_out_of(Vertex v) const { return out_all_[ix(v)]; }

  const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const noexcept { return edge_ids_; }
  std::vector<EdgeSpec> edge_specs() const;

  friend bool operator==(const ColouredGraph& a, const ColouredGraph& b);

 private:
  std::size_t k_;
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<Vertex> range_;
  std::vector<Vertex> source_;
  std::vector<Colour> colour_;
  std::unordered_map<std::string, Vertex> vertex_index_;
  std::unordered_map<std::string, Edge> edge_index_;
  std::vector<std::vector<Edge>> in_;
  std::vector<std::vector<Edge>> in_all_;
  std::vector<std::vector<Edge>> out_all_;
};

/// A finite path x_1 ... x_n with s(x_i) = r(x_{i+1}); a length-0 path is a
/// vertex. Holds a non-owning pointer to its graph, which must outlive it.
class ColouredPath {
 public:
  ColouredPath(const ColouredGraph& graph, Vertex vertex);
  /// Throws CompositionError naming the index of the offending edge.
  ColouredPath(const ColouredGraph& graph, std::vector<Edge> edges);

  const ColouredGraph& graph() const noexcept { return *graph_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Edge operator[](std::size_t i) const { return edges_[i]; }

  Vertex range() const;
  Vertex source() const;
  ColourWord colour_word() const;
  /// q(c(x))
  Degree shape() const;

  /// Concatenation; throws CompositionError if s(this) != r(other).
  ColouredPath then(const ColouredPath& other) const;

  std::string to_string() const;

  friend bool operator==(const ColouredPath& a, const ColouredPath& b) {
    return a.graph_ == b.graph_ && a.vertex_ == b.vertex_ && a.edges_ == b.edges_;
  }

 private:
  const ColouredGraph* graph_;
  Vertex vertex_;  // range of the path (also the vertex when empty)
  std::vector<Edge> edges_;
};

/// Resolves edge ids and validates composability.
ColouredPath validate_path(const ColouredGraph& g, std::span<const std::string> edge_ids);
ColouredPath validate_path(const ColouredGraph& g, std::vector<Edge> edges);

/// Mixed-radix indexing of the lattice box {n : 0 <= n <= m}; the last
/// coordinate varies fastest.
class GridShape {
 public:
  GridShape() = default;
  explicit GridShape(const Degree& extent);

  const Degree& extent() const noexcept { return extent_; }
  std::size_t k() const noexcept { return extent_.k(); }
  std::size_t point_count() const noexcept { return count_; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }

  std::size_t index(const Degree& n) const;
  Degree point(std::size_t index) const;
  bool contains(const Degree& n) const { return n.leq(extent_); }

 private:
  Degree extent_;
  std::vector<std::size_t> strides_;
  std::size_t count_ = 1;
};

/// E_{k,[p,q]}: the lattice box with its colour-i unit edges n+v_i
/// (range n, source n+e_i).
struct GridGraph {
  std::size_t k;
  Degree lower;
  Degree upper;

  std::size_t vertex_count() const;
  std::size_t edge_count() const;

  static std::string vertex_id(const Degree& n);
  /// "(n1,..,nk)+v_i" with 1-based i
  static std::string edge_id(const Degree& n, Colour i);

  ColouredGraph to_graph() const;
};

/// Throws ErrorKind::BadInterval unless lower <= upper.
GridGraph build_grid(std::size_t k, const Degree& lower, const Degree& upper);

struct ColouredIsomorphism {
  std::vector<Vertex> vertex_map;  // indexed by g1 vertex
  std::vector<Edge> edge_map;      // indexed by g1 edge

  friend bool operator==(const ColouredIsomorphism&, const ColouredIsomorphism&) = default;
};

/// Backtracking search for range/source/colour preserving bijections
/// g1 -> g2. Returns at most `limit` results in discovery order.
std::vector<ColouredIsomorphism> find_coloured_isomorphisms(
    const ColouredGraph& g1, const ColouredGraph& g2, std::size_t limit);

bool is_coloured_isomorphism(const ColouredGraph& g1, const ColouredGraph& g2,
                             const ColouredIsomorphism& iso);

}  // namespace kgraph
