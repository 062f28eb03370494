#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgraph/graph.hpp"
#include "kgraph/squares.hpp"

namespace kgraph {

inline constexpr std::size_t kDefaultCellBudget = 1'000'000;

/// A coloured-graph morphism E_{k,m} -> E, stored densely: one vertex per
/// grid point and one edge per grid edge n+v_i. Cubes carry no pointer to
/// their graph; every operation that needs E takes it explicitly.
class CubeMorphism {
 public:
  CubeMorphism() = default;
  /// All vertex slots unset; edge slots n+v_i with n_i == m_i stay kNoEdge.
  explicit CubeMorphism(Degree degree);

  const Degree& degree() const noexcept { return shape_.extent(); }
  std::size_t k() const noexcept { return shape_.k(); }
  const GridShape& shape() const noexcept { return shape_; }

  Vertex vertex(const Degree& n) const { return vertices_[shape_.index(n)]; }
  /// The edge n+v_i; kNoEdge when n_i == m_i.
  Edge edge(const Degree& n, Colour i) const { return edges_[shape_.index(n) * k() + i]; }

  Vertex vertex_at(std::size_t index) const { return vertices_[index]; }
  Edge edge_at(std::size_t index, Colour i) const { return edges_[index * k() + i]; }
  void set_vertex(std::size_t index, Vertex v) { vertices_[index] = v; }
  void set_edge(std::size_t index, Colour i, Edge e) { edges_[index * k() + i] = e; }

  /// r(lambda) = lambda(0)
  Vertex range() const { return vertices_.front(); }
  /// s(lambda) = lambda(d(lambda))
  Vertex source() const { return vertices_.back(); }

  const std::vector<Vertex>& vertex_data() const noexcept { return vertices_; }
  const std::vector<Edge>& edge_data() const noexcept { return edges_; }

  friend bool operator==(const CubeMorphism& a, const CubeMorphism& b) {
    return a.degree() == b.degree() && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }
  /// Canonical order: degree, then vertex table, then edge table.
  friend std::strong_ordering operator<=>(const CubeMorphism& a, const CubeMorphism& b);

 private:
  GridShape shape_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

struct CubeHash {
  std::size_t operator()(const CubeMorphism& c) const noexcept;
};

/// Extends a C-compatible cube one edge at a time. Each extension by an
/// edge of colour i fills the new face {n : n_i = m_i + 1} by square flips,
/// checking that every route into the same edge agrees.
class CubeBuilder {
 public:
  CubeBuilder(const ColouredGraph& g, const SquareCollection& c, Vertex start,
              std::size_t cell_budget = kDefaultCellBudget);
  /// Continue from an existing C-compatible cube.
  CubeBuilder(const ColouredGraph& g, const SquareCollection& c, const CubeMorphism& seed,
              std::size_t cell_budget = kDefaultCellBudget);

  /// Pre-size storage so that degrees up to `capacity` need no relayout.
  void reserve(const Degree& capacity);

  /// Throws CompositionError if r(f) != current source, MissingSquareError
  /// if a needed face has no unique square, NonAssociativeError if two
  /// flip routes disagree or a new face square is outside C.
  void extend(Edge f);

  const Degree& degree() const noexcept { return degree_; }
  Vertex source() const;
  CubeMorphism cube() const;

 private:
  std::size_t index(const Degree& n) const;
  Vertex& vertex_slot(const Degree& n) { return vertices_[index(n)]; }
  Edge& edge_slot(const Degree& n, Colour i) { return edges_[index(n) * k_ + i]; }
  void relayout(const Degree& capacity);
  void check_face_squares(Colour i);
  [[noreturn]] void non_associative(const Degree& base, Colour i, Colour j, Colour l,
                                    const std::string& why) const;

  const ColouredGraph* g_;
  const SquareCollection* c_;
  std::size_t k_;
  std::size_t budget_;
  Degree degree_;
  GridShape storage_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// lambda_v : E_{k,0} -> E
CubeMorphism identity_at(const ColouredGraph& g, Vertex v);
/// lambda_f : E_{k,e_i} -> E
CubeMorphism edge_morphism(const ColouredGraph& g, Edge f);

/// The unique C-compatible cube traversed by x.
CubeMorphism normalize(const ColouredGraph& g, const SquareCollection& c, const ColouredPath& x,
                       std::size_t cell_budget = kDefaultCellBudget);

bool traverses(const ColouredGraph& g, const ColouredPath& x, const CubeMorphism& lambda);

/// The path reading lambda along the staircase with colour word w
/// (q(w) must equal d(lambda)).
ColouredPath traversal(const ColouredGraph& g, const CubeMorphism& lambda, const ColourWord& w);

/// One traversal per staircase from 0 to d(lambda), words in lexicographic order.
std::vector<ColouredPath> enumerate_traversals(const ColouredGraph& g, const CubeMorphism& lambda);

/// lambda|*_[p,q](a) = lambda(p + a). Throws ErrorKind::BadInterval unless
/// p <= q <= d(lambda).
CubeMorphism restrict(const CubeMorphism& lambda, const Degree& p, const Degree& q);

/// lambda(m, n); identical to restrict.
CubeMorphism segment(const CubeMorphism& lambda, const Degree& m, const Degree& n);

/// lambda(n) = s(lambda(0, n)).
Vertex vertex_at(const CubeMorphism& lambda, const Degree& n);

/// The composite mu.nu. Throws ErrorKind::Composition if s(mu) != r(nu).
CubeMorphism compose(const ColouredGraph& g, const SquareCollection& c, const CubeMorphism& mu,
                     const CubeMorphism& nu, std::size_t cell_budget = kDefaultCellBudget);

/// (lambda(0, m), lambda(m, d(lambda))). Throws ErrorKind::BadInterval unless m <= d.
std::pair<CubeMorphism, CubeMorphism> factorise(const CubeMorphism& lambda, const Degree& m);

/// The cube of degree e_a + e_b + e_c traversed by the tri-coloured path fgh,
/// built from both rearrangement routes. Throws ErrorKind::Domain unless the
/// colours are distinct and the path composable; NonAssociativeError if the
/// two routes disagree.
CubeMorphism tricolour_fill(const ColouredGraph& g, const SquareCollection& c, Edge f, Edge gg,
                            Edge h);

/// Explanation of the first failure if lambda is not a coloured-graph
/// morphism into g, or (when c is given) some occurring square is not in c.
std::optional<std::string> cube_defect(const ColouredGraph& g, const CubeMorphism& lambda,
                                       const SquareCollection* c = nullptr);

/// Every square occurring in lambda, one per (base point, i < j).
std::vector<Square> occurring_squares(const ColouredGraph& g, const CubeMorphism& lambda);

}  // namespace kgraph
