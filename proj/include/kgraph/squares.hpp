#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgraph/graph.hpp"

namespace kgraph {

/// An {i,j}-square, i < j: a coloured-graph morphism E_{k,e_i+e_j} -> E.
///
///   a  = phi(0 + v_i)      b  = phi(e_i + v_j)
///   b2 = phi(0 + v_j)      a2 = phi(e_j + v_i)
///
/// so the two faces are a.b (colours c_i c_j) and b2.a2 (colours c_j c_i).
struct Square {
  Colour i = 0;
  Colour j = 0;
  Edge a{};
  Edge b{};
  Edge b2{};
  Edge a2{};

  friend bool operator==(const Square&, const Square&) = default;
};

/// Returns an explanation if `sq` is not a coloured-graph morphism into g.
std::optional<std::string> square_defect(const ColouredGraph& g, const Square& sq);

/// A collection C of squares together with an index from each face (both
/// colour orders) to the squares owning it.
class SquareCollection {
 public:
  SquareCollection() = default;
  /// Throws ErrorKind::MalformedCollection if any square is not a morphism
  /// into g.
  SquareCollection(const ColouredGraph& g, std::vector<Square> squares);

  const std::vector<Square>& squares() const noexcept { return squares_; }
  std::size_t size() const noexcept { return squares_.size(); }

  /// Indices of squares having (first, second) as a face.
  const std::vector<std::uint32_t>& owners(Edge first, Edge second) const;

  /// The square owning a face, if exactly one does.
  const Square* unique_owner(Edge first, Edge second) const;

  /// True when some square in the collection equals `sq`.
  bool contains(const Square& sq) const;

 private:
  static std::uint64_t key(Edge first, Edge second) {
    return (std::uint64_t{ix(first)} << 32) | ix(second);
  }
  std::vector<Square> squares_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index_;
};

/// Builds the {i,j}-square with faces first.second and other.other2, given
/// in either colour order. Returns nullopt if the data cannot form a square.
std::optional<Square> make_square(const ColouredGraph& g, Edge x1, Edge x2, Edge y1, Edge y2);

struct CompletenessViolation {
  Edge first;
  Edge second;
  std::size_t owners;
};

struct CompletenessReport {
  bool complete = true;
  std::vector<CompletenessViolation> violations;  // in (first, second) order
};

/// Every composable mixed-colour 2-path must be a face of exactly one square.
CompletenessReport check_complete(const ColouredGraph& g, const SquareCollection& c);

/// x1.x2 (mixed colours, composable) -> its unique C-partner y1.y2.
/// Throws ErrorKind::Domain for non-mixed or non-composable input and
/// MissingSquareError when the face has no unique owner.
std::pair<Edge, Edge> flip(const ColouredGraph& g, const SquareCollection& c, Edge x1, Edge x2);
ColouredPath flip(const SquareCollection& c, const ColouredPath& x);

/// The twelve edges of the two rearrangements of a tri-coloured path fgh:
///   route one:  fg ~ g1 f1,  f1 h ~ h1 f2,  g1 h1 ~ h2 g2
///   route two:  gh ~ h_1 g_1, f h_1 ~ h_2 f_1, f_1 g_1 ~ g_2 f_2
/// (upper and lower indices of the usual cube picture).
struct Rearrangement {
  Edge f, g, h;
  Edge up_f1, up_f2, up_g1, up_g2, up_h1, up_h2;
  Edge lo_f1, lo_f2, lo_g1, lo_g2, lo_h1, lo_h2;

  bool agrees() const { return up_f2 == lo_f2 && up_g2 == lo_g2 && up_h2 == lo_h2; }
};

/// Requires f,g,h of distinct colours, composable, and C complete on the
/// faces involved.
Rearrangement rearrange(const ColouredGraph& g, const SquareCollection& c, Edge f, Edge gg,
                        Edge h);

struct AssociativityReport {
  bool associative = true;
  std::vector<Rearrangement> violations;  // lexicographic (f,g,h) order
};

/// Compares the two routes for every composable tri-coloured fgh (all
/// ordered colour triples). Stops at the first violation unless `all`.
/// Throws ErrorKind::Precondition if C is incomplete. Parallel over the
/// first edge; result identical to the serial version.
AssociativityReport check_associative(const ColouredGraph& g, const SquareCollection& c,
                                      bool all = false);
AssociativityReport check_associative_serial(const ColouredGraph& g,
                                             const SquareCollection& c, bool all = false);

}  // namespace kgraph
