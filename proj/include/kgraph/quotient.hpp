#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/category.hpp"

namespace kgraph {

/// A chain of words from w to w2 in which consecutive words differ by one
/// adjacent transposition of distinct letters. Built by moving, for each
/// position p in turn, the nearest matching letter leftwards into place.
/// Throws ErrorKind::Domain if the abelianizations differ.
std::vector<ColourWord> shuffle_chain(const ColourWord& w, const ColourWord& w2);

/// Position j such that b is a with letters j and j+1 exchanged, if any.
std::optional<std::size_t> adjacent_swap(const ColourWord& a, const ColourWord& b);

/// x ~ y, decided by comparing normal forms.
bool equivalent(const KGraph& lambda, const ColouredPath& x, const ColouredPath& y);

struct SwapStep {
  std::size_t index;  // flips edges (index, index + 1)
  std::vector<Edge> after;
};

struct SwapChain {
  std::vector<Edge> start;
  std::vector<SwapStep> steps;
};

/// Lifts shuffle_chain(c(x), c(y)) through the common cube. Throws
/// ErrorKind::Domain if x and y are not equivalent.
SwapChain witness_chain(const KGraph& lambda, const ColouredPath& x, const ColouredPath& y);

/// Applies each recorded flip to the start path and checks it lands on the
/// recorded path; returns the final path, or nullopt on any mismatch.
std::optional<std::vector<Edge>> replay(const KGraph& lambda, const SwapChain& chain);

enum class Reachability { Reachable, Unreachable, Overflow };

struct FlipClass {
  bool overflow = false;
  std::vector<std::vector<Edge>> members;  // sorted
};

/// Breadth-first closure of x under single adjacent C-flips, stopping at
/// node_cap paths.
FlipClass flip_class(const KGraph& lambda, const ColouredPath& x, std::size_t node_cap = 10'000);

Reachability flip_reachable(const KGraph& lambda, const ColouredPath& x, const ColouredPath& y,
                            std::size_t node_cap = 10'000);

/// Every E-path of length <= max_length (vertices included as length 0
/// paths, stored as empty edge lists alongside their vertex).
struct PathListing {
  std::vector<Vertex> ranges;
  std::vector<std::vector<Edge>> edges;
};
PathListing all_paths(const ColouredGraph& g, std::size_t max_length);

struct QuotientReport {
  bool passed = true;
  std::size_t paths = 0;
  std::size_t classes = 0;
  std::size_t products_checked = 0;
  /// (v, m) -> (class count, |v Lambda^m|)
  std::map<std::pair<std::uint32_t, Degree>, std::pair<std::size_t, std::size_t>> counts;
  std::vector<std::string> failures;
};

/// Over every E-path of length <= length_bound: groups paths into flip
/// classes, checks r, s and shape are class invariants, each class has one
/// normal form and distinct classes distinct ones, [x][y] = [xy] does not
/// depend on representatives, and the class count per (v, m) is |v Lambda^m|.
QuotientReport quotient_structure_check(const KGraph& lambda, std::size_t length_bound);

/// The coherent prefix family lambda_{x_1...x_i}, i = 0..n (i = 0 is the
/// range vertex).
std::vector<CubeMorphism> extend_pi(const KGraph& lambda, const ColouredPath& x);

struct CylinderReport {
  bool passed = true;
  std::size_t words_checked = 0;
  std::size_t preimage_words = 0;
  std::size_t extensions_checked = 0;
  std::size_t classes_hit = 0;
  std::vector<std::string> failures;
};

/// Finite-depth check of the cylinder correspondence for Z(mu):
///  (a) every E-path y from r(mu) with |d(mu)| <= |y| <= |d(mu)| + depth and
///      lambda_y(0, d(mu)) = mu keeps that prefix under every one-edge
///      extension, so the word cylinder Z(y) lands inside Z(mu);
///  (b) every nu in s(mu) Lambda with |d(nu)| <= depth is reached from the
///      word cylinder of a traversal of mu nu.
/// Throws ErrorKind::Precondition unless Lambda is row-finite without sources.
CylinderReport cylinder_preimage_check(const KGraph& lambda, const CubeMorphism& mu,
                                       std::size_t depth);

}  // namespace kgraph
