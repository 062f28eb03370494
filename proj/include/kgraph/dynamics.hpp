#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/category.hpp"

namespace kgraph {

enum class Status { Holds, Fails, Inconclusive };
const char* to_string(Status s) noexcept;

/// v, m != n such that every lambda in v Lambda with m v n <= d(lambda) <= bound
/// has lambda(m, m + d - m v n) = lambda(n, n + d - m v n).
struct PeriodicityWitness {
  Vertex v{};
  Degree m;
  Degree n;
  Degree bound;
  std::size_t paths_checked = 0;
};

struct AperiodicityVerdict {
  Status status = Status::Inconclusive;
  std::optional<PeriodicityWitness> witness;
  Degree pair_bound;
  Degree path_bound;
  std::size_t pairs = 0;
  std::size_t separated = 0;
  std::size_t unresolved = 0;
  std::string note;
};

struct AperiodicityOptions {
  /// Cubes examined per (v, m, n) before giving up on that pair.
  std::size_t pair_budget = 200'000;
};

/// Bounded aperiodicity search. For every v and unordered pair m != n <=
/// pair_bound, looks for a separating lambda by increasing |d(lambda)|
/// between m v n and path_bound. Since Lambda has no sources, a separator
/// stays a separator under extension, so a pair with no separator up to
/// path_bound is periodic at every degree up to it. When path_bound also
/// leaves |E^0| steps of slack in every colour beyond m v n, that gives
/// Fails with a witness; without the slack, or past the budget, the pair is
/// unresolved and the verdict Inconclusive.
/// Throws ErrorKind::Precondition unless row-finite with no sources.
/// The pair searches run in parallel; the verdict matches the serial twin.
AperiodicityVerdict check_aperiodic(const KGraph& lambda, const Degree& pair_bound,
                                    const Degree& path_bound,
                                    const AperiodicityOptions& options = {});
AperiodicityVerdict check_aperiodic_serial(const KGraph& lambda, const Degree& pair_bound,
                                           const Degree& path_bound,
                                           const AperiodicityOptions& options = {});

/// First lambda in v Lambda (by |d|) with m v n <= d(lambda) <= bound that
/// separates m and n, if any.
std::optional<CubeMorphism> find_separator(const KGraph& lambda, Vertex v, const Degree& m,
                                           const Degree& n, const Degree& bound,
                                           std::size_t budget = 200'000);

/// lambda(m, m + d - m v n) != lambda(n, n + d - m v n)
bool separates(const CubeMorphism& lambda, const Degree& m, const Degree& n);

/// Re-enumerates every path the witness speaks about.
bool verify_periodicity_witness(const KGraph& lambda, const PeriodicityWitness& w);

struct SeparatingPath {
  CubeMorphism lambda;
  std::vector<CubeMorphism> pieces;  // mu_1 .. mu_p, lambda'
  std::size_t pairs_verified = 0;
};

/// The construction mu_1 ... mu_p lambda' for vertex v and bound l, verified
/// by brute force over all alpha != beta in Lambda v with d <= l. Throws
/// ErrorKind::Inconclusive naming the pair whose separator was not found
/// within search_bound.
SeparatingPath separating_path(const KGraph& lambda, Vertex v, const Degree& l,
                               const Degree& search_bound);

/// Brute-force check of the separating property: (alpha lambda)(0, d(lambda))
/// pairwise distinct for alpha in Lambda r(lambda), d(alpha) <= l. Returns the
/// number of alphas compared, or nullopt on a collision.
std::optional<std::size_t> verify_separating(const KGraph& lambda, const CubeMorphism& path,
                                             const Degree& l);

/// u in the forward closure of w whose own closure misses that of v.
struct CofinalityCertificate {
  Vertex v{};
  Vertex w{};
  Vertex u{};
};

struct CofinalPairWitness {
  Vertex v{};
  Vertex w{};
  Degree n;
};

struct CofinalityVerdict {
  Status status = Status::Inconclusive;
  std::optional<CofinalityCertificate> certificate;
  std::vector<CofinalPairWitness> witnesses;
  std::vector<std::pair<Vertex, Vertex>> unresolved;
  Degree n_bound;
};

/// {s(lambda) : lambda in v Lambda}, as a membership table.
std::vector<bool> reach(const ColouredGraph& g, Vertex v);

/// {s(lambda) : lambda in w Lambda^n} by propagating one colour at a time.
std::vector<bool> sources_at_degree(const ColouredGraph& g, Vertex w, const Degree& n);

/// Certificate for the pair (v, w) if one exists (u = w preferred).
std::optional<CofinalityCertificate> cofinality_certificate(const ColouredGraph& g, Vertex v,
                                                            Vertex w);

/// Throws ErrorKind::Precondition unless row-finite with no sources.
CofinalityVerdict check_cofinal(const KGraph& lambda, const Degree& n_bound);

/// A finite prefix of an infinite path, grown in blocks of degree (1,..,1).
struct PathPrefixFamily {
  Vertex start{};
  std::vector<Edge> prefix;
  Degree counts;
  /// Block endpoints x(0), x(1_k), ..., x(depth 1_k).
  std::vector<Vertex> visited;
  /// Every vertex on the prefix receives edges of every colour.
  bool extendable = true;
};

/// A prefix of an infinite path x with v Lambda x(n) empty for all n,
/// starting at the certificate vertex for (v, w). Throws ErrorKind::Domain
/// when no certificate exists.
PathPrefixFamily noncofinal_ray(const KGraph& lambda, Vertex v, Vertex w, std::size_t depth);

struct SimplicityVerdict {
  Status status = Status::Inconclusive;
  AperiodicityVerdict aperiodicity;
  CofinalityVerdict cofinality;
};

struct SimplicityBounds {
  Degree pair_bound;
  Degree path_bound;
  Degree n_bound;
};

SimplicityVerdict simplicity_verdict(const KGraph& lambda, const SimplicityBounds& bounds);

}  // namespace kgraph
