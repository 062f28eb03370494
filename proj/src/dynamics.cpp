#include "kgraph/dynamics.hpp"

#include <deque>
#include <exception>
#include <set>

#include "kgraph/error.hpp"

namespace kgraph {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

bool separates(const CubeMorphism& lambda, const Degree& m, const Degree& n) {
  const Degree j = m.join(n);
  const Degree l = lambda.degree() - j;
  return segment(lambda, m, m + l) != segment(lambda, n, n + l);
}

namespace {

void require_row_finite(const KGraph& lambda) {
  lambda.require_valid();
  const auto rf = is_row_finite_no_sources(lambda);
  if (!rf.holds) {
    const auto& [v, c] = rf.violations.front();
    throw Error(ErrorKind::Precondition, "vertex " + lambda.graph().id(v) +
                                             " receives no edge of colour " +
                                             std::to_string(c + 1));
  }
}

enum class PairResult { Separated, NeverSeparated, Unresolved };

struct PairTask {
  Vertex v;
  Degree m;
  Degree n;
};

struct PairOutcome {
  PairResult result = PairResult::Unresolved;
  bool over_budget = false;
  std::size_t examined = 0;
  std::optional<CubeMorphism> separator;
};

/// Slack beyond m v n that an unseparated pair needs before it counts as
/// periodic: |E^0| steps in every colour, enough for any path to revisit a
/// vertex in each colour. At d = m v n itself only two vertices are
/// compared, which says nothing about periodicity.
Degree periodicity_slack(const KGraph& lambda) {
  Degree s = Degree::ones(lambda.k());
  for (std::size_t i = 0; i < s.k(); ++i) s[i] = static_cast<std::uint32_t>(lambda.graph().vertex_count());
  return s;
}

PairOutcome search_pair(const KGraph& lambda, Vertex v, const Degree& m, const Degree& n,
                        const Degree& bound, std::size_t budget) {
  PairOutcome out;
  const Degree j = m.join(n);
  if (!j.leq(bound)) return out;
  try {
    for (const auto& d : degrees_by_norm(bound)) {
      if (!j.leq(d)) continue;
      for_each_path_of_degree(lambda, v, d, [&](const CubeMorphism& c) {
        if (++out.examined > budget)
          throw Error(ErrorKind::EnumerationLimit, "pair budget exhausted");
        if (!separates(c, m, n)) return true;
        out.separator = c;
        return false;
      });
      if (out.separator) {
        out.result = PairResult::Separated;
        return out;
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EnumerationLimit) throw;
    out.over_budget = true;
    return out;
  }
  if ((j + periodicity_slack(lambda)).leq(bound)) out.result = PairResult::NeverSeparated;
  return out;
}

std::vector<PairTask> pair_tasks(const KGraph& lambda, const Degree& pair_bound) {
  std::vector<PairTask> tasks;
  const auto degrees = degrees_between(Degree(lambda.k()), pair_bound);
  for (std::uint32_t v = 0; v < lambda.graph().vertex_count(); ++v)
    for (std::size_t a = 0; a < degrees.size(); ++a)
      for (std::size_t b = a + 1; b < degrees.size(); ++b)
        tasks.push_back({Vertex{v}, degrees[a], degrees[b]});
  return tasks;
}

AperiodicityVerdict summarize(const std::vector<PairTask>& tasks,
                              const std::vector<PairOutcome>& outcomes, const Degree& pair_bound,
                              const Degree& path_bound) {
  AperiodicityVerdict verdict;
  verdict.pair_bound = pair_bound;
  verdict.path_bound = path_bound;
  verdict.pairs = tasks.size();
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    switch (outcomes[t].result) {
      case PairResult::Separated: ++verdict.separated; break;
      case PairResult::Unresolved: ++verdict.unresolved; break;
      case PairResult::NeverSeparated:
        if (!verdict.witness)
          verdict.witness =
              PeriodicityWitness{tasks[t].v, tasks[t].m, tasks[t].n, path_bound, outcomes[t].examined};
        break;
    }
  }
  if (verdict.witness) {
    verdict.status = Status::Fails;
    verdict.note = "periodic up to the path bound";
  } else if (verdict.unresolved > 0) {
    verdict.status = Status::Inconclusive;
    verdict.note = std::to_string(verdict.unresolved) +
                   " pairs unresolved within the path bound or budget";
  } else {
    verdict.status = Status::Holds;
    verdict.note = "every pair up to the pair bound is separated";
  }
  return verdict;
}

}  // namespace

AperiodicityVerdict check_aperiodic_serial(const KGraph& lambda, const Degree& pair_bound,
                                           const Degree& path_bound,
                                           const AperiodicityOptions& options) {
  require_row_finite(lambda);
  const auto tasks = pair_tasks(lambda, pair_bound);
  std::vector<PairOutcome> outcomes;
  outcomes.reserve(tasks.size());
  for (const auto& t : tasks)
    outcomes.push_back(search_pair(lambda, t.v, t.m, t.n, path_bound, options.pair_budget));
  return summarize(tasks, outcomes, pair_bound, path_bound);
}

AperiodicityVerdict check_aperiodic(const KGraph& lambda, const Degree& pair_bound,
                                    const Degree& path_bound,
                                    const AperiodicityOptions& options) {
  require_row_finite(lambda);
  const auto tasks = pair_tasks(lambda, pair_bound);
  const auto count = static_cast<std::int64_t>(tasks.size());
  std::vector<PairOutcome> outcomes(tasks.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < count; ++t) {
    try {
      const auto& task = tasks[t];
      outcomes[t] = search_pair(lambda, task.v, task.m, task.n, path_bound, options.pair_budget);
    } catch (...) {
#pragma omp critical(kgraph_aperiodic_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(tasks, outcomes, pair_bound, path_bound);
}

std::optional<CubeMorphism> find_separator(const KGraph& lambda, Vertex v, const Degree& m,
                                           const Degree& n, const Degree& bound,
                                           std::size_t budget) {
  auto out = search_pair(lambda, v, m, n, bound, budget);
  if (out.over_budget)
    throw Error(ErrorKind::EnumerationLimit, "separator search exceeded its budget");
  return out.separator;
}

bool verify_periodicity_witness(const KGraph& lambda, const PeriodicityWitness& w) {
  const Degree j = w.m.join(w.n);
  if (w.m == w.n || !j.leq(w.bound)) return false;
  for (const auto& d : degrees_between(j, w.bound))
    for (const auto& c : paths_of_degree(lambda, w.v, d))
      if (separates(c, w.m, w.n)) return false;
  return true;
}

std::optional<std::size_t> verify_separating(const KGraph& lambda, const CubeMorphism& path,
                                             const Degree& l) {
  const Vertex v = path.range();
  std::set<CubeMorphism> seen;
  std::size_t alphas = 0;
  for (const auto& d : degrees_between(Degree(lambda.k()), l)) {
    for (const auto& alpha : paths_of_degree(lambda, std::nullopt, d)) {
      if (alpha.source() != v) continue;
      ++alphas;
      auto key = restrict(lambda.compose(alpha, path), Degree(lambda.k()), path.degree());
      if (!seen.insert(std::move(key)).second) return std::nullopt;
    }
  }
  return alphas;
}

SeparatingPath separating_path(const KGraph& lambda, Vertex v, const Degree& l,
                               const Degree& search_bound) {
  require_row_finite(lambda);
  const ColouredGraph& g = lambda.graph();
  SeparatingPath out;
  Vertex at = v;
  const auto degrees = degrees_between(Degree(lambda.k()), l);
  for (std::size_t a = 0; a < degrees.size(); ++a) {
    for (std::size_t b = a + 1; b < degrees.size(); ++b) {
      const auto& m = degrees[a];
      const auto& n = degrees[b];
      std::optional<CubeMorphism> mu;
      try {
        mu = find_separator(lambda, at, m, n, search_bound);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::EnumerationLimit) throw;
      }
      if (!mu)
        throw Error(ErrorKind::Inconclusive, "no path from " + g.id(at) + " separates " +
                                                 m.to_string() + " and " + n.to_string() +
                                                 " within " + search_bound.to_string());
      at = mu->source();
      out.pieces.push_back(std::move(*mu));
    }
  }
  std::optional<CubeMorphism> tail;
  for_each_path_of_degree(lambda, at, l, [&tail](const CubeMorphism& c) {
    tail = c;
    return false;
  });
  if (!tail) throw Error(ErrorKind::Precondition, "no path of degree " + l.to_string());
  out.pieces.push_back(*tail);

  out.lambda = identity_at(g, v);
  for (const auto& piece : out.pieces) out.lambda = lambda.compose(out.lambda, piece);
  const auto verified = verify_separating(lambda, out.lambda, l);
  if (!verified)
    throw Error(ErrorKind::Inconclusive, "constructed path failed the separation check");
  out.pairs_verified = *verified;
  return out;
}

// --- cofinality ------------------------------------------------------------

std::vector<bool> reach(const ColouredGraph& g, Vertex v) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<Vertex> queue{v};
  seen[ix(v)] = true;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Edge e : g.edges_into(x)) {
      const Vertex y = g.source(e);
      if (!seen[ix(y)]) {
        seen[ix(y)] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::vector<bool> sources_at_degree(const ColouredGraph& g, Vertex w, const Degree& n) {
  std::vector<bool> at(g.vertex_count(), false);
  at[ix(w)] = true;
  for (Colour i = 0; i < g.k(); ++i) {
    for (std::uint32_t step = 0; step < n[i]; ++step) {
      std::vector<bool> next(g.vertex_count(), false);
      for (std::uint32_t x = 0; x < g.vertex_count(); ++x)
        if (at[x])
          for (Edge e : g.edges_into(Vertex{x}, i)) next[ix(g.source(e))] = true;
      at = std::move(next);
    }
  }
  return at;
}

namespace {

bool disjoint(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

std::optional<CofinalityCertificate> cofinality_certificate(const ColouredGraph& g, Vertex v,
                                                            Vertex w) {
  const auto rv = reach(g, v);
  const auto fw = reach(g, w);
  if (disjoint(fw, rv)) return CofinalityCertificate{v, w, w};
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    if (fw[u] && disjoint(reach(g, Vertex{u}), rv)) return CofinalityCertificate{v, w, Vertex{u}};
  return std::nullopt;
}

CofinalityVerdict check_cofinal(const KGraph& lambda, const Degree& n_bound) {
  require_row_finite(lambda);
  const ColouredGraph& g = lambda.graph();
  const std::size_t nv = g.vertex_count();
  CofinalityVerdict verdict;
  verdict.n_bound = n_bound;

  std::vector<std::vector<bool>> closure(nv);
  for (std::uint32_t v = 0; v < nv; ++v) closure[v] = reach(g, Vertex{v});
  const auto degrees = degrees_by_norm(n_bound);

  for (std::uint32_t v = 0; v < nv; ++v) {
    for (std::uint32_t w = 0; w < nv; ++w) {
      if (!verdict.certificate) {
        if (disjoint(closure[w], closure[v])) {
          verdict.certificate = CofinalityCertificate{Vertex{v}, Vertex{w}, Vertex{w}};
        } else {
          for (std::uint32_t u = 0; u < nv && !verdict.certificate; ++u)
            if (closure[w][u] && disjoint(closure[u], closure[v]))
              verdict.certificate = CofinalityCertificate{Vertex{v}, Vertex{w}, Vertex{u}};
        }
        if (verdict.certificate) continue;
      }
      bool found = false;
      for (const auto& n : degrees) {
        const auto at = sources_at_degree(g, Vertex{w}, n);
        bool inside = true;
        for (std::uint32_t u = 0; u < nv; ++u)
          if (at[u] && !closure[v][u]) inside = false;
        if (inside) {
          verdict.witnesses.push_back({Vertex{v}, Vertex{w}, n});
          found = true;
          break;
        }
      }
      if (!found) verdict.unresolved.emplace_back(Vertex{v}, Vertex{w});
    }
  }
  if (verdict.certificate)
    verdict.status = Status::Fails;
  else if (verdict.unresolved.empty())
    verdict.status = Status::Holds;
  else
    verdict.status = Status::Inconclusive;
  return verdict;
}

PathPrefixFamily noncofinal_ray(const KGraph& lambda, Vertex v, Vertex w, std::size_t depth) {
  require_row_finite(lambda);
  const ColouredGraph& g = lambda.graph();
  const auto cert = cofinality_certificate(g, v, w);
  if (!cert)
    throw Error(ErrorKind::Domain, "no cofinality certificate for " + g.id(v) + ", " + g.id(w));
  PathPrefixFamily ray;
  ray.start = cert->u;
  ray.counts = Degree(g.k());
  Vertex at = cert->u;
  ray.visited.push_back(at);
  for (std::size_t block = 0; block < depth; ++block) {
    for (Colour i = 0; i < g.k(); ++i) {
      const auto into = g.edges_into(at, i);
      const Edge e = into.front();
      ray.prefix.push_back(e);
      ++ray.counts[i];
      at = g.source(e);
      for (Colour c = 0; c < g.k(); ++c)
        if (g.edges_into(at, c).empty()) ray.extendable = false;
    }
    ray.visited.push_back(at);
  }
  return ray;
}

SimplicityVerdict simplicity_verdict(const KGraph& lambda, const SimplicityBounds& bounds) {
  SimplicityVerdict out;
  out.aperiodicity = check_aperiodic(lambda, bounds.pair_bound, bounds.path_bound);
  out.cofinality = check_cofinal(lambda, bounds.n_bound);
  const Status a = out.aperiodicity.status, c = out.cofinality.status;
  if (a == Status::Fails || c == Status::Fails)
    out.status = Status::Fails;
  else if (a == Status::Holds && c == Status::Holds)
    out.status = Status::Holds;
  else
    out.status = Status::Inconclusive;
  return out;
}

}  // namespace kgraph
