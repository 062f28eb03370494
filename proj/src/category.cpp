#include "kgraph/category.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <unordered_map>

#include "kgraph/error.hpp"

namespace kgraph {

KGraph::KGraph(std::shared_ptr<const ColouredGraph> graph, SquareCollection squares)
    : graph_(std::move(graph)), squares_(std::move(squares)) {
  if (!graph_) throw Error(ErrorKind::Domain, "KGraph needs a graph");
  const auto completeness = check_complete(*graph_, squares_);
  complete_ = completeness.complete;
  if (!complete_) {
    const auto& v = completeness.violations.front();
    problem_ = "incomplete: 2-path " + graph_->id(v.first) + "," + graph_->id(v.second) +
               " has " + std::to_string(v.owners) + " owning squares";
    return;
  }
  const auto assoc = check_associative(*graph_, squares_);
  associative_ = assoc.associative;
  if (!associative_) {
    const auto& r = assoc.violations.front();
    problem_ = "not associative at " + graph_->id(r.f) + "," + graph_->id(r.g) + "," +
               graph_->id(r.h);
  }
}

void KGraph::require_valid() const {
  if (!valid()) throw Error(ErrorKind::Precondition, "square collection rejected: " + problem_);
}

CubeMorphism KGraph::normalize(const ColouredPath& x) const {
  return kgraph::normalize(*graph_, squares_, x, cell_budget_);
}

CubeMorphism KGraph::compose(const CubeMorphism& mu, const CubeMorphism& nu) const {
  return kgraph::compose(*graph_, squares_, mu, nu, cell_budget_);
}

void for_each_path_of_degree(const KGraph& lambda, std::optional<Vertex> v, const Degree& m,
                             const std::function<bool(const CubeMorphism&)>& visit,
                             const EnumerationOptions& options) {
  lambda.require_valid();
  const ColouredGraph& g = lambda.graph();
  if (m.k() != g.k()) throw Error(ErrorKind::Domain, "degree has the wrong rank");
  const ColourWord word = options.word.value_or(canonical_word(m));
  if (abelianize(word, g.k()) != m)
    throw Error(ErrorKind::Domain,
                "word " + word.to_string() + " does not have shape " + m.to_string());

  std::size_t emitted = 0;
  const std::size_t len = word.size();
  std::vector<Vertex> roots;
  if (v) {
    if (ix(*v) >= g.vertex_count()) throw Error(ErrorKind::UnknownId, "unknown vertex");
    roots.push_back(*v);
  } else {
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u) roots.push_back(Vertex{u});
  }

  // Depth-first over E-paths with colour word `word`; each prefix keeps its
  // own partially built cube so siblings share the work above them.
  for (Vertex root : roots) {
    std::vector<CubeBuilder> stack;
    stack.reserve(len + 1);
    stack.emplace_back(g, lambda.squares(), root, lambda.cell_budget());
    stack.back().reserve(m);
    std::vector<std::size_t> choice(len + 1, 0);
    while (!stack.empty()) {
      const std::size_t depth = stack.size() - 1;
      if (depth == len) {
        if (++emitted > options.max_paths)
          throw Error(ErrorKind::EnumerationLimit,
                      "more than " + std::to_string(options.max_paths) + " paths of degree " +
                          m.to_string());
        if (!visit(stack.back().cube())) return;
        stack.pop_back();
        continue;
      }
      const auto next = g.edges_into(stack.back().source(), word.letters[depth]);
      if (choice[depth] >= next.size()) {
        choice[depth] = 0;
        stack.pop_back();
        continue;
      }
      CubeBuilder child = stack.back();
      child.extend(next[choice[depth]++]);
      stack.push_back(std::move(child));
    }
  }
}

std::vector<CubeMorphism> paths_of_degree(const KGraph& lambda, std::optional<Vertex> v,
                                          const Degree& m, const EnumerationOptions& options) {
  std::vector<CubeMorphism> out;
  for_each_path_of_degree(
      lambda, v, m,
      [&out](const CubeMorphism& c) {
        out.push_back(c);
        return true;
      },
      options);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RowFiniteReport is_row_finite_no_sources(const ColouredGraph& g) {
  RowFiniteReport report;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
    for (Colour c = 0; c < g.k(); ++c)
      if (g.edges_into(Vertex{v}, c).empty()) report.violations.emplace_back(Vertex{v}, c);
  report.holds = report.violations.empty();
  return report;
}

std::string canonical_name(const ColouredGraph& g, const CubeMorphism& lambda) {
  if (lambda.degree().is_zero()) return g.id(lambda.range());
  const auto x = traversal(g, lambda, canonical_word(lambda.degree()));
  std::string out;
  for (Edge e : x.edges()) {
    if (!out.empty()) out += '.';
    out += g.id(e);
  }
  return out;
}

// --- category laws ---------------------------------------------------------

namespace {

struct LawChecker {
  const KGraph& lambda;
  CategoryLawReport& report;

  bool fail(std::string why) {
    if (report.passed) {
      report.passed = false;
      report.violation = std::move(why);
    }
    return false;
  }

  std::string name(const CubeMorphism& c) const {
    return canonical_name(lambda.graph(), c) + " " + c.degree().to_string();
  }

  bool identities(const CubeMorphism& l) {
    ++report.identity_checks;
    const auto& g = lambda.graph();
    if (lambda.compose(identity_at(g, l.range()), l) != l)
      return fail("left identity fails at " + name(l));
    if (lambda.compose(l, identity_at(g, l.source())) != l)
      return fail("right identity fails at " + name(l));
    return true;
  }

  // l split into three consecutive segments and put back both ways.
  bool associativity(const CubeMorphism& l, const Degree& n1, const Degree& n2) {
    ++report.associativity_checks;
    const auto a = segment(l, Degree(l.k()), n1);
    const auto b = segment(l, n1, n2);
    const auto c = segment(l, n2, l.degree());
    const auto left = lambda.compose(lambda.compose(a, b), c);
    const auto right = lambda.compose(a, lambda.compose(b, c));
    if (left != right)
      return fail("(ab)c != a(bc) splitting " + name(l) + " at " + n1.to_string() + "," +
                  n2.to_string());
    if (left != l)
      return fail("segments of " + name(l) + " do not recompose to it");
    if (left.degree() != a.degree() + b.degree() + c.degree())
      return fail("degree is not additive on " + name(l));
    return true;
  }
};

Degree all_equal(std::size_t k, std::uint32_t value) {
  Degree d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = value;
  return d;
}

}  // namespace

CategoryLawReport check_category_laws(const KGraph& lambda, const CategoryLawOptions& options) {
  lambda.require_valid();
  CategoryLawReport report;
  LawChecker check{lambda, report};
  const auto& g = lambda.graph();
  const std::size_t k = g.k();

  std::map<Degree, std::vector<CubeMorphism>> level;
  for (const auto& m : degrees_by_norm(all_equal(k, options.exhaustive_norm))) {
    if (m.norm() > options.exhaustive_norm) continue;
    level[m] = paths_of_degree(lambda, std::nullopt, m);
    report.morphisms += level[m].size();
  }

  for (const auto& [m, paths] : level) {
    for (const auto& l : paths) {
      if (!check.identities(l)) return report;
      const auto below = degrees_between(Degree(k), m);
      for (const auto& n1 : below)
        for (const auto& n2 : degrees_between(n1, m))
          if (!check.associativity(l, n1, n2)) return report;
    }
    // unique factorisation: (mu, nu) -> mu nu is a bijection onto Lambda^m
    for (const auto& n : degrees_between(Degree(k), m)) {
      ++report.factorisation_checks;
      const auto& left = level.at(n);
      std::unordered_map<std::uint32_t, std::vector<const CubeMorphism*>> by_range;
      for (const auto& nu : level.at(m - n)) by_range[ix(nu.range())].push_back(&nu);
      std::map<CubeMorphism, std::size_t> hits;
      for (const auto& mu : left) {
        auto it = by_range.find(ix(mu.source()));
        if (it == by_range.end()) continue;
        for (const auto* nu : it->second) {
          auto composite = lambda.compose(mu, *nu);
          if (composite.degree() != m)
            {
            check.fail("d(mu nu) != d(mu) + d(nu) for " + check.name(mu) + " and " +
                              check.name(*nu));
            return report;
          }
          if (auto bad = cube_defect(g, composite, &lambda.squares()))
            {
            check.fail("composite is not C-compatible: " + *bad);
            return report;
          }
          ++hits[std::move(composite)];
        }
      }
      for (const auto& l : paths) {
        auto it = hits.find(l);
        const std::size_t count = it == hits.end() ? 0 : it->second;
        if (count != 1)
          {
            check.fail(check.name(l) + " has " + std::to_string(count) +
                            " factorisations through degree " + n.to_string());
            return report;
          }
        const auto [mu, nu] = factorise(l, n);
        if (lambda.compose(mu, nu) != l)
          {
            check.fail("factorise does not invert compose on " + check.name(l));
            return report;
          }
      }
      if (hits.size() != paths.size())
        {
            check.fail("composites of degree " + m.to_string() +
                          " include cubes missing from the enumeration");
            return report;
          }
    }
  }

  // Random longer paths above the exhaustive bound.
  std::mt19937_64 rng(options.seed);
  std::size_t attempts = 0;
  while (report.sampled < options.samples && attempts < options.samples * 20 &&
         g.vertex_count() > 0) {
    ++attempts;
    const std::size_t len = options.exhaustive_norm + 1 + rng() % 2;
    Vertex at{static_cast<std::uint32_t>(rng() % g.vertex_count())};
    std::vector<Edge> edges;
    for (std::size_t t = 0; t < len; ++t) {
      const auto into = g.edges_into(at);
      if (into.empty()) break;
      const Edge e = into[rng() % into.size()];
      edges.push_back(e);
      at = g.source(e);
    }
    if (edges.size() != len) continue;
    const auto l = lambda.normalize(ColouredPath(g, std::move(edges)));
    const auto below = degrees_between(Degree(k), l.degree());
    const auto& n1 = below[rng() % below.size()];
    const auto above = degrees_between(n1, l.degree());
    const auto& n2 = above[rng() % above.size()];
    ++report.sampled;
    if (!check.identities(l) || !check.associativity(l, n1, n2)) return report;
  }
  return report;
}

}  // namespace kgraph
