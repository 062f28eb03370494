#include <doctest.h>

#include <deque>
#include <random>

#include "fixtures.hpp"
#include "kgraph/error.hpp"
#include "oracles.hpp"

using namespace kgraph;

namespace {

Instance two_tori() { return fixtures::disjoint_union(fixtures::torus(), fixtures::torus()); }

Instance cycle_product(std::size_t n) { return product_of_1graphs({cycle_graph(n), bouquet_graph(1)}); }

/// Sources of paths with range v, by breadth-first search along edges
/// read right to left (range -> source).
std::set<std::uint32_t> oracle_reach(const ColouredGraph& g, Vertex v) {
  std::set<std::uint32_t> seen{ix(v)};
  std::deque<Vertex> todo{v};
  while (!todo.empty()) {
    const Vertex x = todo.front();
    todo.pop_front();
    for (std::uint32_t e = 0; e < g.edge_count(); ++e)
      if (g.range(Edge{e}) == x && seen.insert(ix(g.source(Edge{e}))).second) todo.push_back(g.source(Edge{e}));
  }
  return seen;
}

/// Independent check that lambda separates: for every alpha with s(alpha) =
/// r(lambda) and d(alpha) <= l, (alpha lambda)(0, d(lambda)) is alpha lambda_1
/// where lambda_1 = lambda(0, d(lambda) - d(alpha)); that cube is rebuilt from
/// the flip class of the concatenated word.
std::optional<std::size_t> oracle_separating(const KGraph& l, const CubeMorphism& path, const Degree& bound) {
  const auto& g = l.graph();
  std::set<CubeMorphism> heads;
  std::size_t alphas = 0;
  for (const auto& m : degrees_between(Degree(g.k()), bound)) {
    REQUIRE(m.leq(path.degree()));
    const auto head_of_lambda = restrict(path, Degree(g.k()), path.degree() - m);
    const auto tail_word = traversal(g, head_of_lambda, canonical_word(head_of_lambda.degree()));
    const auto all = oracle::paths_of_degree(g, l.squares(), std::nullopt, m);
    REQUIRE(all);
    for (const auto& alpha : *all) {
      if (alpha.source() != path.range()) continue;
      ++alphas;
      auto word = traversal(g, alpha, canonical_word(m)).edges();
      for (Edge e : tail_word.edges()) word.push_back(e);
      const Vertex start = word.empty() ? alpha.range() : g.range(word.front());
      const auto joined = oracle::normalize(g, l.squares(), start, word, 200'000);
      INFO("alpha degree " << m.to_string() << ", lambda degree " << path.degree().to_string());
      REQUIRE(joined);
      if (!heads.insert(*joined).second) return std::nullopt;
    }
  }
  return alphas;
}

}  // namespace

TEST_CASE("aperiodicity: the torus is periodic") {
  const auto l = fixtures::torus().kgraph();
  const auto v = check_aperiodic(l, Degree{1, 1}, Degree{2, 2});
  CHECK(v.status == Status::Fails);
  REQUIRE(v.witness);
  CHECK(v.witness->m != v.witness->n);
  CHECK(verify_periodicity_witness(l, *v.witness));
}

TEST_CASE("aperiodicity: a cycle is periodic") {
  // 3-cycle in colour 1 times a loop in colour 2
  const auto l = cycle_product(3).kgraph();
  const auto v = check_aperiodic(l, Degree{3, 1}, Degree{6, 4});
  CHECK(v.status == Status::Fails);
  REQUIRE(v.witness);
  CHECK(verify_periodicity_witness(l, *v.witness));
}

TEST_CASE("aperiodicity: products of bouquets hold") {
  const auto l = fixtures::free_2b2r().kgraph();
  const auto v = check_aperiodic(l, Degree{2, 2}, Degree{4, 4});
  CHECK(v.status == Status::Holds);
  CHECK_FALSE(v.witness);
  CHECK(v.separated == v.pairs);
  CHECK(v.unresolved == 0);
}

TEST_CASE("aperiodicity: every fixture instance holds") {
  for (const auto& inst : fixtures::aperiodic_instances()) {
    const auto l = inst.kgraph();
    const auto ones = Degree::ones(l.k());
    const auto v = check_aperiodic(l, ones, ones + ones);
    INFO(inst.meta.name);
    CHECK(v.status == Status::Holds);
  }
}

TEST_CASE("aperiodicity: no slack beyond m v n is inconclusive, not periodic") {
  // at d = m v n only the vertices at m and n are compared; a one-vertex
  // graph can never separate there
  const auto l = fixtures::free_2b2r().kgraph();
  const auto v = check_aperiodic(l, Degree{2, 2}, Degree{2, 2});
  CHECK(v.status == Status::Inconclusive);
  CHECK_FALSE(v.witness);
  CHECK(v.unresolved > 0);
  CHECK(check_aperiodic_serial(l, Degree{2, 2}, Degree{2, 2}).status == Status::Inconclusive);
}

TEST_CASE("aperiodicity: sources are rejected") {
  const auto l = omega(2, Degree{1, 1}).kgraph();
  CHECK_THROWS_AS(check_aperiodic(l, Degree{1, 1}, Degree{2, 2}), Error);
}

TEST_CASE("aperiodicity: starved budgets are inconclusive, never a verdict") {
  const auto l = fixtures::free_2b2r().kgraph();
  AperiodicityOptions opts;
  opts.pair_budget = 1;
  const auto v = check_aperiodic(l, Degree{2, 2}, Degree{4, 4}, opts);
  CHECK(v.status != Status::Fails);
}

TEST_CASE("property: parallel and serial aperiodicity agree") {
  std::vector<Instance> all = fixtures::corpus();
  for (auto& inst : fixtures::aperiodic_instances()) all.push_back(std::move(inst));
  for (const auto& inst : all) {
    const auto l = inst.kgraph();
    if (!is_row_finite_no_sources(l).holds) continue;
    const auto ones = Degree::ones(l.k());
    const auto a = check_aperiodic(l, ones, ones + ones);
    const auto b = check_aperiodic_serial(l, ones, ones + ones);
    CHECK(a.status == b.status);
    CHECK(a.pairs == b.pairs);
    CHECK(a.separated == b.separated);
    CHECK(a.unresolved == b.unresolved);
    CHECK(a.witness.has_value() == b.witness.has_value());
    if (a.witness && b.witness) {
      CHECK(a.witness->v == b.witness->v);
      CHECK(a.witness->m == b.witness->m);
      CHECK(a.witness->n == b.witness->n);
    }
  }
}

TEST_CASE("separates") {
  const auto l = fixtures::free_2b2r().kgraph();
  const auto& g = l.graph();
  const auto x = l.normalize(ColouredPath(g, {g.edge("f0"), g.edge("g1")}));
  // d - m v n = 0: only the vertices at m and n are compared, and there is one vertex
  CHECK_FALSE(separates(x, Degree{1, 0}, Degree{0, 1}));
  CHECK_FALSE(separates(x, Degree{1, 0}, Degree{1, 0}));
  // f0 f1 g1: the blue edge at (1,0) is f1, the one at (0,1) is f0
  const auto y = l.normalize(ColouredPath(g, {g.edge("f0"), g.edge("f1"), g.edge("g1")}));
  CHECK(separates(y, Degree{1, 0}, Degree{0, 1}));
  CHECK(segment(y, Degree{1, 0}, Degree{2, 0}) != segment(y, Degree{0, 1}, Degree{1, 1}));
}

TEST_CASE("separating paths are verified independently") {
  for (const auto& inst : fixtures::aperiodic_instances()) {
    const auto l = inst.kgraph();
    const auto& g = l.graph();
    const auto ones = Degree::ones(l.k());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      const auto sp = separating_path(l, Vertex{v}, ones, ones + ones + ones);
      INFO(inst.meta.name);
      CHECK(sp.lambda.range() == Vertex{v});
      const auto mine = verify_separating(l, sp.lambda, ones);
      REQUIRE(mine);
      CHECK(*mine == sp.pairs_verified);
      // flip-class reconstruction is exponential in |d(lambda)|; only the
      // k = 2 paths (|d| <= 18) are small enough for it
      if (sp.lambda.degree().norm() > 18) continue;
      const auto theirs = oracle_separating(l, sp.lambda, ones);
      REQUIRE(theirs);
      CHECK(*mine == *theirs);
    }
  }
}

TEST_CASE("separating path: periodic instances are inconclusive") {
  const auto l = fixtures::torus().kgraph();
  try {
    separating_path(l, Vertex{0}, Degree{1, 1}, Degree{3, 3});
    FAIL("expected an inconclusive result");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Inconclusive);
  }
  // the torus has a single path of each degree: nothing to separate at l = 0
  CHECK(verify_separating(l, identity_at(l.graph(), Vertex{0}), Degree{0, 0}) == std::optional<std::size_t>(1));
  CHECK_FALSE(verify_separating(l, identity_at(l.graph(), Vertex{0}), Degree{1, 1}));
}

TEST_CASE("property: reach agrees with a breadth-first oracle") {
  std::vector<Instance> all = fixtures::corpus();
  all.push_back(two_tori());
  all.push_back(fixtures::disjoint_union(cycle_product(2), cycle_product(3)));
  for (const auto& inst : all) {
    const auto& g = *inst.graph;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      const auto mine = reach(g, Vertex{v});
      const auto theirs = oracle_reach(g, Vertex{v});
      for (std::uint32_t u = 0; u < g.vertex_count(); ++u) CHECK(mine[u] == (theirs.count(u) == 1));
    }
  }
}

TEST_CASE("property: sources_at_degree agrees with path enumeration") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto l = fixtures::random_k2(seed).kgraph();
    const auto& g = l.graph();
    for (const Degree& n : {Degree{1, 0}, Degree{1, 2}, Degree{2, 2}})
      for (std::uint32_t w = 0; w < g.vertex_count(); ++w) {
        std::vector<bool> expect(g.vertex_count(), false);
        for (const auto& p : paths_of_degree(l, Vertex{w}, n)) expect[ix(p.source())] = true;
        CHECK(sources_at_degree(g, Vertex{w}, n) == expect);
      }
  }
}

TEST_CASE("cofinality") {
  const auto torus = fixtures::torus().kgraph();
  const auto t = check_cofinal(torus, Degree{1, 1});
  CHECK(t.status == Status::Holds);
  REQUIRE(t.witnesses.size() == 1);
  CHECK(t.witnesses.front().n == Degree{0, 0});

  const auto c = check_cofinal(cycle_product(3).kgraph(), Degree{2, 2});
  CHECK(c.status == Status::Holds);

  const auto split = two_tori();
  const auto d = check_cofinal(split.kgraph(), Degree{2, 2});
  CHECK(d.status == Status::Fails);
  REQUIRE(d.certificate);
  const auto& g = *split.graph;
  const auto rv = reach(g, d.certificate->v);
  const auto ru = reach(g, d.certificate->u);
  CHECK(reach(g, d.certificate->w)[ix(d.certificate->u)]);
  for (std::uint32_t x = 0; x < g.vertex_count(); ++x) CHECK_FALSE((rv[x] && ru[x]));

  CHECK_FALSE(cofinality_certificate(*fixtures::torus().graph, Vertex{0}, Vertex{0}));
  CHECK_THROWS_AS(check_cofinal(omega(2, Degree{1, 1}).kgraph(), Degree{1, 1}), Error);
}

TEST_CASE("noncofinal ray on disjoint cycles") {
  const auto inst = fixtures::disjoint_union(cycle_product(2), cycle_product(3));
  const auto l = inst.kgraph();
  const auto& g = *inst.graph;
  const Vertex v = g.vertex("A:(0,0)");
  const Vertex w = g.vertex("B:(0,0)");
  const auto ray = noncofinal_ray(l, v, w, 3);
  CHECK(ray.extendable);
  CHECK(ray.visited.size() == 4);
  CHECK(ray.counts == Degree{3, 3});
  CHECK(ray.prefix.size() == 6);
  const auto rv = reach(g, v);
  for (Vertex x : ray.visited) {
    const auto rx = reach(g, x);
    for (std::uint32_t y = 0; y < g.vertex_count(); ++y) CHECK_FALSE((rv[y] && rx[y]));
  }
  // consecutive edges compose
  CHECK_NOTHROW(ColouredPath(g, ray.prefix));
  CHECK_THROWS_AS(noncofinal_ray(l, v, g.vertex("A:(1,0)"), 3), Error);
}

TEST_CASE("simplicity verdicts") {
  const auto bounds = [](std::size_t k, std::uint32_t scale) {
    Degree p = Degree::ones(k);
    for (std::size_t i = 0; i < k; ++i) p[i] *= scale;
    return SimplicityBounds{p, p + p, p + p};
  };
  struct Case {
    Instance inst;
    Status expect;
  };
  std::vector<Case> cases;
  cases.push_back({fixtures::torus(), Status::Fails});
  cases.push_back({fixtures::free_2b2r(), Status::Holds});
  cases.push_back({two_tori(), Status::Fails});
  cases.push_back({fixtures::disjoint_union(fixtures::free_2b2r(), fixtures::free_2b2r()), Status::Fails});
  for (const auto& c : cases) {
    const auto l = c.inst.kgraph();
    INFO(c.inst.meta.name);
    const auto a = simplicity_verdict(l, bounds(l.k(), 1));
    const auto b = simplicity_verdict(l, bounds(l.k(), 2));
    CHECK(a.status == c.expect);
    CHECK(b.status == a.status);
  }
  // disjoint free copies are aperiodic but not cofinal
  const auto split = simplicity_verdict(fixtures::disjoint_union(fixtures::free_2b2r(), fixtures::free_2b2r()).kgraph(),
                                        bounds(2, 1));
  CHECK(split.aperiodicity.status == Status::Holds);
  CHECK(split.cofinality.status == Status::Fails);
}
