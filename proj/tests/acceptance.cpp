// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Runs on the shared test corpus.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "kgraph/error.hpp"
#include "oracles.hpp"

using namespace kgraph;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string str(std::size_t n) { return std::to_string(n); }

Outcome fail(const std::string& why) { return {false, why}; }

// 1. Normal forms and flip classes induce the same partition of the paths
// of each length <= 6: grouping by normalize() must give exactly the BFS
// flip classes.
Outcome normalization_uniqueness() {
  std::size_t paths = 0, classes = 0;
  for (const auto& inst : fixtures::corpus()) {
    const auto l = inst.kgraph();
    const auto& g = l.graph();
    for (std::size_t len = 0; len <= 6; ++len) {
      std::map<CubeMorphism, std::vector<oracle::Word>> by_normal_form;
      if (len == 0) {
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
          ++paths;
          if (!by_normal_form.emplace(l.normalize(ColouredPath(g, Vertex{v})), std::vector<oracle::Word>{}).second)
            return fail(inst.meta.name + ": two vertices share a normal form");
        }
        classes += g.vertex_count();
        continue;
      }
      for (const auto& w : oracle::paths_of_length(g, len)) {
        ++paths;
        by_normal_form[l.normalize(ColouredPath(g, w))].push_back(w);
      }
      for (const auto& [cube, members] : by_normal_form) {
        ++classes;
        const auto cls = oracle::flip_class(g, l.squares(), members.front(), 1'000'000);
        if (!cls) return fail(inst.meta.name + ": oracle class overflow");
        const std::set<oracle::Word> grouped(members.begin(), members.end());
        if (grouped != *cls)
          return fail(inst.meta.name + ": normal-form group differs from flip class at length " + str(len));
      }
    }
  }
  return {true, str(paths) + " paths, " + str(classes) + " classes"};
}

// 2. Identity, associativity and unique factorisation, exhaustive for |m| <= 4.
Outcome kgraph_axioms() {
  std::size_t morphisms = 0, checks = 0;
  CategoryLawOptions opts;
  opts.exhaustive_norm = 4;
  for (const auto& inst : fixtures::corpus()) {
    const auto r = check_category_laws(inst.kgraph(), opts);
    if (!r.passed) return fail(inst.meta.name + ": " + r.violation.value_or("violation"));
    morphisms += r.morphisms;
    checks += r.identity_checks + r.associativity_checks + r.factorisation_checks;
  }
  return {true, str(morphisms) + " morphisms, " + str(checks) + " checks"};
}

// 3. rho : E -> skeleton of Lambda_(E,C) is an isomorphism of presentations.
Outcome skeleton_roundtrip() {
  std::size_t squares = 0;
  for (const auto& inst : fixtures::corpus()) {
    const auto r = verify_rho(inst.kgraph());
    if (!r.passed) return fail(inst.meta.name + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
    squares += r.squares_checked;
  }
  return {true, str(fixtures::corpus().size()) + " instances, " + str(squares) + " squares"};
}

// 4. theta : Gamma -> Lambda_(E,C) for Gamma = Lambda_(E',C') and E' a
// relabelled, reshuffled copy of E.
Outcome presentation_uniqueness() {
  auto corpus = fixtures::corpus();
  std::size_t elements = 0, pairs = 0;
  for (std::size_t n = 0; n < 10; ++n) {
    const auto& target = corpus[n];
    const auto [source, iso] = relabel(target, "r" + str(n) + ":", 100 + n);
    const auto gamma = source.kgraph();
    const auto sk = extract_skeleton(gamma);
    const auto rho = verify_rho(gamma);
    if (!rho.passed) return fail(source.meta.name + ": rho failed");
    // psi(<lambda_v>) = iso^-1(v): the relabelled copy maps back onto target
    ColouredIsomorphism back;
    back.vertex_map.resize(iso.vertex_map.size());
    back.edge_map.resize(iso.edge_map.size());
    for (std::size_t v = 0; v < iso.vertex_map.size(); ++v) back.vertex_map[ix(iso.vertex_map[v])] = Vertex{static_cast<std::uint32_t>(v)};
    for (std::size_t e = 0; e < iso.edge_map.size(); ++e) back.edge_map[ix(iso.edge_map[e])] = Edge{static_cast<std::uint32_t>(e)};
    ColouredIsomorphism psi;
    psi.vertex_map.resize(sk.graph->vertex_count());
    psi.edge_map.resize(sk.graph->edge_count());
    for (std::size_t v = 0; v < rho.vertex_map.size(); ++v) psi.vertex_map[ix(rho.vertex_map[v])] = back.vertex_map[v];
    for (std::size_t e = 0; e < rho.edge_map.size(); ++e) psi.edge_map[ix(rho.edge_map[e])] = back.edge_map[e];
    ThetaOptions opts;
    opts.max_norm = 4;
    const auto r = build_theta(gamma, sk, target.kgraph(), psi, opts);
    if (!r.passed) return fail(target.meta.name + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
    elements += r.elements;
    pairs += r.composable_pairs;
  }
  return {true, "10 pairs, " + str(elements) + " elements, " + str(pairs) + " composable pairs"};
}

// 5. Shuffle chains between random words with equal abelianization.
Outcome shuffle_chains() {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + rng() % 4, len = rng() % 9;
    ColourWord w;
    for (std::size_t n = 0; n < len; ++n) w.letters.push_back(static_cast<std::uint32_t>(rng() % k));
    ColourWord w2 = w;
    std::shuffle(w2.letters.begin(), w2.letters.end(), rng);
    const auto chain = shuffle_chain(w, w2);
    if (chain.empty() || chain.front() != w || chain.back() != w2) return fail("bad endpoints");
    for (std::size_t n = 1; n < chain.size(); ++n) {
      const auto j = adjacent_swap(chain[n - 1], chain[n]);
      if (!j || chain[n - 1].letters[*j] == chain[n - 1].letters[*j + 1])
        return fail("step " + str(n) + " is not a transposition of distinct letters");
    }
  }
  return {true, "500 word pairs"};
}

// 6. Flip classes per (v, m) are counted by |v Lambda^m|.
Outcome quotient_category() {
  std::size_t cells = 0;
  for (const auto& inst : fixtures::corpus()) {
    const auto r = quotient_structure_check(inst.kgraph(), 4);
    if (!r.passed) return fail(inst.meta.name + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
    for (const auto& [key, counts] : r.counts) {
      if (counts.first != counts.second) return fail(inst.meta.name + ": class count mismatch");
      ++cells;
    }
  }
  return {true, str(cells) + " (v, m) cells"};
}

// 7. Cylinders of vertices and edges at depth 3.
Outcome cylinder_checks() {
  std::size_t instances = 0, cylinders = 0;
  for (const auto& inst : fixtures::corpus()) {
    const auto l = inst.kgraph();
    if (!is_row_finite_no_sources(l).holds) continue;
    ++instances;
    std::vector<CubeMorphism> mus;
    for (std::uint32_t v = 0; v < l.graph().vertex_count(); ++v) mus.push_back(identity_at(l.graph(), Vertex{v}));
    for (std::uint32_t e = 0; e < l.graph().edge_count(); ++e) mus.push_back(edge_morphism(l.graph(), Edge{e}));
    for (const auto& mu : mus) {
      const auto r = cylinder_preimage_check(l, mu, 3);
      if (!r.passed) return fail(inst.meta.name + ": " + (r.failures.empty() ? "failed" : r.failures.front()));
      ++cylinders;
    }
  }
  return {true, str(instances) + " instances, " + str(cylinders) + " cylinders"};
}

// 8. Separating paths, verified over all alpha != beta with d <= l.
Outcome separating_paths() {
  std::size_t built = 0, alphas = 0;
  for (const auto& inst : fixtures::aperiodic_instances()) {
    const auto l = inst.kgraph();
    const auto ones = Degree::ones(l.k());
    for (std::uint32_t v = 0; v < l.graph().vertex_count(); ++v) {
      const auto sp = separating_path(l, Vertex{v}, ones, ones + ones + ones);
      const auto n = verify_separating(l, sp.lambda, ones);
      if (!n) return fail(inst.meta.name + ": collision");
      ++built;
      alphas += *n;
    }
  }
  return {true, str(built) + " paths, " + str(alphas) + " alphas compared"};
}

// 9. Simplicity verdicts with certificates, stable under doubling the bounds.
Outcome simplicity() {
  auto verdict = [](const Instance& inst, std::uint32_t scale) {
    const auto l = inst.kgraph();
    Degree p = Degree::ones(l.k());
    for (std::size_t i = 0; i < p.k(); ++i) p[i] *= 2 * scale;
    return simplicity_verdict(l, SimplicityBounds{p, p + p, p + p});
  };
  const auto torus = fixtures::torus();
  const auto split = fixtures::disjoint_union(fixtures::torus(), fixtures::torus());
  const auto free = fixtures::free_2b2r();
  for (std::uint32_t scale : {1u, 2u}) {
    const auto t = verdict(torus, scale);
    if (t.status != Status::Fails || !t.aperiodicity.witness ||
        !verify_periodicity_witness(torus.kgraph(), *t.aperiodicity.witness))
      return fail("torus: expected not-simple with a periodicity witness");
    const auto d = verdict(split, scale);
    if (d.status != Status::Fails || !d.cofinality.certificate)
      return fail("disjoint tori: expected not-simple with a cofinality certificate");
    const auto f = verdict(free, scale);
    if (f.status != Status::Holds) return fail("free 2b2r: expected simple, got " + std::string(to_string(f.status)));
  }
  return {true, "torus, disjoint tori, free 2b2r at (2,2)/(4,4) and (4,4)/(8,8)"};
}

// 10. The PRW 2-graph for T = {0, e1, e2}, q = 2.
Outcome prw_example() {
  BasicData data;
  data.T = {{0, 0}, {1, 0}, {0, 1}};
  data.q = 2;
  data.t = 0;
  data.w = {1, 1, 1};
  const auto r = prw_2graph(data, Degree{2, 2});
  std::size_t functions = 0;
  for (const auto& c : r.checks) {
    if (!c.passed()) return fail("degree " + c.m.to_string() + ": " + str(c.functions) + " functions, " + str(c.cubes) + " cubes");
    functions += c.functions;
  }
  if (r.checks.size() != 9) return fail("expected 9 degrees");
  return {true, "9 degrees, " + str(functions) + " functions"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"normalization uniqueness", normalization_uniqueness},
      {"k-graph axioms", kgraph_axioms},
      {"skeleton round trip", skeleton_roundtrip},
      {"presentation uniqueness", presentation_uniqueness},
      {"shuffle chains", shuffle_chains},
      {"quotient category", quotient_category},
      {"cylinder checks", cylinder_checks},
      {"separating path", separating_paths},
      {"simplicity verdicts", simplicity},
      {"PRW example", prw_example},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[n].second();
    } catch (const std::exception& e) {
      out = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu %-26s %s  %s (%.1fs)\n", n + 1, criteria[n].first, out.pass ? "PASS" : "FAIL",
                out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
