#include "kgraph/skeleton.hpp"

#include <set>
#include <unordered_map>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

std::string bracket(const ColouredGraph& g, const CubeMorphism& c) {
  return "<" + canonical_name(g, c) + ">";
}

}  // namespace

Skeleton extract_skeleton(const KGraph& lambda) {
  lambda.require_valid();
  const ColouredGraph& g = lambda.graph();
  const std::size_t k = g.k();
  Skeleton sk;

  std::vector<std::string> vertex_ids;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (auto& c : paths_of_degree(lambda, Vertex{v}, Degree(k))) {
      sk.vertex_of.emplace(c, Vertex{static_cast<std::uint32_t>(sk.vertex_cubes.size())});
      vertex_ids.push_back(bracket(g, c));
      sk.vertex_cubes.push_back(std::move(c));
    }
  }

  auto vertex_id_of = [&](Vertex v) -> const std::string& {
    return vertex_ids[ix(sk.vertex_of.at(identity_at(g, v)))];
  };

  std::vector<EdgeSpec> edges;
  for (Colour i = 0; i < k; ++i) {
    for (auto& c : paths_of_degree(lambda, std::nullopt, Degree::unit(k, i))) {
      sk.edge_of.emplace(c, Edge{static_cast<std::uint32_t>(sk.edge_cubes.size())});
      edges.push_back({bracket(g, c), vertex_id_of(c.range()), vertex_id_of(c.source()), i});
      sk.edge_cubes.push_back(std::move(c));
    }
  }
  sk.graph = std::make_shared<const ColouredGraph>(k, vertex_ids, std::move(edges));

  // phi_lambda for lambda of degree e_i + e_j
  std::vector<Square> squares;
  for (Colour i = 0; i < k; ++i) {
    for (Colour j = i + 1; j < k; ++j) {
      const Degree ei = Degree::unit(k, i), ej = Degree::unit(k, j), top = ei + ej;
      for (auto& c : paths_of_degree(lambda, std::nullopt, top)) {
        const Degree zero(k);
        squares.push_back(Square{i, j, sk.edge_of.at(segment(c, zero, ei)),
                                 sk.edge_of.at(segment(c, ei, top)),
                                 sk.edge_of.at(segment(c, zero, ej)),
                                 sk.edge_of.at(segment(c, ej, top))});
        sk.square_cubes.push_back(std::move(c));
      }
    }
  }
  sk.squares = SquareCollection(*sk.graph, std::move(squares));
  sk.complete = check_complete(*sk.graph, sk.squares).complete;
  sk.associative = sk.complete && check_associative(*sk.graph, sk.squares).associative;
  return sk;
}

RhoReport verify_rho(const KGraph& lambda) {
  const Skeleton sk = extract_skeleton(lambda);
  const ColouredGraph& e = lambda.graph();
  const ColouredGraph& s = *sk.graph;
  RhoReport report;
  auto fail = [&report](std::string why) {
    report.passed = false;
    report.failures.push_back(std::move(why));
  };

  if (!sk.complete) fail("skeleton squares are not complete");
  if (!sk.associative) fail("skeleton squares are not associative");
  if (s.vertex_count() != e.vertex_count())
    fail("vertex counts differ: " + std::to_string(e.vertex_count()) + " vs " +
         std::to_string(s.vertex_count()));
  if (s.edge_count() != e.edge_count())
    fail("edge counts differ: " + std::to_string(e.edge_count()) + " vs " +
         std::to_string(s.edge_count()));
  if (sk.squares.size() != lambda.squares().size())
    fail("square counts differ: " + std::to_string(lambda.squares().size()) + " vs " +
         std::to_string(sk.squares.size()));

  for (std::uint32_t v = 0; v < e.vertex_count(); ++v) {
    auto it = sk.vertex_of.find(identity_at(e, Vertex{v}));
    report.vertex_map.push_back(it == sk.vertex_of.end() ? kNoVertex : it->second);
    if (it == sk.vertex_of.end()) fail("no skeleton vertex for " + e.id(Vertex{v}));
  }
  for (std::uint32_t f = 0; f < e.edge_count(); ++f) {
    auto it = sk.edge_of.find(edge_morphism(e, Edge{f}));
    report.edge_map.push_back(it == sk.edge_of.end() ? kNoEdge : it->second);
    if (it == sk.edge_of.end()) fail("no skeleton edge for " + e.id(Edge{f}));
  }
  if (!report.passed) return report;

  if (std::set<Vertex>(report.vertex_map.begin(), report.vertex_map.end()).size() !=
      report.vertex_map.size())
    fail("rho is not injective on vertices");
  if (std::set<Edge>(report.edge_map.begin(), report.edge_map.end()).size() !=
      report.edge_map.size())
    fail("rho is not injective on edges");
  for (std::uint32_t f = 0; f < e.edge_count(); ++f) {
    const Edge x{f};
    const Edge y = report.edge_map[f];
    if (s.colour(y) != e.colour(x)) fail("rho changes the colour of " + e.id(x));
    if (s.range(y) != report.vertex_map[ix(e.range(x))])
      fail("rho does not preserve the range of " + e.id(x));
    if (s.source(y) != report.vertex_map[ix(e.source(x))])
      fail("rho does not preserve the source of " + e.id(x));
  }
  for (const auto& sq : lambda.squares().squares()) {
    ++report.squares_checked;
    const Square image{sq.i, sq.j, report.edge_map[ix(sq.a)], report.edge_map[ix(sq.b)],
                       report.edge_map[ix(sq.b2)], report.edge_map[ix(sq.a2)]};
    if (!sk.squares.contains(image))
      fail("rho carries square " + e.id(sq.a) + "," + e.id(sq.b) + " ~ " + e.id(sq.b2) + "," +
           e.id(sq.a2) + " outside the skeleton squares");
  }
  return report;
}

ThetaReport build_theta(const KGraph& gamma, const Skeleton& sk, const KGraph& target,
                        const ColouredIsomorphism& psi, const ThetaOptions& options) {
  gamma.require_valid();
  target.require_valid();
  const ColouredGraph& eg = *sk.graph;
  const ColouredGraph& e = target.graph();
  if (!is_coloured_isomorphism(eg, e, psi))
    throw Error(ErrorKind::Precondition, "psi is not a coloured-graph isomorphism");
  for (const auto& sq : sk.squares.squares()) {
    const Square image{sq.i, sq.j, psi.edge_map[ix(sq.a)], psi.edge_map[ix(sq.b)],
                       psi.edge_map[ix(sq.b2)], psi.edge_map[ix(sq.a2)]};
    if (!target.squares().contains(image))
      throw Error(ErrorKind::Precondition, "psi does not carry square " + eg.id(sq.a) + "," +
                                               eg.id(sq.b) + " into the target collection");
  }

  const std::size_t k = gamma.k();
  ThetaReport report;
  auto fail = [&report](std::string why) {
    report.passed = false;
    if (report.failures.size() < 16) report.failures.push_back(std::move(why));
  };

  auto theta = [&](const CubeMorphism& c) {
    CubeMorphism out(c.degree());
    const GridShape& shape = out.shape();
    for (std::size_t idx = 0; idx < shape.point_count(); ++idx) {
      const Degree n = shape.point(idx);
      out.set_vertex(idx, psi.vertex_map[ix(sk.vertex_of.at(segment(c, n, n)))]);
      for (Colour i = 0; i < k; ++i) {
        if (n[i] >= c.degree()[i]) continue;
        const auto piece = segment(c, n, n + Degree::unit(k, i));
        out.set_edge(idx, i, psi.edge_map[ix(sk.edge_of.at(piece))]);
      }
    }
    return out;
  };

  std::map<CubeMorphism, CubeMorphism> image;
  std::map<Degree, std::vector<CubeMorphism>> level;
  Degree top(k);
  for (std::size_t i = 0; i < k; ++i) top[i] = options.max_norm;
  for (const auto& m : degrees_by_norm(top)) {
    if (m.norm() > options.max_norm) continue;
    ++report.degrees;
    auto& here = level[m];
    here = paths_of_degree(gamma, std::nullopt, m);
    std::set<CubeMorphism> seen;
    for (const auto& c : here) {
      ++report.elements;
      auto t = theta(c);
      if (auto bad = cube_defect(e, t, &target.squares()))
        fail("theta of " + canonical_name(gamma.graph(), c) + " is not C-compatible: " + *bad);
      if (t.degree() != c.degree()) fail("theta changes a degree");
      if (t.range() != psi.vertex_map[ix(sk.vertex_of.at(identity_at(gamma.graph(), c.range())))])
        fail("theta does not preserve a range");
      if (t.source() !=
          psi.vertex_map[ix(sk.vertex_of.at(identity_at(gamma.graph(), c.source())))])
        fail("theta does not preserve a source");
      if (!seen.insert(t).second)
        fail("theta is not injective in degree " + m.to_string());
      if (options.keep_table) report.table.emplace_back(c, t);
      image.emplace(c, std::move(t));
    }
    const auto onto = paths_of_degree(target, std::nullopt, m);
    if (onto.size() != seen.size() || !std::equal(onto.begin(), onto.end(), seen.begin()))
      fail("theta is not onto in degree " + m.to_string() + ": " + std::to_string(seen.size()) +
           " images for " + std::to_string(onto.size()) + " paths");
  }

  // functoriality on composable pairs inside the bound
  for (const auto& [m1, left] : level) {
    for (const auto& [m2, right] : level) {
      if (m1.norm() + m2.norm() > options.max_norm) continue;
      std::unordered_map<std::uint32_t, std::vector<const CubeMorphism*>> by_range;
      for (const auto& c : right) by_range[ix(c.range())].push_back(&c);
      for (const auto& a : left) {
        auto it = by_range.find(ix(a.source()));
        if (it == by_range.end()) continue;
        for (const auto* b : it->second) {
          ++report.composable_pairs;
          const auto ab = gamma.compose(a, *b);
          if (image.at(ab) != target.compose(image.at(a), image.at(*b)))
            fail("theta(ab) != theta(a) theta(b) for " + canonical_name(gamma.graph(), a) +
                 " and " + canonical_name(gamma.graph(), *b));
        }
      }
    }
  }
  return report;
}

}  // namespace kgraph
