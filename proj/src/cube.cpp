#include "kgraph/cube.hpp"

#include <algorithm>

#include "kgraph/error.hpp"

namespace kgraph {

CubeMorphism::CubeMorphism(Degree degree)
    : shape_(degree),
      vertices_(shape_.point_count(), kNoVertex),
      edges_(shape_.point_count() * degree.k(), kNoEdge) {}

std::strong_ordering operator<=>(const CubeMorphism& a, const CubeMorphism& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.vertices_ <=> b.vertices_; c != 0) return c;
  return a.edges_ <=> b.edges_;
}

std::size_t CubeHash::operator()(const CubeMorphism& c) const noexcept {
  std::size_t h = std::hash<Degree>{}(c.degree());
  auto mix = [&h](std::uint64_t x) { h = (h ^ x) * 0x100000001b3ull; };
  for (auto v : c.vertex_data()) mix(ix(v));
  for (auto e : c.edge_data()) mix(ix(e));
  return h;
}

// --- builder ---------------------------------------------------------------

CubeBuilder::CubeBuilder(const ColouredGraph& g, const SquareCollection& c, Vertex start,
                         std::size_t cell_budget)
    : g_(&g), c_(&c), k_(g.k()), budget_(cell_budget), degree_(g.k()), storage_(Degree(g.k())) {
  if (ix(start) >= g.vertex_count()) throw Error(ErrorKind::UnknownId, "unknown start vertex");
  vertices_.assign(1, start);
  edges_.assign(k_, kNoEdge);
}

CubeBuilder::CubeBuilder(const ColouredGraph& g, const SquareCollection& c,
                         const CubeMorphism& seed, std::size_t cell_budget)
    : g_(&g),
      c_(&c),
      k_(g.k()),
      budget_(cell_budget),
      degree_(seed.degree()),
      storage_(seed.degree()),
      vertices_(seed.vertex_data()),
      edges_(seed.edge_data()) {
  if (seed.k() != g.k()) throw Error(ErrorKind::Domain, "seed cube has the wrong rank");
}

std::size_t CubeBuilder::index(const Degree& n) const { return storage_.index(n); }

Vertex CubeBuilder::source() const { return vertices_[index(degree_)]; }

void CubeBuilder::reserve(const Degree& capacity) {
  if (!capacity.leq(storage_.extent())) relayout(storage_.extent().join(capacity));
}

void CubeBuilder::relayout(const Degree& capacity) {
  GridShape next(capacity);
  std::vector<Vertex> vertices(next.point_count(), kNoVertex);
  std::vector<Edge> edges(next.point_count() * k_, kNoEdge);
  GridShape live(degree_);
  for (std::size_t n = 0; n < live.point_count(); ++n) {
    const Degree p = live.point(n);
    const std::size_t from = storage_.index(p), to = next.index(p);
    vertices[to] = vertices_[from];
    std::copy_n(edges_.begin() + from * k_, k_, edges.begin() + to * k_);
  }
  storage_ = std::move(next);
  vertices_ = std::move(vertices);
  edges_ = std::move(edges);
}

void CubeBuilder::non_associative(const Degree& base, Colour i, Colour j, Colour l,
                                  const std::string& why) const {
  const Degree ej = Degree::unit(k_, j), el = Degree::unit(k_, l);
  const Edge x1 = edges_[index(base) * k_ + j];
  const Edge x2 = edges_[index(base + ej) * k_ + l];
  const Edge x3 = edges_[index(base + ej + el) * k_ + i];
  std::vector<std::string> triple{g_->id(x1), g_->id(x2), g_->id(x3)};
  throw NonAssociativeError(triple, "collection is not associative at " + triple[0] + "," +
                                        triple[1] + "," + triple[2] + ": " + why);
}

void CubeBuilder::extend(Edge f) {
  if (ix(f) >= g_->edge_count()) throw Error(ErrorKind::UnknownId, "unknown edge");
  if (g_->range(f) != source())
    throw CompositionError(static_cast<std::size_t>(degree_.norm()),
                           "edge " + g_->id(f) + " does not start at the current source");
  const Colour i = g_->colour(f);
  const Degree m = degree_;
  const Degree next = m + Degree::unit(k_, i);
  std::size_t cells = 1;
  for (std::size_t j = 0; j < k_; ++j) cells *= static_cast<std::size_t>(next[j]) + 1;
  if (cells > budget_)
    throw Error(ErrorKind::EnumerationLimit, "cube of degree " + next.to_string() +
                                                 " exceeds the cell budget of " +
                                                 std::to_string(budget_));
  if (!next.leq(storage_.extent())) {
    Degree cap = storage_.extent().join(next);
    cap[i] = std::max<Degree::value_type>(cap[i], std::max<Degree::value_type>(2 * m[i], 1));
    relayout(cap);
  }

  std::size_t off_colours = 0;  // |{j != i : m_j > 0}|
  for (std::size_t j = 0; j < k_; ++j)
    if (j != i && m[j] > 0) ++off_colours;

  // Walk the slab {p : p_i = m_i, p <= m} in decreasing lexicographic order,
  // so p + e_j is always done before p.
  Degree p = m;
  while (true) {
    const Degree top = p + Degree::unit(k_, i);
    bool corner = true;
    for (std::size_t j = 0; j < k_; ++j)
      if (j != i && p[j] < m[j]) corner = false;
    if (corner) {
      // the new edge itself: lambda_x(m + v_i) = f
      edge_slot(p, i) = f;
      vertex_slot(top) = g_->source(f);
    } else {
      Edge found = kNoEdge;
      Colour found_via = 0;
      for (Colour j = 0; j < k_; ++j) {
        if (j == i || p[j] >= m[j]) continue;
        const Edge x1 = edge_slot(p, j);
        const Edge x2 = edge_slot(p + Degree::unit(k_, j), i);
        const auto [gi, hj] = flip(*g_, *c_, x1, x2);
        if (found == kNoEdge) {
          found = gi;
          found_via = j;
          edge_slot(p, i) = gi;
          vertex_slot(top) = g_->source(gi);
        } else if (gi != found) {
          non_associative(p, i, found_via, j,
                          "flips through colours " + std::to_string(found_via + 1) + " and " +
                              std::to_string(j + 1) + " disagree");
        }
        edge_slot(top, j) = hj;
      }
    }
    // decrement odometer over coordinates other than i
    std::size_t idx = k_;
    bool moved = false;
    while (idx > 0) {
      --idx;
      if (idx == i) continue;
      if (p[idx] > 0) {
        --p[idx];
        for (std::size_t r = idx + 1; r < k_; ++r)
          if (r != i) p[r] = m[r];
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  degree_ = next;
  if (off_colours >= 2) check_face_squares(i);
}

void CubeBuilder::check_face_squares(Colour i) {
  // squares lying entirely in the new face {n_i = d_i}
  const Degree& d = degree_;
  Degree lo(k_);
  lo[i] = d[i];
  for (const auto& q : degrees_between(lo, d)) {
    for (Colour j = 0; j < k_; ++j) {
      if (j == i || q[j] >= d[j]) continue;
      for (Colour l = j + 1; l < k_; ++l) {
        if (l == i || q[l] >= d[l]) continue;
        const Degree ej = Degree::unit(k_, j), el = Degree::unit(k_, l);
        Square sq{j, l, edge_slot(q, j), edge_slot(q + ej, l), edge_slot(q, l),
                  edge_slot(q + el, j)};
        if (!c_->contains(sq)) {
          Degree base = q;
          --base[i];
          non_associative(base, i, j, l,
                          "face square in colours " + std::to_string(j + 1) + "," +
                              std::to_string(l + 1) + " is not in the collection");
        }
      }
    }
  }
}

CubeMorphism CubeBuilder::cube() const {
  CubeMorphism out(degree_);
  const GridShape& shape = out.shape();
  for (std::size_t n = 0; n < shape.point_count(); ++n) {
    const std::size_t from = storage_.index(shape.point(n));
    out.set_vertex(n, vertices_[from]);
    for (Colour i = 0; i < k_; ++i) out.set_edge(n, i, edges_[from * k_ + i]);
  }
  return out;
}

// --- basic morphisms -------------------------------------------------------

CubeMorphism identity_at(const ColouredGraph& g, Vertex v) {
  if (ix(v) >= g.vertex_count()) throw Error(ErrorKind::UnknownId, "unknown vertex");
  CubeMorphism out(Degree(g.k()));
  out.set_vertex(0, v);
  return out;
}

CubeMorphism edge_morphism(const ColouredGraph& g, Edge f) {
  if (ix(f) >= g.edge_count()) throw Error(ErrorKind::UnknownId, "unknown edge");
  const Colour i = g.colour(f);
  CubeMorphism out(Degree::unit(g.k(), i));
  out.set_vertex(0, g.range(f));
  out.set_vertex(1, g.source(f));
  out.set_edge(0, i, f);
  return out;
}

CubeMorphism normalize(const ColouredGraph& g, const SquareCollection& c, const ColouredPath& x,
                       std::size_t cell_budget) {
  CubeBuilder builder(g, c, x.range(), cell_budget);
  builder.reserve(x.shape());
  for (Edge e : x.edges()) builder.extend(e);
  return builder.cube();
}

bool traverses(const ColouredGraph& g, const ColouredPath& x, const CubeMorphism& lambda) {
  if (x.shape() != lambda.degree()) return false;
  if (x.empty()) return x.range() == lambda.range();
  Degree p(g.k());
  for (Edge e : x.edges()) {
    const Colour i = g.colour(e);
    if (lambda.edge(p, i) != e) return false;
    ++p[i];
  }
  return true;
}

ColouredPath traversal(const ColouredGraph& g, const CubeMorphism& lambda, const ColourWord& w) {
  if (abelianize(w, g.k()) != lambda.degree())
    throw Error(ErrorKind::Domain, "staircase " + w.to_string() + " does not have shape " +
                                       lambda.degree().to_string());
  if (w.letters.empty()) return ColouredPath(g, lambda.range());
  std::vector<Edge> edges;
  edges.reserve(w.size());
  Degree p(g.k());
  for (auto i : w.letters) {
    edges.push_back(lambda.edge(p, i));
    ++p[i];
  }
  return ColouredPath(g, std::move(edges));
}

std::vector<ColouredPath> enumerate_traversals(const ColouredGraph& g,
                                               const CubeMorphism& lambda) {
  std::vector<ColouredPath> out;
  for (const auto& w : staircases(lambda.degree())) out.push_back(traversal(g, lambda, w));
  return out;
}

CubeMorphism restrict(const CubeMorphism& lambda, const Degree& p, const Degree& q) {
  if (!p.leq(q) || !q.leq(lambda.degree()))
    throw Error(ErrorKind::BadInterval, "interval " + p.to_string() + " .. " + q.to_string() +
                                            " is not inside degree " +
                                            lambda.degree().to_string());
  CubeMorphism out(q - p);
  const GridShape& shape = out.shape();
  const std::size_t k = lambda.k();
  for (std::size_t n = 0; n < shape.point_count(); ++n) {
    const Degree a = shape.point(n);
    const Degree at = p + a;
    out.set_vertex(n, lambda.vertex(at));
    for (Colour i = 0; i < k; ++i)
      if (a[i] < out.degree()[i]) out.set_edge(n, i, lambda.edge(at, i));
  }
  return out;
}

CubeMorphism segment(const CubeMorphism& lambda, const Degree& m, const Degree& n) {
  return restrict(lambda, m, n);
}

Vertex vertex_at(const CubeMorphism& lambda, const Degree& n) {
  if (!n.leq(lambda.degree()))
    throw Error(ErrorKind::BadInterval, n.to_string() + " is outside the cube");
  return lambda.vertex(n);
}

CubeMorphism compose(const ColouredGraph& g, const SquareCollection& c, const CubeMorphism& mu,
                     const CubeMorphism& nu, std::size_t cell_budget) {
  if (mu.source() != nu.range())
    throw Error(ErrorKind::Composition, "cannot compose: s(mu) = " + g.id(mu.source()) +
                                            " but r(nu) = " + g.id(nu.range()));
  CubeBuilder builder(g, c, mu, cell_budget);
  builder.reserve(mu.degree() + nu.degree());
  const auto path = traversal(g, nu, canonical_word(nu.degree()));
  for (Edge e : path.edges()) builder.extend(e);
  return builder.cube();
}

std::pair<CubeMorphism, CubeMorphism> factorise(const CubeMorphism& lambda, const Degree& m) {
  if (!m.leq(lambda.degree()))
    throw Error(ErrorKind::BadInterval,
                m.to_string() + " is not below " + lambda.degree().to_string());
  return {restrict(lambda, Degree(lambda.k()), m), restrict(lambda, m, lambda.degree())};
}

CubeMorphism tricolour_fill(const ColouredGraph& g, const SquareCollection& c, Edge f, Edge gg,
                            Edge h) {
  const Rearrangement r = rearrange(g, c, f, gg, h);
  if (!r.agrees())
    throw NonAssociativeError({g.id(f), g.id(gg), g.id(h)},
                              "the two rearrangements of " + g.id(f) + "," + g.id(gg) + "," +
                                  g.id(h) + " disagree");
  const std::size_t k = g.k();
  const Colour a = g.colour(f), b = g.colour(gg), cc = g.colour(h);
  const Degree ea = Degree::unit(k, a), eb = Degree::unit(k, b), ec = Degree::unit(k, cc);
  CubeMorphism out(ea + eb + ec);
  const GridShape& s = out.shape();
  auto put = [&](const Degree& base, Colour i, Edge e) {
    out.set_edge(s.index(base), i, e);
    out.set_vertex(s.index(base), g.range(e));
    out.set_vertex(s.index(base + Degree::unit(k, i)), g.source(e));
  };
  const Degree zero(k);
  put(zero, a, f);
  put(zero, b, r.up_g1);
  put(zero, cc, r.up_h2);
  put(ea, b, gg);
  put(ea, cc, r.lo_h1);
  put(eb, a, r.up_f1);
  put(eb, cc, r.up_h1);
  put(ec, a, r.lo_f1);
  put(ec, b, r.up_g2);
  put(ea + eb, cc, h);
  put(ea + ec, b, r.lo_g1);
  put(eb + ec, a, r.up_f2);
  if (auto defect = cube_defect(g, out, &c))
    throw NonAssociativeError({g.id(f), g.id(gg), g.id(h)}, "tricolour cube: " + *defect);
  return out;
}

std::optional<std::string> cube_defect(const ColouredGraph& g, const CubeMorphism& lambda,
                                       const SquareCollection* c) {
  const GridShape& shape = lambda.shape();
  const Degree& d = lambda.degree();
  const std::size_t k = lambda.k();
  if (k != g.k()) return "cube rank differs from graph rank";
  for (std::size_t n = 0; n < shape.point_count(); ++n) {
    const Degree p = shape.point(n);
    const Vertex v = lambda.vertex_at(n);
    if (ix(v) >= g.vertex_count()) return "vertex at " + p.to_string() + " is unset";
    for (Colour i = 0; i < k; ++i) {
      const Edge e = lambda.edge_at(n, i);
      if (p[i] >= d[i]) {
        if (e != kNoEdge) return "edge slot outside the grid is set";
        continue;
      }
      const std::string where = GridGraph::edge_id(p, i);
      if (ix(e) >= g.edge_count()) return "edge " + where + " is unset";
      if (g.colour(e) != i) return "edge " + where + " has the wrong colour";
      if (g.range(e) != v) return "edge " + where + " has the wrong range";
      if (g.source(e) != lambda.vertex_at(n + shape.stride(i)))
        return "edge " + where + " has the wrong source";
    }
  }
  if (c) {
    for (const auto& sq : occurring_squares(g, lambda))
      if (!c->contains(sq))
        return "square " + g.id(sq.a) + "," + g.id(sq.b) + " ~ " + g.id(sq.b2) + "," +
               g.id(sq.a2) + " is not in the collection";
  }
  return std::nullopt;
}

std::vector<Square> occurring_squares(const ColouredGraph& g, const CubeMorphism& lambda) {
  std::vector<Square> out;
  const GridShape& shape = lambda.shape();
  const Degree& d = lambda.degree();
  const std::size_t k = g.k();
  for (std::size_t n = 0; n < shape.point_count(); ++n) {
    const Degree p = shape.point(n);
    for (Colour i = 0; i < k; ++i) {
      if (p[i] >= d[i]) continue;
      for (Colour j = i + 1; j < k; ++j) {
        if (p[j] >= d[j]) continue;
        out.push_back(Square{i, j, lambda.edge_at(n, i), lambda.edge_at(n + shape.stride(i), j),
                             lambda.edge_at(n, j), lambda.edge_at(n + shape.stride(j), i)});
      }
    }
  }
  return out;
}

}  // namespace kgraph
