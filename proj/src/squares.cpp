#include "kgraph/squares.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "kgraph/error.hpp"

namespace kgraph {

std::optional<std::string> square_defect(const ColouredGraph& g, const Square& sq) {
  for (Edge e : {sq.a, sq.b, sq.b2, sq.a2})
    if (ix(e) >= g.edge_count()) return "square references a missing edge";
  if (!(sq.i < sq.j) || sq.j >= g.k()) return "square colours must satisfy i < j <= k";
  if (g.colour(sq.a) != sq.i || g.colour(sq.a2) != sq.i) return "a/a2 must have colour i";
  if (g.colour(sq.b) != sq.j || g.colour(sq.b2) != sq.j) return "b/b2 must have colour j";
  if (g.range(sq.a) != g.range(sq.b2)) return "r(a) != r(b2)";
  if (g.source(sq.a) != g.range(sq.b)) return "s(a) != r(b)";
  if (g.source(sq.b2) != g.range(sq.a2)) return "s(b2) != r(a2)";
  if (g.source(sq.b) != g.source(sq.a2)) return "s(b) != s(a2)";
  return std::nullopt;
}

SquareCollection::SquareCollection(const ColouredGraph& g, std::vector<Square> squares)
    : squares_(std::move(squares)) {
  for (std::uint32_t n = 0; n < squares_.size(); ++n) {
    const auto& sq = squares_[n];
    if (auto defect = square_defect(g, sq))
      throw Error(ErrorKind::MalformedCollection,
                  "square #" + std::to_string(n) + ": " + *defect);
    index_[key(sq.a, sq.b)].push_back(n);
    index_[key(sq.b2, sq.a2)].push_back(n);
  }
}

const std::vector<std::uint32_t>& SquareCollection::owners(Edge first, Edge second) const {
  static const std::vector<std::uint32_t> kNone;
  auto it = index_.find(key(first, second));
  return it == index_.end() ? kNone : it->second;
}

const Square* SquareCollection::unique_owner(Edge first, Edge second) const {
  const auto& o = owners(first, second);
  return o.size() == 1 ? &squares_[o.front()] : nullptr;
}

bool SquareCollection::contains(const Square& sq) const {
  for (auto n : owners(sq.a, sq.b))
    if (squares_[n] == sq) return true;
  return false;
}

std::optional<Square> make_square(const ColouredGraph& g, Edge x1, Edge x2, Edge y1, Edge y2) {
  Square sq;
  const Colour p = g.colour(x1), q = g.colour(x2);
  if (p == q) return std::nullopt;
  if (p < q) {
    sq = Square{p, q, x1, x2, y1, y2};
  } else {
    sq = Square{q, p, y1, y2, x1, x2};
  }
  if (square_defect(g, sq)) return std::nullopt;
  return sq;
}

CompletenessReport check_complete(const ColouredGraph& g, const SquareCollection& c) {
  CompletenessReport report;
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    const Edge x1{i};
    for (Colour col = 0; col < g.k(); ++col) {
      if (col == g.colour(x1)) continue;
      for (Edge x2 : g.edges_into(g.source(x1), col)) {
        const auto n = c.owners(x1, x2).size();
        if (n != 1) {
          report.complete = false;
          report.violations.push_back({x1, x2, n});
        }
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const auto& a, const auto& b) {
              return std::pair(ix(a.first), ix(a.second)) < std::pair(ix(b.first), ix(b.second));
            });
  return report;
}

std::pair<Edge, Edge> flip(const ColouredGraph& g, const SquareCollection& c, Edge x1, Edge x2) {
  if (g.colour(x1) == g.colour(x2))
    throw Error(ErrorKind::Domain, "flip needs a mixed-colour 2-path, got " + g.id(x1) + "," +
                                       g.id(x2));
  if (g.source(x1) != g.range(x2))
    throw Error(ErrorKind::Domain, "flip needs a composable 2-path, got " + g.id(x1) + "," +
                                       g.id(x2));
  const auto& o = c.owners(x1, x2);
  if (o.size() != 1) throw MissingSquareError(g.id(x1), g.id(x2), o.size());
  const Square& sq = c.squares()[o.front()];
  if (sq.a == x1 && sq.b == x2) return {sq.b2, sq.a2};
  return {sq.a, sq.b};
}

ColouredPath flip(const SquareCollection& c, const ColouredPath& x) {
  if (x.size() != 2) throw Error(ErrorKind::Domain, "flip needs a path of length 2");
  auto [y1, y2] = flip(x.graph(), c, x[0], x[1]);
  return ColouredPath(x.graph(), std::vector<Edge>{y1, y2});
}

Rearrangement rearrange(const ColouredGraph& g, const SquareCollection& c, Edge f, Edge gg,
                        Edge h) {
  const Colour cf = g.colour(f), cg = g.colour(gg), ch = g.colour(h);
  if (cf == cg || cg == ch || cf == ch)
    throw Error(ErrorKind::Domain, "rearrangement needs three distinct colours");
  if (g.source(f) != g.range(gg) || g.source(gg) != g.range(h))
    throw Error(ErrorKind::Domain, "rearrangement needs a composable path fgh");
  Rearrangement r{};
  r.f = f;
  r.g = gg;
  r.h = h;
  std::tie(r.up_g1, r.up_f1) = flip(g, c, f, gg);
  std::tie(r.up_h1, r.up_f2) = flip(g, c, r.up_f1, h);
  std::tie(r.up_h2, r.up_g2) = flip(g, c, r.up_g1, r.up_h1);
  std::tie(r.lo_h1, r.lo_g1) = flip(g, c, gg, h);
  std::tie(r.lo_h2, r.lo_f1) = flip(g, c, f, r.lo_h1);
  std::tie(r.lo_g2, r.lo_f2) = flip(g, c, r.lo_f1, r.lo_g1);
  return r;
}

namespace {

void require_complete(const ColouredGraph& g, const SquareCollection& c) {
  auto report = check_complete(g, c);
  if (!report.complete) {
    const auto& v = report.violations.front();
    throw Error(ErrorKind::Precondition,
                "collection is not complete: 2-path " + g.id(v.first) + "," + g.id(v.second) +
                    " has " + std::to_string(v.owners) + " owners");
  }
}

// All violating triples with first edge f, in (g, h) order.
void scan_first_edge(const ColouredGraph& g, const SquareCollection& c, Edge f, bool all,
                     std::vector<Rearrangement>& out) {
  for (Edge gg : g.edges_into(g.source(f))) {
    if (g.colour(gg) == g.colour(f)) continue;
    for (Edge h : g.edges_into(g.source(gg))) {
      if (g.colour(h) == g.colour(f) || g.colour(h) == g.colour(gg)) continue;
      auto r = rearrange(g, c, f, gg, h);
      if (!r.agrees()) {
        out.push_back(r);
        if (!all) return;
      }
    }
  }
}

bool triple_less(const Rearrangement& a, const Rearrangement& b) {
  return std::tuple(ix(a.f), ix(a.g), ix(a.h)) < std::tuple(ix(b.f), ix(b.g), ix(b.h));
}

}  // namespace

AssociativityReport check_associative_serial(const ColouredGraph& g, const SquareCollection& c,
                                             bool all) {
  require_complete(g, c);
  AssociativityReport report;
  for (std::uint32_t i = 0; i < g.edge_count(); ++i) {
    scan_first_edge(g, c, Edge{i}, all, report.violations);
    if (!all && !report.violations.empty()) break;
  }
  std::stable_sort(report.violations.begin(), report.violations.end(), triple_less);
  report.associative = report.violations.empty();
  return report;
}

AssociativityReport check_associative(const ColouredGraph& g, const SquareCollection& c,
                                      bool all) {
  require_complete(g, c);
  const auto n = static_cast<std::int64_t>(g.edge_count());
  std::vector<std::vector<Rearrangement>> per_edge(g.edge_count());
  // Earliest first edge with a violation; later edges are skipped in the
  // stop-at-first mode but the answer never depends on scheduling.
  std::atomic<std::int64_t> first_bad{std::numeric_limits<std::int64_t>::max()};

#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    if (!all && i > first_bad.load(std::memory_order_relaxed)) continue;
    scan_first_edge(g, c, Edge{static_cast<std::uint32_t>(i)}, all, per_edge[i]);
    if (!all && !per_edge[i].empty()) {
      auto seen = first_bad.load();
      while (i < seen && !first_bad.compare_exchange_weak(seen, i)) {
      }
    }
  }

  AssociativityReport report;
  for (auto& v : per_edge) {
    report.violations.insert(report.violations.end(), v.begin(), v.end());
    if (!all && !report.violations.empty()) break;
  }
  report.associative = report.violations.empty();
  return report;
}

}  // namespace kgraph
