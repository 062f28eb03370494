// Independent reference implementations. They only read the raw graph
// tables and the raw square list; none of them calls the library's flip,
// normalize, builder or enumeration code.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "kgraph/cube.hpp"

namespace oracle {

using namespace kgraph;
using Word = std::vector<Edge>;

/// Every partner y1.y2 of the mixed 2-path x1.x2, by linear scan.
inline std::vector<std::pair<Edge, Edge>> partners(const SquareCollection& c, Edge x1, Edge x2) {
  std::vector<std::pair<Edge, Edge>> out;
  for (const auto& s : c.squares()) {
    if (s.a == x1 && s.b == x2) out.emplace_back(s.b2, s.a2);
    if (s.b2 == x1 && s.a2 == x2) out.emplace_back(s.a, s.b);
  }
  return out;
}

/// Number of squares with x1.x2 as a face.
inline std::size_t owner_count(const SquareCollection& c, Edge x1, Edge x2) {
  return partners(c, x1, x2).size();
}

/// The flip class of x by breadth-first search over single adjacent flips;
/// nullopt when it exceeds `cap`.
inline std::optional<std::set<Word>> flip_class(const ColouredGraph& g, const SquareCollection& c,
                                                const Word& x, std::size_t cap = 10'000) {
  std::set<Word> seen{x};
  std::deque<Word> todo{x};
  while (!todo.empty()) {
    Word w = todo.front();
    todo.pop_front();
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (g.colour(w[p]) == g.colour(w[p + 1])) continue;
      for (auto [y1, y2] : partners(c, w[p], w[p + 1])) {
        Word next = w;
        next[p] = y1;
        next[p + 1] = y2;
        if (seen.insert(next).second) {
          if (seen.size() > cap) return std::nullopt;
          todo.push_back(std::move(next));
        }
      }
    }
  }
  return seen;
}

/// The cube traversed by every member of x's flip class: each member
/// follows one staircase, and reading all of them off fills the grid. Any
/// disagreement between members (or a missing staircase) gives nullopt.
inline std::optional<CubeMorphism> normalize(const ColouredGraph& g, const SquareCollection& c,
                                             Vertex start, const Word& x,
                                             std::size_t cap = 10'000) {
  const std::size_t k = g.k();
  Degree m(k);
  for (Edge e : x) m[g.colour(e)] += 1;
  CubeMorphism cube(m);
  const auto& shape = cube.shape();
  std::vector<bool> vset(shape.point_count(), false);
  std::vector<bool> eset(shape.point_count() * k, false);
  auto put_vertex = [&](const Degree& n, Vertex v) {
    const auto idx = shape.index(n);
    if (vset[idx] && cube.vertex_at(idx) != v) return false;
    vset[idx] = true;
    cube.set_vertex(idx, v);
    return true;
  };
  auto put_edge = [&](const Degree& n, Colour i, Edge e) {
    const auto idx = shape.index(n);
    if (eset[idx * k + i] && cube.edge_at(idx, i) != e) return false;
    eset[idx * k + i] = true;
    cube.set_edge(idx, i, e);
    return true;
  };
  const auto members = flip_class(g, c, x, cap);
  if (!members) return std::nullopt;
  std::set<std::vector<Colour>> words;
  for (const auto& w : *members) {
    Degree n(k);
    if (!put_vertex(n, x.empty() ? start : g.range(w.front()))) return std::nullopt;
    std::vector<Colour> word;
    for (Edge e : w) {
      const Colour i = g.colour(e);
      word.push_back(i);
      if (!put_edge(n, i, e)) return std::nullopt;
      n[i] += 1;
      if (!put_vertex(n, g.source(e))) return std::nullopt;
    }
    words.insert(word);
  }
  // one member per staircase
  std::size_t staircases = 1, total = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::uint32_t t = 1; t <= m[i]; ++t) {
      ++total;
      staircases = staircases * total / t;
    }
  if (words.size() != members->size() || words.size() != staircases) return std::nullopt;
  return cube;
}

/// Every E-path with range v (or any range) and colour word c1^m1 ... ck^mk.
inline std::vector<Word> canonical_words(const ColouredGraph& g, std::optional<Vertex> v,
                                         const Degree& m) {
  std::vector<Colour> letters;
  for (std::size_t i = 0; i < m.k(); ++i) letters.insert(letters.end(), m[i], static_cast<Colour>(i));
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, Vertex at) -> void {
    if (cur.size() == letters.size()) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      const Edge f{e};
      if (g.colour(f) != letters[cur.size()] || g.range(f) != at) continue;
      cur.push_back(f);
      self(self, g.source(f));
      cur.pop_back();
    }
  };
  for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
    if (!v || *v == Vertex{u}) rec(rec, Vertex{u});
  return out;
}

/// v Lambda^m as the set of oracle normal forms of canonical words.
inline std::optional<std::set<CubeMorphism>> paths_of_degree(const ColouredGraph& g,
                                                             const SquareCollection& c,
                                                             std::optional<Vertex> v,
                                                             const Degree& m) {
  std::set<CubeMorphism> out;
  if (m.is_zero()) {
    for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
      if (!v || *v == Vertex{u}) {
        CubeMorphism id(m);
        id.set_vertex(0, Vertex{u});
        out.insert(id);
      }
    return out;
  }
  for (const auto& w : canonical_words(g, v, m)) {
    auto cube = normalize(g, c, g.range(w.front()), w);
    if (!cube) return std::nullopt;
    out.insert(*cube);
  }
  return out;
}

/// Every composable E-path of exactly `length` edges.
inline std::vector<Word> paths_of_length(const ColouredGraph& g, std::size_t length) {
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == length) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
      const Edge f{e};
      if (!cur.empty() && g.source(cur.back()) != g.range(f)) continue;
      cur.push_back(f);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// A uniformly random walk of the given length, or an empty word when it
/// gets stuck.
inline Word random_walk(const ColouredGraph& g, std::size_t length, std::mt19937_64& rng) {
  Word w;
  if (g.edge_count() == 0) return w;
  w.push_back(Edge{static_cast<std::uint32_t>(rng() % g.edge_count())});
  while (w.size() < length) {
    // the next edge has range s(previous)
    const auto into = g.edges_into(g.source(w.back()));
    if (into.empty()) return {};
    w.push_back(into[rng() % into.size()]);
  }
  return w;
}

}  // namespace oracle
