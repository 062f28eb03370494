#include "kgraph/quotient.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "kgraph/error.hpp"

namespace kgraph {

std::vector<ColourWord> shuffle_chain(const ColourWord& w, const ColourWord& w2) {
  auto a = w.letters, b = w2.letters;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw Error(ErrorKind::Domain, "words " + w.to_string() + " and " + w2.to_string() +
                                       " have different abelianizations");
  std::vector<ColourWord> chain{w};
  ColourWord cur = w;
  for (std::size_t p = 0; p < cur.size(); ++p) {
    // nearest occurrence of the wanted letter; everything it passes on the
    // way left differs from it, so every step swaps distinct letters
    std::size_t j = p;
    while (cur.letters[j] != w2.letters[p]) ++j;
    for (; j > p; --j) {
      std::swap(cur.letters[j - 1], cur.letters[j]);
      chain.push_back(cur);
    }
  }
  return chain;
}

std::optional<std::size_t> adjacent_swap(const ColourWord& a, const ColourWord& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::size_t j = 0;
  while (j < a.size() && a.letters[j] == b.letters[j]) ++j;
  if (j + 1 >= a.size()) return std::nullopt;
  if (a.letters[j] == a.letters[j + 1]) return std::nullopt;
  if (a.letters[j] != b.letters[j + 1] || a.letters[j + 1] != b.letters[j]) return std::nullopt;
  for (std::size_t t = j + 2; t < a.size(); ++t)
    if (a.letters[t] != b.letters[t]) return std::nullopt;
  return j;
}

bool equivalent(const KGraph& lambda, const ColouredPath& x, const ColouredPath& y) {
  if (x.range() != y.range() || x.source() != y.source() || x.shape() != y.shape()) return false;
  return lambda.normalize(x) == lambda.normalize(y);
}

SwapChain witness_chain(const KGraph& lambda, const ColouredPath& x, const ColouredPath& y) {
  if (!equivalent(lambda, x, y))
    throw Error(ErrorKind::Domain, "paths " + x.to_string() + " and " + y.to_string() +
                                       " are not equivalent");
  const ColouredGraph& g = lambda.graph();
  const auto cube = lambda.normalize(x);
  SwapChain chain{x.edges(), {}};
  const auto words = shuffle_chain(x.colour_word(), y.colour_word());
  for (std::size_t t = 1; t < words.size(); ++t) {
    const auto j = adjacent_swap(words[t - 1], words[t]);
    if (!j) throw Error(ErrorKind::Domain, "shuffle chain step is not a transposition");
    chain.steps.push_back({*j, traversal(g, cube, words[t]).edges()});
  }
  return chain;
}

std::optional<std::vector<Edge>> replay(const KGraph& lambda, const SwapChain& chain) {
  const ColouredGraph& g = lambda.graph();
  auto cur = chain.start;
  for (const auto& step : chain.steps) {
    const std::size_t j = step.index;
    if (j + 1 >= cur.size() || g.colour(cur[j]) == g.colour(cur[j + 1])) return std::nullopt;
    std::tie(cur[j], cur[j + 1]) = flip(g, lambda.squares(), cur[j], cur[j + 1]);
    if (cur != step.after) return std::nullopt;
  }
  return cur;
}

namespace {

template <typename Visit>
void for_each_flip(const ColouredGraph& g, const SquareCollection& c, const std::vector<Edge>& p,
                   Visit&& visit) {
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (g.colour(p[j]) == g.colour(p[j + 1])) continue;
    auto q = p;
    std::tie(q[j], q[j + 1]) = flip(g, c, p[j], p[j + 1]);
    visit(std::move(q));
  }
}

}  // namespace

FlipClass flip_class(const KGraph& lambda, const ColouredPath& x, std::size_t node_cap) {
  FlipClass out;
  std::set<std::vector<Edge>> seen{x.edges()};
  std::deque<std::vector<Edge>> queue{x.edges()};
  while (!queue.empty() && !out.overflow) {
    auto p = std::move(queue.front());
    queue.pop_front();
    for_each_flip(lambda.graph(), lambda.squares(), p, [&](std::vector<Edge> q) {
      if (out.overflow || seen.count(q)) return;
      if (seen.size() >= node_cap) {
        out.overflow = true;
        return;
      }
      seen.insert(q);
      queue.push_back(std::move(q));
    });
  }
  out.members.assign(seen.begin(), seen.end());
  return out;
}

Reachability flip_reachable(const KGraph& lambda, const ColouredPath& x, const ColouredPath& y,
                            std::size_t node_cap) {
  if (x.range() != y.range()) return Reachability::Unreachable;
  const auto cls = flip_class(lambda, x, node_cap);
  if (std::binary_search(cls.members.begin(), cls.members.end(), y.edges()))
    return Reachability::Reachable;
  return cls.overflow ? Reachability::Overflow : Reachability::Unreachable;
}

PathListing all_paths(const ColouredGraph& g, std::size_t max_length) {
  PathListing out;
  std::vector<Edge> prefix;
  std::function<void(Vertex, Vertex)> grow = [&](Vertex root, Vertex at) {
    out.ranges.push_back(root);
    out.edges.push_back(prefix);
    if (prefix.size() == max_length) return;
    for (Edge e : g.edges_into(at)) {
      prefix.push_back(e);
      grow(root, g.source(e));
      prefix.pop_back();
    }
  };
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) grow(Vertex{v}, Vertex{v});
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

QuotientReport quotient_structure_check(const KGraph& lambda, std::size_t length_bound) {
  lambda.require_valid();
  const ColouredGraph& g = lambda.graph();
  const std::size_t k = g.k();
  QuotientReport report;
  auto fail = [&report](std::string why) {
    report.passed = false;
    if (report.failures.size() < 16) report.failures.push_back(std::move(why));
  };

  const PathListing listing = all_paths(g, length_bound);
  const std::size_t n = listing.edges.size();
  report.paths = n;
  std::map<std::vector<Edge>, std::size_t> index;
  std::vector<std::size_t> vertex_path(g.vertex_count());
  for (std::size_t t = 0; t < n; ++t) {
    if (listing.edges[t].empty())
      vertex_path[ix(listing.ranges[t])] = t;
    else
      index.emplace(listing.edges[t], t);
  }
  auto lookup = [&](Vertex range, const std::vector<Edge>& edges) {
    return edges.empty() ? vertex_path[ix(range)] : index.at(edges);
  };

  UnionFind uf(n);
  for (std::size_t t = 0; t < n; ++t)
    for_each_flip(g, lambda.squares(), listing.edges[t],
                  [&](std::vector<Edge> q) { uf.unite(t, index.at(q)); });

  std::vector<CubeMorphism> normal(n);
  std::vector<Degree> shape(n);
  std::vector<Vertex> source(n);
  for (std::size_t t = 0; t < n; ++t) {
    const ColouredPath p = listing.edges[t].empty() ? ColouredPath(g, listing.ranges[t])
                                                    : ColouredPath(g, listing.edges[t]);
    normal[t] = lambda.normalize(p);
    shape[t] = p.shape();
    source[t] = p.source();
  }

  std::map<CubeMorphism, std::size_t> class_of_normal;
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t root = uf.find(t);
    if (root == t) {
      ++report.classes;
      ++report.counts[{ix(listing.ranges[t]), shape[t]}].first;
      if (!class_of_normal.emplace(normal[t], t).second)
        fail("two flip classes share the normal form of " + ColouredPath(g, listing.edges[t]).to_string());
      continue;
    }
    if (listing.ranges[t] != listing.ranges[root] || source[t] != source[root] ||
        shape[t] != shape[root])
      fail("r, s or d is not constant on the class of " +
           ColouredPath(g, listing.edges[t]).to_string());
    if (normal[t] != normal[root])
      fail("class of " + ColouredPath(g, listing.edges[t]).to_string() +
           " has more than one normal form");
  }

  // [x][y] = [xy]: recompose class representatives of each split
  for (std::size_t t = 0; t < n; ++t) {
    const auto& z = listing.edges[t];
    for (std::size_t p = 1; p < z.size(); ++p) {
      ++report.products_checked;
      const std::vector<Edge> x(z.begin(), z.begin() + p), y(z.begin() + p, z.end());
      const auto& rx = listing.edges[uf.find(index.at(x))];
      const auto& ry = listing.edges[uf.find(index.at(y))];
      std::vector<Edge> joined = rx;
      joined.insert(joined.end(), ry.begin(), ry.end());
      if (uf.find(lookup(listing.ranges[t], joined)) != uf.find(t))
        fail("[x][y] depends on representatives for " + ColouredPath(g, z).to_string());
    }
  }

  Degree top(k);
  for (std::size_t i = 0; i < k; ++i) top[i] = static_cast<std::uint32_t>(length_bound);
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (const auto& m : degrees_by_norm(top)) {
      if (m.norm() > length_bound) continue;
      auto& entry = report.counts[{v, m}];
      entry.second = paths_of_degree(lambda, Vertex{v}, m).size();
      if (entry.first != entry.second)
        fail("at " + g.id(Vertex{v}) + " degree " + m.to_string() + ": " +
             std::to_string(entry.first) + " classes but " + std::to_string(entry.second) +
             " cubes");
    }
  }
  return report;
}

std::vector<CubeMorphism> extend_pi(const KGraph& lambda, const ColouredPath& x) {
  CubeBuilder builder(lambda.graph(), lambda.squares(), x.range(), lambda.cell_budget());
  builder.reserve(x.shape());
  std::vector<CubeMorphism> out{builder.cube()};
  for (Edge e : x.edges()) {
    builder.extend(e);
    out.push_back(builder.cube());
  }
  return out;
}

CylinderReport cylinder_preimage_check(const KGraph& lambda, const CubeMorphism& mu,
                                       std::size_t depth) {
  lambda.require_valid();
  if (!is_row_finite_no_sources(lambda).holds)
    throw Error(ErrorKind::Precondition, "cylinder check needs a row-finite graph without sources");
  const ColouredGraph& g = lambda.graph();
  const std::size_t k = g.k();
  const Degree dm = mu.degree();
  const std::size_t base = dm.norm();
  CylinderReport report;
  auto fail = [&report](std::string why) {
    report.passed = false;
    if (report.failures.size() < 16) report.failures.push_back(std::move(why));
  };
  auto keeps_prefix = [&](const CubeMorphism& c) {
    return dm.leq(c.degree()) && restrict(c, Degree(k), dm) == mu;
  };

  // (a) word cylinders inside Z(mu)
  std::function<void(const CubeBuilder&, std::size_t)> walk = [&](const CubeBuilder& b,
                                                                  std::size_t len) {
    if (len >= base) {
      ++report.words_checked;
      if (keeps_prefix(b.cube())) {
        ++report.preimage_words;
        for (Edge e : g.edges_into(b.source())) {
          CubeBuilder next = b;
          next.extend(e);
          ++report.extensions_checked;
          if (!keeps_prefix(next.cube()))
            fail("extending a preimage word by " + g.id(e) + " leaves Z(mu)");
        }
      }
    }
    if (len == base + depth) return;
    for (Edge e : g.edges_into(b.source())) {
      CubeBuilder next = b;
      next.extend(e);
      walk(next, len + 1);
    }
  };
  CubeBuilder root(g, lambda.squares(), mu.range(), lambda.cell_budget());
  walk(root, 0);

  // (b) every extension class at depth is hit by a word cylinder
  std::vector<Edge> head;
  if (!dm.is_zero()) head = traversal(g, mu, canonical_word(dm)).edges();
  Degree top(k);
  for (std::size_t i = 0; i < k; ++i) top[i] = static_cast<std::uint32_t>(depth);
  for (const auto& m : degrees_by_norm(top)) {
    if (m.norm() > depth) continue;
    for (const auto& nu : paths_of_degree(lambda, mu.source(), m)) {
      auto word = head;
      if (!m.is_zero()) {
        const auto tail = traversal(g, nu, canonical_word(m)).edges();
        word.insert(word.end(), tail.begin(), tail.end());
      }
      const auto y = word.empty() ? ColouredPath(g, mu.range()) : ColouredPath(g, word);
      const auto cube = lambda.normalize(y);
      if (cube != lambda.compose(mu, nu) || !keeps_prefix(cube))
        fail("extension of degree " + m.to_string() + " is not hit by its word cylinder");
      else
        ++report.classes_hit;
    }
  }
  return report;
}

}  // namespace kgraph
