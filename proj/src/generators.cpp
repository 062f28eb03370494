#include "kgraph/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "kgraph/error.hpp"

namespace kgraph {

Instance omega(std::size_t k, const Degree& m) {
  const GridGraph grid = build_grid(k, Degree(k), m);
  Instance out;
  out.graph = std::make_shared<const ColouredGraph>(grid.to_graph());
  const auto& g = *out.graph;
  std::vector<Square> squares;
  for (const auto& n : degrees_between(Degree(k), m)) {
    for (Colour i = 0; i < k; ++i) {
      if (n[i] >= m[i]) continue;
      for (Colour j = i + 1; j < k; ++j) {
        if (n[j] >= m[j]) continue;
        const Degree ei = Degree::unit(k, i), ej = Degree::unit(k, j);
        squares.push_back(Square{i, j, g.edge(GridGraph::edge_id(n, i)),
                                 g.edge(GridGraph::edge_id(n + ei, j)),
                                 g.edge(GridGraph::edge_id(n, j)),
                                 g.edge(GridGraph::edge_id(n + ej, i))});
      }
    }
  }
  out.squares = SquareCollection(g, std::move(squares));
  out.meta.name = "omega k=" + std::to_string(k) + " m=" + m.to_string();
  out.meta.provenance = "omega";
  return out;
}

// --- products of 1-graphs --------------------------------------------------

OneGraph cycle_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Domain, "cycle needs at least one vertex");
  OneGraph g;
  g.name = "cycle:" + std::to_string(n);
  for (std::size_t v = 0; v < n; ++v) g.vertices.push_back(std::to_string(v));
  for (std::size_t v = 0; v < n; ++v) g.arrows.push_back({std::to_string(v), v, (v + 1) % n});
  return g;
}

OneGraph bouquet_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Domain, "bouquet needs at least one loop");
  OneGraph g;
  g.name = "bouquet:" + std::to_string(n);
  g.vertices.push_back("0");
  for (std::size_t e = 0; e < n; ++e) g.arrows.push_back({std::to_string(e), 0, 0});
  return g;
}

OneGraph complete_graph(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Domain, "complete graph needs at least one vertex");
  OneGraph g;
  g.name = "complete:" + std::to_string(n);
  for (std::size_t v = 0; v < n; ++v) g.vertices.push_back(std::to_string(v));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      g.arrows.push_back({std::to_string(r) + std::to_string(s), r, s});
  return g;
}

OneGraph parse_factor(const std::string& spec) {
  if (spec == "loop") return bouquet_graph(1);
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorKind::Schema, "factor '" + spec + "' should look like cycle:3");
  const std::string kind = spec.substr(0, colon);
  std::size_t n = 0;
  try {
    n = std::stoul(spec.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Schema, "factor '" + spec + "' has a bad size");
  }
  if (kind == "cycle") return cycle_graph(n);
  if (kind == "bouquet") return bouquet_graph(n);
  if (kind == "complete") return complete_graph(n);
  throw Error(ErrorKind::Schema, "unknown factor kind '" + kind + "'");
}

Instance product_of_1graphs(const std::vector<OneGraph>& factors) {
  const std::size_t k = factors.size();
  if (k == 0) throw Error(ErrorKind::Domain, "product needs at least one factor");
  static const char* kLetters = "fghpqrstuvwxyz";
  if (k > 14) throw Error(ErrorKind::Domain, "too many factors");

  // mixed radix over factor vertices, last factor fastest
  std::vector<std::size_t> stride(k, 1);
  std::size_t total = 1;
  for (std::size_t i = k; i-- > 0;) {
    stride[i] = total;
    total *= factors[i].vertices.size();
  }
  auto coords = [&](std::size_t p) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = (p / stride[i]) % factors[i].vertices.size();
    return c;
  };
  auto vertex_id = [&](std::size_t p) {
    if (total == 1) return std::string("v");
    const auto c = coords(p);
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ',';
      s += factors[i].vertices[c[i]];
    }
    return s + ")";
  };
  auto moved = [&](std::size_t p, std::size_t i, std::size_t to) {
    const auto c = coords(p);
    return p + (to - c[i]) * stride[i];  // unsigned wrap cancels correctly
  };

  std::vector<std::string> vertices;
  for (std::size_t p = 0; p < total; ++p) vertices.push_back(vertex_id(p));

  // edge (i, arrow a, range tuple p)
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Edge> edge_of;
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t a = 0; a < factors[i].arrows.size(); ++a) {
      const auto& arrow = factors[i].arrows[a];
      for (std::size_t p = 0; p < total; ++p) {
        if (coords(p)[i] != arrow.range) continue;
        std::string id = std::string(1, kLetters[i]) + arrow.id;
        if (total > 1) id += "@" + vertices[p];
        edge_of[{i, a, p}] = Edge{static_cast<std::uint32_t>(edges.size())};
        edges.push_back({id, vertices[p], vertices[moved(p, i, arrow.source)],
                         static_cast<Colour>(i)});
      }
    }
  }

  Instance out;
  out.graph = std::make_shared<const ColouredGraph>(k, vertices, std::move(edges));
  std::vector<Square> squares;
  for (Colour i = 0; i < k; ++i) {
    for (Colour j = i + 1; j < k; ++j) {
      for (std::size_t p = 0; p < total; ++p) {
        const auto c = coords(p);
        for (std::size_t a = 0; a < factors[i].arrows.size(); ++a) {
          const auto& e = factors[i].arrows[a];
          if (e.range != c[i]) continue;
          for (std::size_t b = 0; b < factors[j].arrows.size(); ++b) {
            const auto& f = factors[j].arrows[b];
            if (f.range != c[j]) continue;
            const std::size_t after_e = moved(p, i, e.source);
            const std::size_t after_f = moved(p, j, f.source);
            squares.push_back(Square{i, j, edge_of.at({i, a, p}), edge_of.at({j, b, after_e}),
                                     edge_of.at({j, b, p}), edge_of.at({i, a, after_f})});
          }
        }
      }
    }
  }
  out.squares = SquareCollection(*out.graph, std::move(squares));
  std::string name;
  for (const auto& f : factors) name += (name.empty() ? "" : " x ") + f.name;
  out.meta.name = name;
  out.meta.provenance = "product";
  return out;
}

// --- PRW basic data ---------------------------------------------------------

bool PrwResult::bijective() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

namespace {

using Point = std::pair<std::uint32_t, std::uint32_t>;
using Values = std::vector<std::uint32_t>;

Point shift(Point p, std::uint32_t a, std::uint32_t b) { return {p.first + a, p.second + b}; }

/// Functions on a finite point set all of whose listed windows satisfy
/// `ok`. Points are assigned in sorted order and each window is tested as
/// soon as its last point is known.
class WindowedFunctions {
 public:
  WindowedFunctions(std::vector<Point> domain, std::uint32_t q) : domain_(std::move(domain)), q_(q) {
    std::sort(domain_.begin(), domain_.end());
    for (std::size_t n = 0; n < domain_.size(); ++n) position_[domain_[n]] = n;
    due_.resize(domain_.size());
  }

  std::size_t index(Point p) const { return position_.at(p); }
  const std::vector<Point>& domain() const { return domain_; }

  /// A window is a list of domain points (in a fixed order).
  std::size_t add_window(const std::vector<Point>& points) {
    std::vector<std::size_t> idx;
    std::size_t last = 0;
    for (auto p : points) {
      idx.push_back(index(p));
      last = std::max(last, idx.back());
    }
    windows_.push_back(std::move(idx));
    due_[last].push_back(windows_.size() - 1);
    return windows_.size() - 1;
  }

  Values read(const Values& f, std::size_t window) const {
    Values out;
    for (auto n : windows_[window]) out.push_back(f[n]);
    return out;
  }

  template <typename Ok, typename Visit>
  void enumerate(Ok&& ok, Visit&& visit, std::size_t budget) const {
    Values f(domain_.size(), 0);
    std::size_t nodes = 0;
    enumerate_from(0, f, ok, visit, nodes, budget);
  }

 private:
  template <typename Ok, typename Visit>
  void enumerate_from(std::size_t at, Values& f, Ok& ok, Visit& visit, std::size_t& nodes,
                      std::size_t budget) const {
    if (at == domain_.size()) {
      visit(f);
      return;
    }
    for (std::uint32_t x = 0; x < q_; ++x) {
      if (++nodes > budget)
        throw Error(ErrorKind::EnumerationLimit, "too many partial functions to enumerate");
      f[at] = x;
      bool good = true;
      for (auto w : due_[at])
        if (!ok(read(f, w))) {
          good = false;
          break;
        }
      if (good) enumerate_from(at + 1, f, ok, visit, nodes, budget);
    }
  }

  std::vector<Point> domain_;
  std::uint32_t q_;
  std::map<Point, std::size_t> position_;
  std::vector<std::vector<std::size_t>> windows_;
  std::vector<std::vector<std::size_t>> due_;
};

std::string values_id(const std::string& head, const Values& v) {
  std::string s = head + "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace

PrwResult prw_2graph(const BasicData& data, const Degree& degree_cap) {
  const auto& T = data.T;
  if (T.empty()) throw Error(ErrorKind::Domain, "T must be nonempty");
  if (data.w.size() != T.size()) throw Error(ErrorKind::Domain, "w must give one weight per point of T");
  if (data.q == 0) throw Error(ErrorKind::Domain, "q must be positive");
  if (data.t >= data.q) throw Error(ErrorKind::Domain, "t must lie in 0..q-1");
  if (degree_cap.k() != 2) throw Error(ErrorKind::Domain, "degree cap must have two coordinates");
  const std::set<Point> tset(T.begin(), T.end());
  if (tset.size() != T.size()) throw Error(ErrorKind::Domain, "T has repeated points");
  for (auto [a, b] : T)
    if ((a > 0 && !tset.count({a - 1, b})) || (b > 0 && !tset.count({a, b - 1})))
      throw Error(ErrorKind::Domain, "T is not hereditary");
  std::uint32_t d1 = 0, d2 = 0;
  for (auto [a, b] : T) {
    if (b == 0) d1 = std::max(d1, a);
    if (a == 0) d2 = std::max(d2, b);
  }
  if (d1 == 0 || d2 == 0) throw Error(ErrorKind::Domain, "T needs corners d1 e1, d2 e2 with d_i >= 1");
  std::map<Point, std::uint32_t> weight;
  for (std::size_t n = 0; n < T.size(); ++n) weight[T[n]] = data.w[n] % data.q;
  // In Z/1 every weight is zero, so the corner condition is waived there.
  if (data.q > 1 && (weight.at({d1, 0}) == 0 || weight.at({0, d2}) == 0))
    throw Error(ErrorKind::Domain, "corner weights must be nonzero");
  double size = 1;
  for (std::size_t n = 0; n < T.size(); ++n) size *= data.q;
  if (size > 1e5) throw Error(ErrorKind::EnumerationLimit, "q^|T| exceeds 10^5");

  const std::vector<Point> tsorted(tset.begin(), tset.end());
  const std::uint32_t t = data.t % data.q;
  auto is_vertex = [&](const Values& v) {
    std::uint64_t sum = 0;
    for (std::size_t n = 0; n < v.size(); ++n) sum += std::uint64_t{weight.at(tsorted[n])} * v[n];
    return sum % data.q == t;
  };
  auto window = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<Point> pts;
    for (auto p : tsorted) pts.push_back(shift(p, a, b));
    return pts;
  };
  // T(m): union of the translates T + n, n <= m
  auto domain_of = [&](const Degree& m) {
    std::set<Point> pts;
    for (std::uint32_t a = 0; a <= m[0]; ++a)
      for (std::uint32_t b = 0; b <= m[1]; ++b)
        for (auto p : tsorted) pts.insert(shift(p, a, b));
    return std::vector<Point>(pts.begin(), pts.end());
  };
  constexpr std::size_t kBudget = 50'000'000;

  // vertices
  std::map<Values, std::string> vertex_name;
  std::vector<std::string> vertices;
  {
    WindowedFunctions fs(tsorted, data.q);
    fs.add_window(tsorted);
    fs.enumerate(is_vertex, [&](const Values& f) {
      vertices.push_back(values_id("v", f));
      vertex_name[f] = vertices.back();
    }, kBudget);
  }

  // edges: functions of degree e_i, keyed by their values on T u (T + e_i)
  std::map<std::pair<Colour, Values>, std::string> edge_name;
  std::vector<EdgeSpec> edges;
  for (Colour i = 0; i < 2; ++i) {
    const Degree ei = Degree::unit(2, i);
    WindowedFunctions fs(domain_of(ei), data.q);
    const auto w0 = fs.add_window(window(0, 0));
    const auto w1 = fs.add_window(window(i == 0, i == 1));
    fs.enumerate(is_vertex, [&](const Values& f) {
      const std::string id = values_id(i == 0 ? "b" : "r", f);
      edge_name[{i, f}] = id;
      edges.push_back({id, vertex_name.at(fs.read(f, w0)), vertex_name.at(fs.read(f, w1)), i});
    }, kBudget);
  }

  PrwResult result;
  Instance& out = result.instance;
  out.graph = std::make_shared<const ColouredGraph>(2, vertices, std::move(edges));
  const ColouredGraph& g = *out.graph;

  // mu_lambda for a function of degree m
  auto cube_of = [&](const WindowedFunctions& fs, const Values& f, const Degree& m) {
    CubeMorphism c(m);
    const GridShape& shape = c.shape();
    for (std::size_t idx = 0; idx < shape.point_count(); ++idx) {
      const Degree n = shape.point(idx);
      Values v;
      for (auto p : window(n[0], n[1])) v.push_back(f[fs.index(p)]);
      c.set_vertex(idx, g.vertex(vertex_name.at(v)));
      for (Colour i = 0; i < 2; ++i) {
        if (n[i] >= m[i]) continue;
        Values e;
        for (auto p : domain_of(Degree::unit(2, i))) e.push_back(f[fs.index(shift(p, n[0], n[1]))]);
        c.set_edge(idx, i, g.edge(edge_name.at({i, e})));
      }
    }
    return c;
  };
  auto functions_of_degree = [&](const Degree& m, auto&& visit) {
    WindowedFunctions fs(domain_of(m), data.q);
    for (std::uint32_t a = 0; a <= m[0]; ++a)
      for (std::uint32_t b = 0; b <= m[1]; ++b) fs.add_window(window(a, b));
    fs.enumerate(is_vertex, [&](const Values& f) { visit(fs, f); }, kBudget);
  };

  std::vector<Square> squares;
  const Degree top{1, 1};
  functions_of_degree(top, [&](const WindowedFunctions& fs, const Values& f) {
    const auto c = cube_of(fs, f, top);
    squares.push_back(Square{0, 1, c.edge(Degree{0, 0}, 0), c.edge(Degree{1, 0}, 1),
                             c.edge(Degree{0, 0}, 1), c.edge(Degree{0, 1}, 0)});
  });
  out.squares = SquareCollection(g, std::move(squares));
  out.meta.name = "prw q=" + std::to_string(data.q) + " t=" + std::to_string(t);
  out.meta.provenance = "prw";

  const KGraph lambda = out.kgraph();
  for (const auto& m : degrees_between(Degree(2), degree_cap)) {
    PrwDegreeCheck check;
    check.m = m;
    std::set<CubeMorphism> seen;
    functions_of_degree(m, [&](const WindowedFunctions& fs, const Values& f) {
      ++check.functions;
      auto c = cube_of(fs, f, m);
      if (cube_defect(g, c, &out.squares)) check.compatible = false;
      if (!seen.insert(std::move(c)).second) check.injective = false;
    });
    check.cubes = lambda.valid() ? paths_of_degree(lambda, std::nullopt, m).size() : 0;
    result.checks.push_back(check);
  }
  return result;
}

// --- random instances ------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<std::uint32_t>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<std::uint32_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

std::size_t row_sum(const Matrix& a, std::size_t i) {
  std::size_t s = 0;
  for (auto x : a[i]) s += x;
  return s;
}

Instance random_k2(const RandomSizes& sizes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < sizes.max_attempts; ++attempt) {
    const std::size_t n = 1 + rng() % std::max<std::size_t>(sizes.max_vertices, 1);
    Matrix blue(n, std::vector<std::uint32_t>(n, 0));
    for (auto& row : blue)
      for (auto& x : row) x = (rng() % 10) < 4 ? 1 : 0;
    for (auto& row : blue)
      if (std::all_of(row.begin(), row.end(), [](auto x) { return x == 0; })) row[rng() % n] = 1;
    // red = alpha blue + beta I + gamma blue^2 commutes with blue
    const std::uint32_t alpha = rng() % 2, beta = rng() % 2, gamma = rng() % 2;
    if (alpha + beta + gamma == 0) continue;
    const Matrix sq = multiply(blue, blue);
    Matrix red(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        red[i][j] = alpha * blue[i][j] + (i == j ? beta : 0) + gamma * sq[i][j];
    bool fits = true;
    for (std::size_t i = 0; i < n; ++i)
      if (row_sum(red, i) == 0 || row_sum(blue, i) + row_sum(red, i) > sizes.max_in_degree)
        fits = false;
    if (!fits) continue;

    std::vector<std::string> vertices;
    for (std::size_t v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<EdgeSpec> edges;
    std::size_t nb = 0, nr = 0;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u) {
        for (std::uint32_t c = 0; c < blue[v][u]; ++c)
          edges.push_back({"b" + std::to_string(nb++), vertices[v], vertices[u], 0});
        for (std::uint32_t c = 0; c < red[v][u]; ++c)
          edges.push_back({"r" + std::to_string(nr++), vertices[v], vertices[u], 1});
      }
    Instance out;
    out.graph = std::make_shared<const ColouredGraph>(2, vertices, std::move(edges));
    const auto& g = *out.graph;

    std::vector<Square> squares;
    for (std::uint32_t v = 0; v < n; ++v) {
      // endpoint class (v, u): blue-red paths against red-blue paths
      std::map<std::uint32_t, std::vector<std::pair<Edge, Edge>>> br, rb;
      for (Edge x : g.edges_into(Vertex{v}, 0))
        for (Edge y : g.edges_into(g.source(x), 1)) br[ix(g.source(y))].emplace_back(x, y);
      for (Edge x : g.edges_into(Vertex{v}, 1))
        for (Edge y : g.edges_into(g.source(x), 0)) rb[ix(g.source(y))].emplace_back(x, y);
      for (auto& [u, left] : br) {
        auto& right = rb[u];
        if (left.size() != right.size())
          throw Error(ErrorKind::Domain, "internal: endpoint class sizes differ");
        std::shuffle(right.begin(), right.end(), rng);
        for (std::size_t t = 0; t < left.size(); ++t)
          squares.push_back(Square{0, 1, left[t].first, left[t].second, right[t].first,
                                   right[t].second});
      }
    }
    out.squares = SquareCollection(g, std::move(squares));
    out.meta.name = "random k=2 seed=" + std::to_string(seed);
    out.meta.provenance = "random";
    out.meta.seed = seed;
    return out;
  }
  throw Error(ErrorKind::EnumerationLimit, "no random instance fits the requested sizes");
}

Instance random_k3(const RandomSizes& sizes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < sizes.max_attempts; ++attempt) {
    std::vector<OneGraph> factors;
    std::size_t vertices = 1, degree = 0;
    for (int i = 0; i < 3; ++i) {
      switch (rng() % 5) {
        case 0: factors.push_back(bouquet_graph(1)); break;
        case 1: factors.push_back(cycle_graph(2)); break;
        case 2: factors.push_back(cycle_graph(3)); break;
        case 3: factors.push_back(bouquet_graph(2)); break;
        default: factors.push_back(complete_graph(2)); break;
      }
      vertices *= factors.back().vertices.size();
      degree += factors.back().arrows.size() / factors.back().vertices.size();
    }
    if (vertices > sizes.max_vertices || degree > sizes.max_in_degree) continue;
    Instance out = product_of_1graphs(factors);
    out.meta.name = "random k=3 seed=" + std::to_string(seed) + ": " + out.meta.name;
    out.meta.provenance = "random";
    out.meta.seed = seed;
    return out;
  }
  throw Error(ErrorKind::EnumerationLimit, "no random product fits the requested sizes");
}

}  // namespace

Instance random_instance(std::size_t k, const RandomSizes& sizes, std::uint64_t seed) {
  if (k == 2) return random_k2(sizes, seed);
  if (k == 3) return random_k3(sizes, seed);
  throw Error(ErrorKind::Domain, "random instances are available for k = 2 and k = 3");
}

std::size_t enumerate_complete_collections(
    const ColouredGraph& g, std::size_t limit,
    const std::function<bool(const std::vector<Square>&)>& visit) {
  struct EndpointClass {
    Colour i, j;
    std::vector<std::pair<Edge, Edge>> ij, ji;
  };
  std::vector<EndpointClass> classes;
  for (Colour i = 0; i < g.k(); ++i)
    for (Colour j = i + 1; j < g.k(); ++j)
      for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        std::map<std::uint32_t, EndpointClass> by_source;
        for (Edge x : g.edges_into(Vertex{v}, i))
          for (Edge y : g.edges_into(g.source(x), j)) {
            auto& c = by_source.try_emplace(ix(g.source(y)), EndpointClass{i, j, {}, {}}).first->second;
            c.ij.emplace_back(x, y);
          }
        for (Edge x : g.edges_into(Vertex{v}, j))
          for (Edge y : g.edges_into(g.source(x), i)) {
            auto& c = by_source.try_emplace(ix(g.source(y)), EndpointClass{i, j, {}, {}}).first->second;
            c.ji.emplace_back(x, y);
          }
        for (auto& [u, c] : by_source) {
          if (c.ij.size() != c.ji.size()) return 0;  // no perfect matching anywhere
          classes.push_back(std::move(c));
        }
      }

  std::vector<std::vector<std::size_t>> perm(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    perm[c].resize(classes[c].ji.size());
    for (std::size_t t = 0; t < perm[c].size(); ++t) perm[c][t] = t;
  }
  std::size_t produced = 0;
  while (produced < limit) {
    std::vector<Square> squares;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& cls = classes[c];
      for (std::size_t t = 0; t < cls.ij.size(); ++t) {
        const auto& [a, b] = cls.ij[t];
        const auto& [b2, a2] = cls.ji[perm[c][t]];
        squares.push_back(Square{cls.i, cls.j, a, b, b2, a2});
      }
    }
    ++produced;
    if (!visit(squares)) break;
    std::size_t c = classes.size();
    bool advanced = false;
    while (c-- > 0)
      if (std::next_permutation(perm[c].begin(), perm[c].end())) {
        advanced = true;
        break;
      }
    if (!advanced) break;
  }
  return produced;
}

}  // namespace kgraph
