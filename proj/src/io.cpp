#include "kgraph/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::Schema, path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* name) {
  if (!obj.is_object()) schema(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) schema(path.empty() ? name : path + "." + name, "missing field");
  return *it;
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string item(const std::string& path, std::size_t n) {
  return path + "[" + std::to_string(n) + "]";
}

Colour colour_at(const json& j, const std::string& path, std::size_t k) {
  const auto c = int_at(j, path);
  if (c < 1 || static_cast<std::size_t>(c) > k)
    schema(path, "colour " + std::to_string(c) + " outside 1.." + std::to_string(k));
  return static_cast<Colour>(c - 1);
}

Edge edge_ref(const ColouredGraph& g, const json& j, const std::string& path) {
  const auto id = string_at(j, path);
  const auto e = g.find_edge(id);
  if (!e) schema(path, "unknown edge '" + id + "'");
  return *e;
}

json degree_json(const Degree& d) { return json(d.coords()); }

json edge_list(const ColouredGraph& g, const std::vector<Edge>& es) {
  json out = json::array();
  for (Edge e : es) out.push_back(g.id(e));
  return out;
}

json graph_and_squares(const ColouredGraph& g, const SquareCollection& c) {
  json j;
  j["k"] = g.k();
  j["vertices"] = g.vertex_ids();
  json edges = json::array();
  for (const auto& e : g.edge_specs())
    edges.push_back({{"id", e.id}, {"range", e.range}, {"source", e.source}, {"colour", e.colour + 1}});
  j["edges"] = std::move(edges);
  json squares = json::array();
  for (const auto& s : c.squares())
    squares.push_back({{"i", s.i + 1},
                       {"j", s.j + 1},
                       {"ci_first", {g.id(s.a), g.id(s.b)}},
                       {"cj_first", {g.id(s.b2), g.id(s.a2)}}});
  j["squares"] = std::move(squares);
  return j;
}

}  // namespace

json to_json(const Instance& instance) {
  json j = graph_and_squares(*instance.graph, instance.squares);
  json meta = json::object();
  if (!instance.meta.name.empty()) meta["name"] = instance.meta.name;
  if (!instance.meta.provenance.empty()) meta["provenance"] = instance.meta.provenance;
  if (instance.meta.seed) meta["seed"] = *instance.meta.seed;
  if (!meta.empty()) j["metadata"] = std::move(meta);
  return j;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) schema("$", "instance must be a JSON object");
  const auto k_raw = int_at(field(j, "", "k"), "k");
  if (k_raw < 1) schema("k", "must be at least 1");
  const auto k = static_cast<std::size_t>(k_raw);

  const json& vs = field(j, "", "vertices");
  if (!vs.is_array()) schema("vertices", "expected an array");
  std::vector<std::string> vertices;
  std::set<std::string> vertex_set;
  for (std::size_t n = 0; n < vs.size(); ++n) {
    vertices.push_back(string_at(vs[n], item("vertices", n)));
    if (!vertex_set.insert(vertices.back()).second)
      schema(item("vertices", n), "duplicate vertex id '" + vertices.back() + "'");
  }

  const json& es = field(j, "", "edges");
  if (!es.is_array()) schema("edges", "expected an array");
  std::vector<EdgeSpec> edges;
  std::set<std::string> edge_set;
  for (std::size_t n = 0; n < es.size(); ++n) {
    const std::string path = item("edges", n);
    const json& e = es[n];
    EdgeSpec spec;
    spec.id = string_at(field(e, path, "id"), path + ".id");
    spec.range = string_at(field(e, path, "range"), path + ".range");
    spec.source = string_at(field(e, path, "source"), path + ".source");
    spec.colour = colour_at(field(e, path, "colour"), path + ".colour", k);
    if (!edge_set.insert(spec.id).second) schema(path + ".id", "duplicate edge id '" + spec.id + "'");
    if (!vertex_set.count(spec.range)) schema(path + ".range", "unknown vertex '" + spec.range + "'");
    if (!vertex_set.count(spec.source)) schema(path + ".source", "unknown vertex '" + spec.source + "'");
    edges.push_back(std::move(spec));
  }

  Instance out;
  out.graph = std::make_shared<const ColouredGraph>(k, std::move(vertices), std::move(edges));
  const auto& g = *out.graph;

  std::vector<Square> squares;
  if (auto it = j.find("squares"); it != j.end()) {
    if (!it->is_array()) schema("squares", "expected an array");
    for (std::size_t n = 0; n < it->size(); ++n) {
      const std::string path = item("squares", n);
      const json& s = (*it)[n];
      Square sq;
      sq.i = colour_at(field(s, path, "i"), path + ".i", k);
      sq.j = colour_at(field(s, path, "j"), path + ".j", k);
      if (sq.i >= sq.j) schema(path, "needs i < j");
      const json& ci = field(s, path, "ci_first");
      const json& cj = field(s, path, "cj_first");
      if (!ci.is_array() || ci.size() != 2) schema(path + ".ci_first", "expected two edge ids");
      if (!cj.is_array() || cj.size() != 2) schema(path + ".cj_first", "expected two edge ids");
      sq.a = edge_ref(g, ci[0], path + ".ci_first[0]");
      sq.b = edge_ref(g, ci[1], path + ".ci_first[1]");
      sq.b2 = edge_ref(g, cj[0], path + ".cj_first[0]");
      sq.a2 = edge_ref(g, cj[1], path + ".cj_first[1]");
      if (auto why = square_defect(g, sq))
        throw Error(ErrorKind::MalformedCollection, path + ": " + *why);
      squares.push_back(sq);
    }
  }
  out.squares = SquareCollection(g, std::move(squares));

  if (auto it = j.find("metadata"); it != j.end()) {
    if (!it->is_object()) schema("metadata", "expected an object");
    if (auto n = it->find("name"); n != it->end()) out.meta.name = string_at(*n, "metadata.name");
    if (auto p = it->find("provenance"); p != it->end())
      out.meta.provenance = string_at(*p, "metadata.provenance");
    if (auto s = it->find("seed"); s != it->end()) {
      if (!s->is_number_unsigned()) schema("metadata.seed", "expected a non-negative integer");
      out.meta.seed = s->get<std::uint64_t>();
    }
  }
  return out;
}

Instance load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Schema, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Schema, path.string() + ": " + e.what());
  }
  return instance_from_json(j);
}

void save(const Instance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Schema, "cannot write " + path.string());
  out << to_json(instance).dump(2) << '\n';
}

json to_json(const ColouredGraph& g, const CubeMorphism& lambda) {
  json vertices = json::object(), edges = json::object();
  const auto& shape = lambda.shape();
  for (std::size_t idx = 0; idx < shape.point_count(); ++idx) {
    const Degree n = shape.point(idx);
    vertices[GridGraph::vertex_id(n)] = g.id(lambda.vertex_at(idx));
    for (Colour i = 0; i < lambda.k(); ++i)
      if (lambda.edge_at(idx, i) != kNoEdge) edges[GridGraph::edge_id(n, i)] = g.id(lambda.edge_at(idx, i));
  }
  return {{"degree", degree_json(lambda.degree())}, {"vertices", vertices}, {"edges", edges}};
}

CubeMorphism cube_from_json(const ColouredGraph& g, const json& j) {
  const json& d = field(j, "", "degree");
  if (!d.is_array() || d.size() != g.k()) schema("degree", "expected " + std::to_string(g.k()) + " entries");
  std::vector<Degree::value_type> coords;
  for (std::size_t n = 0; n < d.size(); ++n) {
    const auto x = int_at(d[n], item("degree", n));
    if (x < 0) schema(item("degree", n), "must be non-negative");
    coords.push_back(static_cast<Degree::value_type>(x));
  }
  CubeMorphism lambda{Degree(coords)};
  const json& vs = field(j, "", "vertices");
  const json& es = field(j, "", "edges");
  const auto& shape = lambda.shape();
  for (std::size_t idx = 0; idx < shape.point_count(); ++idx) {
    const Degree n = shape.point(idx);
    const std::string key = GridGraph::vertex_id(n);
    const std::string vpath = "vertices." + key;
    const auto id = string_at(field(vs, "vertices", key.c_str()), vpath);
    const auto v = g.find_vertex(id);
    if (!v) schema(vpath, "unknown vertex '" + id + "'");
    lambda.set_vertex(idx, *v);
    for (Colour i = 0; i < g.k(); ++i) {
      if (n[i] >= lambda.degree()[i]) continue;
      const std::string ekey = GridGraph::edge_id(n, i);
      lambda.set_edge(idx, i, edge_ref(g, field(es, "edges", ekey.c_str()), "edges." + ekey));
    }
  }
  if (auto why = cube_defect(g, lambda)) schema("$", *why);
  return lambda;
}

json to_json(const Skeleton& skeleton) {
  return graph_and_squares(*skeleton.graph, skeleton.squares);
}

namespace {

json status_json(Status s) { return to_string(s); }

}  // namespace

json to_json(const ColouredGraph& g, const AperiodicityVerdict& v) {
  json j{{"status", status_json(v.status)},
         {"pair_bound", degree_json(v.pair_bound)},
         {"path_bound", degree_json(v.path_bound)},
         {"pairs", v.pairs},
         {"separated", v.separated},
         {"unresolved", v.unresolved}};
  if (v.witness)
    j["periodicity_witness"] = {{"vertex", g.id(v.witness->v)},
                                {"m", degree_json(v.witness->m)},
                                {"n", degree_json(v.witness->n)},
                                {"bound", degree_json(v.witness->bound)},
                                {"paths_checked", v.witness->paths_checked}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json to_json(const ColouredGraph& g, const CofinalityVerdict& v) {
  json j{{"status", status_json(v.status)}, {"n_bound", degree_json(v.n_bound)}};
  if (v.certificate)
    j["cofinality_certificate"] = {{"v", g.id(v.certificate->v)},
                                   {"w", g.id(v.certificate->w)},
                                   {"u", g.id(v.certificate->u)}};
  json witnesses = json::array();
  for (const auto& w : v.witnesses)
    witnesses.push_back({{"v", g.id(w.v)}, {"w", g.id(w.w)}, {"n", degree_json(w.n)}});
  j["pair_witnesses"] = std::move(witnesses);
  json unresolved = json::array();
  for (const auto& [a, b] : v.unresolved) unresolved.push_back({g.id(a), g.id(b)});
  j["unresolved"] = std::move(unresolved);
  return j;
}

json to_json(const ColouredGraph& g, const SimplicityVerdict& v) {
  return {{"status", status_json(v.status)},
          {"simple", v.status == Status::Holds ? json("simple")
                     : v.status == Status::Fails ? json("not-simple")
                                                 : json("unknown")},
          {"aperiodicity", to_json(g, v.aperiodicity)},
          {"cofinality", to_json(g, v.cofinality)}};
}

json to_json(const ColouredGraph& g, const SwapChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) steps.push_back({{"index", s.index}, {"path", edge_list(g, s.after)}});
  return {{"start", edge_list(g, chain.start)}, {"steps", steps}};
}

std::vector<std::uint32_t> parse_uints(const std::string& csv) {
  const Degree d = Degree::parse(csv);
  return d.coords();
}

std::vector<std::string> split_ids(const std::string& csv) {
  // Product ids such as "f0@(1,2)" carry commas of their own, so only
  // commas outside brackets separate ids.
  std::vector<std::string> out;
  std::string part;
  int depth = 0;
  auto flush = [&] {
    const auto b = part.find_first_not_of(" \t");
    if (b != std::string::npos) out.push_back(part.substr(b, part.find_last_not_of(" \t") - b + 1));
    part.clear();
  };
  for (char ch : csv) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth <= 0) {
      flush();
      continue;
    }
    part += ch;
  }
  flush();
  return out;
}

}  // namespace kgraph::io
