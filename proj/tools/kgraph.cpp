// kgraph: command-line front end. Reports go to stdout as JSON, a short
// human summary goes to stderr. Exit codes: 0 holds/pass, 1 fails (with a
// witness in the report), 2 inconclusive, 3 input error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kgraph/error.hpp"
#include "kgraph/generators.hpp"
#include "kgraph/io.hpp"

using namespace kgraph;
using io::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;

int exit_code(Status s) {
  switch (s) {
    case Status::Holds: return kPass;
    case Status::Fails: return kFail;
    case Status::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int emit(const json& report, int code, const std::string& summary) {
  std::cout << report.dump(2) << '\n';
  std::cerr << summary << '\n';
  return code;
}

ColouredPath path_arg(const ColouredGraph& g, const std::string& csv) {
  const auto ids = io::split_ids(csv);
  return validate_path(g, std::span<const std::string>(ids));
}

Degree degree_arg(const std::string& text, std::size_t k, const char* flag) {
  const Degree d = Degree::parse(text);
  if (d.k() != k)
    throw Error(ErrorKind::Schema, std::string(flag) + " needs " + std::to_string(k) + " entries");
  return d;
}

/// Instance plus the category built on it, rejecting invalid presentations.
struct Loaded {
  Instance instance;
  KGraph lambda;
};

Loaded load_valid(const std::string& path, std::size_t budget) {
  Instance inst = io::load(path);
  KGraph lambda = inst.kgraph();
  lambda.require_valid();
  lambda.set_cell_budget(budget);
  return {std::move(inst), std::move(lambda)};
}

// ---------------------------------------------------------------------------

struct Options {
  std::string instance;
  std::size_t budget = kDefaultCellBudget;
  // normalize / equiv
  std::string path, x, y;
  bool witness = false;
  // enumerate
  std::string vertex, degree;
  std::size_t max_paths = 1'000'000;
  // analyze
  std::string pair_bound, path_bound, n_bound;
  std::size_t pair_budget = 200'000;
  // validate
  bool all = false;
  // gen
  std::string out;
  std::size_t k = 2;
  std::string m;
  std::vector<std::string> factors;
  std::string T, w, cap = "2,2";
  std::uint32_t q = 2, t = 0;
  std::uint64_t seed = 1;
  std::size_t max_vertices = 3, max_in_degree = 4;
};

int cmd_validate(const Options& o) {
  Instance inst = io::load(o.instance);
  const auto& g = *inst.graph;
  json report;
  const auto completeness = check_complete(g, inst.squares);
  report["complete"] = completeness.complete;
  json missing = json::array();
  for (const auto& v : completeness.violations)
    missing.push_back({{"path", {g.id(v.first), g.id(v.second)}}, {"owners", v.owners}});
  report["completeness_violations"] = std::move(missing);
  bool associative = false;
  if (completeness.complete) {
    const auto assoc = check_associative(g, inst.squares, o.all);
    associative = assoc.associative;
    json bad = json::array();
    for (const auto& r : assoc.violations)
      bad.push_back({{"path", {g.id(r.f), g.id(r.g), g.id(r.h)}},
                     {"route_one", {g.id(r.up_h2), g.id(r.up_g2), g.id(r.up_f2)}},
                     {"route_two", {g.id(r.lo_h2), g.id(r.lo_g2), g.id(r.lo_f2)}}});
    report["associativity_violations"] = std::move(bad);
  }
  report["associative"] = associative;
  const auto rf = is_row_finite_no_sources(g);
  report["row_finite_no_sources"] = rf.holds;
  const bool ok = completeness.complete && associative;
  report["status"] = ok ? "holds" : "fails";
  return emit(report, ok ? kPass : kFail,
              ok ? "valid: complete and associative"
                 : completeness.complete ? "invalid: not associative" : "invalid: not complete");
}

int cmd_normalize(const Options& o) {
  auto [inst, lambda] = load_valid(o.instance, o.budget);
  const auto x = path_arg(lambda.graph(), o.path);
  const auto cube = lambda.normalize(x);
  return emit(io::to_json(lambda.graph(), cube), kPass,
              "normalized to degree " + cube.degree().to_string());
}

int cmd_equiv(const Options& o) {
  auto [inst, lambda] = load_valid(o.instance, o.budget);
  const auto& g = lambda.graph();
  const auto x = path_arg(g, o.x), y = path_arg(g, o.y);
  const bool same = equivalent(lambda, x, y);
  json report{{"status", same ? "holds" : "fails"}, {"equivalent", same}};
  if (same && o.witness) report["witness"] = io::to_json(g, witness_chain(lambda, x, y));
  if (!same) {
    // the certificate of inequivalence is a pair of distinct normal forms
    report["normal_forms"] = {io::to_json(g, lambda.normalize(x)), io::to_json(g, lambda.normalize(y))};
  }
  return emit(report, same ? kPass : kFail, same ? "equivalent" : "not equivalent");
}

int cmd_enumerate(const Options& o) {
  auto [inst, lambda] = load_valid(o.instance, o.budget);
  const auto& g = lambda.graph();
  std::optional<Vertex> v;
  if (!o.vertex.empty()) {
    v = g.find_vertex(o.vertex);
    if (!v) throw Error(ErrorKind::UnknownId, "unknown vertex '" + o.vertex + "'");
  }
  const Degree m = degree_arg(o.degree, g.k(), "--degree");
  EnumerationOptions opts;
  opts.max_paths = o.max_paths;
  const auto paths = paths_of_degree(lambda, v, m, opts);
  json list = json::array();
  for (const auto& p : paths) list.push_back(io::to_json(g, p));
  json report{{"status", "holds"}, {"degree", m.coords()}, {"count", paths.size()}, {"paths", list}};
  if (v) report["vertex"] = o.vertex;
  return emit(report, kPass, std::to_string(paths.size()) + " paths of degree " + m.to_string());
}

int cmd_skeleton(const Options& o) {
  auto [inst, lambda] = load_valid(o.instance, o.budget);
  const auto sk = extract_skeleton(lambda);
  return emit(io::to_json(sk), kPass,
              "skeleton: " + std::to_string(sk.graph->vertex_count()) + " vertices, " +
                  std::to_string(sk.graph->edge_count()) + " edges, " +
                  std::to_string(sk.squares.size()) + " squares");
}

int cmd_roundtrip(const Options& o) {
  auto [inst, lambda] = load_valid(o.instance, o.budget);
  const auto r = verify_rho(lambda);
  json report{{"status", r.passed ? "holds" : "fails"},
              {"result", r.passed ? "pass" : "fail"},
              {"squares_checked", r.squares_checked},
              {"failures", r.failures}};
  return emit(report, r.passed ? kPass : kFail, r.passed ? "pass" : "fail");
}

int cmd_analyze(const Options& o) {
  auto [inst, lambda] = load_valid(o.instance, o.budget);
  const std::size_t k = lambda.k();
  const Degree ones = Degree::ones(k);
  SimplicityBounds b;
  b.pair_bound = o.pair_bound.empty() ? ones + ones : degree_arg(o.pair_bound, k, "--pair-bound");
  b.path_bound = o.path_bound.empty() ? b.pair_bound + b.pair_bound
                                      : degree_arg(o.path_bound, k, "--path-bound");
  b.n_bound = o.n_bound.empty() ? b.path_bound : degree_arg(o.n_bound, k, "--n-bound");
  const auto verdict = simplicity_verdict(lambda, b);
  json report = io::to_json(lambda.graph(), verdict);
  std::string summary = std::string("simplicity: ") + to_string(verdict.status) +
                        " (aperiodic: " + to_string(verdict.aperiodicity.status) +
                        ", cofinal: " + to_string(verdict.cofinality.status) + ")";
  return emit(report, exit_code(verdict.status), summary);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_points(const std::string& text) {
  // points separated by ';' or whitespace: "0,0;1,0;0,1" or "0,0 1,0 0,1"
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ';', ' ');
  std::stringstream in(spaced);
  std::string part;
  while (in >> part) {
    const Degree p = Degree::parse(part);
    if (p.k() != 2) throw Error(ErrorKind::Schema, "--T points need two coordinates: '" + part + "'");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

int write_instance(const Options& o, const Instance& inst, const std::string& summary) {
  if (o.out.empty()) {
    std::cout << io::to_json(inst).dump(2) << '\n';
  } else {
    io::save(inst, o.out);
  }
  std::cerr << summary << '\n';
  return kPass;
}

int cmd_gen(const std::string& kind, const Options& o) {
  if (kind == "omega") {
    const Degree m = degree_arg(o.m, o.k, "--m");
    return write_instance(o, omega(o.k, m), "omega grid " + m.to_string());
  }
  if (kind == "product") {
    if (o.factors.empty()) throw Error(ErrorKind::Schema, "product needs --factor (e.g. cycle:3)");
    std::vector<OneGraph> fs;
    for (const auto& f : o.factors) fs.push_back(parse_factor(f));
    const auto inst = product_of_1graphs(fs);
    return write_instance(o, inst, "product " + inst.meta.name);
  }
  if (kind == "prw") {
    BasicData data;
    data.T = parse_points(o.T.empty() ? "0,0;1,0;0,1" : o.T);
    data.q = o.q;
    data.t = o.t;
    if (o.w.empty()) {
      data.w.assign(data.T.size(), 1);
    } else {
      data.w = io::parse_uints(o.w);
    }
    const auto result = prw_2graph(data, degree_arg(o.cap, 2, "--cap"));
    std::string summary = std::string("prw: bijective up to ") + o.cap + ": " +
                          (result.bijective() ? "yes" : "NO");
    return write_instance(o, result.instance, summary);
  }
  if (kind == "random") {
    RandomSizes sizes;
    sizes.max_vertices = o.max_vertices;
    sizes.max_in_degree = o.max_in_degree;
    return write_instance(o, random_instance(o.k, sizes, o.seed),
                          "random k=" + std::to_string(o.k) + " seed=" + std::to_string(o.seed));
  }
  throw Error(ErrorKind::Schema, "unknown generator '" + kind + "' (omega|product|prw|random)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kgraph: k-graphs from coloured graphs and commuting squares"};
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("instance", o.instance, "instance JSON file")->required();
    sub->add_option("--budget", o.budget, "cell budget for cube construction");
  };

  auto* validate = app.add_subcommand("validate", "check completeness and associativity");
  add_instance(validate);
  validate->add_flag("--all", o.all, "report every associativity violation");

  auto* normalize = app.add_subcommand("normalize", "normal form of an edge path");
  add_instance(normalize);
  normalize->add_option("--path", o.path, "comma-separated edge ids")->required();

  auto* equiv = app.add_subcommand("equiv", "decide x ~ y");
  add_instance(equiv);
  equiv->add_option("--x", o.x, "comma-separated edge ids")->required();
  equiv->add_option("--y", o.y, "comma-separated edge ids")->required();
  equiv->add_flag("--witness", o.witness, "include a flip chain from x to y");

  auto* enumerate = app.add_subcommand("enumerate", "list v Lambda^m");
  add_instance(enumerate);
  enumerate->add_option("--vertex", o.vertex, "range vertex (all vertices if omitted)");
  enumerate->add_option("--degree", o.degree, "degree, e.g. 2,1")->required();
  enumerate->add_option("--max-paths", o.max_paths, "enumeration limit");

  auto* skeleton = app.add_subcommand("skeleton", "emit the skeleton as an instance");
  add_instance(skeleton);

  auto* roundtrip = app.add_subcommand("verify-roundtrip", "check E is the skeleton of Lambda");
  add_instance(roundtrip);

  auto* analyze = app.add_subcommand("analyze", "bounded aperiodicity, cofinality, simplicity");
  add_instance(analyze);
  analyze->add_option("--pair-bound", o.pair_bound, "pairs m != n up to this degree (default 2,..,2)");
  analyze->add_option("--path-bound", o.path_bound, "separators up to this degree (default 2 x pair bound)");
  analyze->add_option("--n-bound", o.n_bound, "cofinality depth (default path bound)");

  auto* gen = app.add_subcommand("gen", "write a generated instance");
  std::string gen_kind;
  gen->add_option("kind", gen_kind, "omega | product | prw | random")->required();
  gen->add_option("--out,-o", o.out, "output file (stdout if omitted)");
  gen->add_option("--k", o.k, "rank");
  gen->add_option("--m", o.m, "omega: upper corner, e.g. 2,2");
  gen->add_option("--factor", o.factors, "product: cycle:N | bouquet:N | complete:N | loop");
  gen->add_option("--T", o.T, "prw: points of T, e.g. \"0,0;1,0;0,1\" or \"0,0 1,0 0,1\"");
  gen->add_option("--q", o.q, "prw: modulus");
  gen->add_option("--t", o.t, "prw: target");
  gen->add_option("--w", o.w, "prw: weights, one per point of T");
  gen->add_option("--cap", o.cap, "prw: check bijectivity up to this degree");
  gen->add_option("--seed", o.seed, "random: seed");
  gen->add_option("--max-vertices", o.max_vertices, "random: vertex bound");
  gen->add_option("--max-in-degree", o.max_in_degree, "random: total in-degree bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*normalize) return cmd_normalize(o);
    if (*equiv) return cmd_equiv(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*skeleton) return cmd_skeleton(o);
    if (*roundtrip) return cmd_roundtrip(o);
    if (*analyze) return cmd_analyze(o);
    if (*gen) return cmd_gen(gen_kind, o);
  } catch (const Error& e) {
    json report{{"status", "error"}, {"kind", to_string(e.kind())}, {"message", e.what()}};
    if (e.kind() == ErrorKind::Inconclusive || e.kind() == ErrorKind::EnumerationLimit) {
      report["status"] = "inconclusive";
      return emit(report, kInconclusive, std::string("inconclusive: ") + e.what());
    }
    return emit(report, kInputError, std::string("error: ") + e.what());
  } catch (const std::exception& e) {
    json report{{"status", "error"}, {"kind", "internal"}, {"message", e.what()}};
    return emit(report, kInputError, std::string("error: ") + e.what());
  }
  std::cerr << app.help() << '\n';
  return kInputError;
}
