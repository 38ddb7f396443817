#include "equiarbor/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "equiarbor/bounds.hpp"
#include "equiarbor/catalog.hpp"
#include "equiarbor/cuts.hpp"
#include "equiarbor/equiarboreal.hpp"
#include "equiarbor/errors.hpp"
#include "equiarbor/generators.hpp"
#include "equiarbor/matching.hpp"
#include "equiarbor/resistance.hpp"
#include "equiarbor/scheme.hpp"
#include "equiarbor/survey.hpp"
#include "equiarbor/theorems.hpp"
#include "equiarbor/transform.hpp"

namespace equiarbor {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GraphSource {
  std::string family;
  std::string params;
  std::string graph6;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "generator family (" + [] {
      std::string names;
      for (const auto& f : family_names()) names += (names.empty() ? "" : ", ") + f;
      return names;
    }() + ")");
    cmd->add_option("--params", params, "comma-separated generator parameters");
    cmd->add_option("--graph6", graph6, "inline graph6 string");
  }

  bool inline_given() const { return !family.empty() || !graph6.empty(); }

  Graph load(const std::optional<std::string>& file) const {
    const int given = (file ? 1 : 0) + (family.empty() ? 0 : 1) + (graph6.empty() ? 0 : 1);
    if (given != 1) throw UsageError("give exactly one graph source: a file, --family or --graph6");
    if (!graph6.empty()) return parse_graph6(graph6);
    if (!family.empty()) {
      std::vector<long long> values;
      std::stringstream in(params);
      std::string item;
      while (std::getline(in, item, ',')) {
        try {
          std::size_t used = 0;
          values.push_back(std::stoll(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw UsageError("bad generator parameter '" + item + "'");
        }
      }
      return generate(family, values);
    }
    return parse_graph_text(read_file(*file));
  }
};

bool looks_like_json(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

Vertex parse_vertex(const std::string& s) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(s, &used);
    if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
    return static_cast<Vertex>(v);
  } catch (const std::exception&) {
    throw UsageError("bad vertex '" + s + "'");
  }
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("bad integer '" + s + "'");
  }
}

std::pair<long, long> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(s);
    return {v, v};
  }
  const long lo = parse_long(s.substr(0, dots));
  const long hi = parse_long(s.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + s + "'");
  return {lo, hi};
}

std::string rational_field(const std::optional<Rational>& r) { return r ? to_string(*r) : "-"; }

struct Globals {
  std::string format;
  std::size_t jobs = 1;
  bool deterministic = false;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
};

void emit(std::ostream& out, const Globals& g, const json& doc, const std::string& text) {
  if (g.format == "text") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  } else {
    out << doc.dump(2) << '\n';
  }
}

int cmd_analyze(const Graph& g, const Globals& opt, std::ostream& out) {
  json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = g.edge_count();
  doc["simple"] = g.is_simple();
  doc["regularity"] = g.regularity() ? json(*g.regularity()) : json(nullptr);
  doc["connected"] = g.is_connected();
  doc["graph6"] = g.is_simple() ? json(to_graph6(g)) : json(nullptr);
  doc["spanningTrees"] = to_string(spanning_tree_count(g));
  std::ostringstream text;
  text << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << ", spanning trees "
       << to_string(spanning_tree_count(g)) << '\n';
  int status = kExitOk;
  if (g.is_connected() && g.vertex_count() >= 2) {
    const std::size_t lambda = edge_connectivity(g);
    doc["lambda"] = lambda;
    doc["fosterSum"] = to_string(foster_sum(g));
    const EquiarborealVerdict v = check_equiarboreal(g);
    doc["equiarborealReport"] = to_json(v);
    doc["equiarboreal"] = v.is_equiarboreal;
    doc["omega"] = v.omega ? json(to_string(*v.omega)) : json(nullptr);
    text << "lambda " << lambda << ", equiarboreal " << (v.is_equiarboreal ? "yes" : "no") << ", omega "
         << rational_field(v.omega) << '\n';
    if (v.is_equiarboreal) {
      const GodsilBound b = godsil_bound_check(g);
      doc["godsilBound"] = {{"bound", to_string(b.bound)}, {"lambda", b.lambda}, {"holds", b.holds}};
      if (!b.holds) status = kExitCounterexample;
    }
  } else {
    doc["equiarboreal"] = nullptr;
    doc["omega"] = nullptr;
    doc["lambda"] = g.vertex_count() >= 2 ? json(0) : json(nullptr);
  }
  emit(out, opt, doc, text.str());
  return status;
}

int cmd_resist(const std::vector<std::string>& args, const GraphSource& src, const std::string& method,
               const Globals& opt, std::ostream& out) {
  std::optional<std::string> file;
  std::size_t first = 0;
  if (args.size() == 3) {
    file = args[0];
    first = 1;
  } else if (args.size() != 2 || !src.inline_given()) {
    throw UsageError("resist takes <file> <u> <v>, or <u> <v> with --family/--graph6");
  }
  const Vertex u = parse_vertex(args[first]);
  const Vertex v = parse_vertex(args[first + 1]);
  Rational value;
  ResistanceMethod used = ResistanceMethod::LaplacianSolve;
  std::string text_body = file && !src.inline_given() ? read_file(*file) : std::string();
  if (file && looks_like_json(text_body)) {
    if (method == "tree-ratio") throw UsageError("tree-ratio needs an unweighted graph");
    value = resistance(parse_network(text_body), u, v);
  } else {
    const Graph g = file ? parse_graph_text(text_body) : src.load(std::nullopt);
    if (method == "tree-ratio") {
      value = tree_ratio_resistance(g, u, v).value;
      used = ResistanceMethod::TreeRatio;
    } else {
      value = resistance(g, u, v);
    }
  }
  json doc = {{"u", u}, {"v", v}, {"resistance", to_string(value)}, {"method", to_string(used)}};
  emit(out, opt, doc, to_string(value));
  return kExitOk;
}

int cmd_cut(const Graph& g, bool enumerate, bool classify, const Globals& opt, std::ostream& out) {
  json doc;
  std::ostringstream text;
  const std::size_t lambda = edge_connectivity(g);
  doc["lambda"] = lambda;
  text << "lambda " << lambda << '\n';
  int status = kExitOk;
  if (enumerate || classify) {
    const std::vector<EdgeCut> cuts = minimum_cuts(g, opt.enumeration_limit);
    json list = json::array();
    for (const EdgeCut& c : cuts) {
      json row = to_json(c);
      if (classify) row["classification"] = to_json(classify_cut(g, c));
      list.push_back(row);
      text << "cut A = {";
      for (std::size_t i = 0; i < c.side_a.size(); ++i) text << (i ? "," : "") << c.side_a[i];
      text << "} size " << c.size() << (c.is_trivial() ? " trivial" : " non-trivial") << '\n';
    }
    doc["minimumCuts"] = list;
  }
  doc["mainTheorem"] = nullptr;
  if (g.is_connected() && g.is_simple() && g.regularity() && *g.regularity() > 0 && check_equiarboreal(g).is_equiarboreal) {
    const MainTheoremReport report = verify_main_theorem(g, opt.enumeration_limit);
    doc["mainTheorem"] = to_json(report);
    text << "main theorem " << (report.passed() ? "pass" : "FAIL") << '\n';
    if (!report.passed()) status = kExitCounterexample;
  }
  emit(out, opt, doc, text.str());
  return status;
}

int cmd_transform(const std::vector<std::string>& args, const std::vector<std::size_t>& eliminate,
                  const std::vector<std::size_t>& bipartite, const Globals& opt, std::ostream& out) {
  if (args.size() > 1) throw UsageError("transform takes at most one network file");
  if (eliminate.empty() == bipartite.empty()) throw UsageError("transform needs exactly one of --eliminate or --bipartite");
  TransformResult result;
  if (!bipartite.empty()) {
    if (bipartite.size() != 2) throw UsageError("--bipartite takes m n");
    const std::size_t m = bipartite[0];
    const std::size_t n = bipartite[1];
    if (args.empty()) {
      result = bipartite_to_double_star(m, n);
    } else {
      const WeightedNetwork host = parse_network(read_file(args[0]));
      std::vector<Vertex> a(m);
      std::vector<Vertex> b(n);
      for (std::size_t i = 0; i < m; ++i) a[i] = i;
      for (std::size_t j = 0; j < n; ++j) b[j] = m + j;
      result = substitute_bipartite(host, a, b);
    }
  } else {
    if (args.empty()) throw UsageError("--eliminate needs a network file");
    const std::string body = read_file(args[0]);
    const WeightedNetwork net =
        looks_like_json(body) ? parse_network(body) : WeightedNetwork::from_graph(parse_graph_text(body));
    result = eliminate_vertices(net, std::vector<Vertex>(eliminate.begin(), eliminate.end()));
  }
  json log = json::array();
  std::ostringstream text;
  for (const TransformRecord& r : result.log) {
    log.push_back(to_json(r));
    text << to_string(r.kind) << ": removed " << r.removed_vertices.size() << " vertex(es), added "
         << r.added_edges.size() << " edge(s)\n";
  }
  json doc = {{"network", to_json(result.network)}, {"log", log}};
  json map = json::array();
  for (Vertex v : result.vertex_map) map.push_back(v == kNoVertex ? json(nullptr) : json(v));
  doc["vertexMap"] = map;
  text << "result has " << result.network.vertex_count() << " vertices\n";
  emit(out, opt, doc, text.str());
  return kExitOk;
}

int cmd_scheme(const std::vector<std::string>& args, const std::string& from_distance, const GraphSource& src,
               bool godsil, const Globals& opt, std::ostream& out) {
  RelationTable rel;
  if (!from_distance.empty() || src.inline_given()) {
    if (!args.empty()) throw UsageError("give either a relation table or a graph, not both");
    const Graph g = from_distance.empty() ? src.load(std::nullopt) : parse_graph_text(read_file(from_distance));
    rel = distance_relation(g);
  } else {
    if (args.size() != 1) throw UsageError("scheme takes one relation-table file");
    rel = parse_relation_table(read_file(args[0]));
  }
  const SchemeVerification v = verify_scheme(rel);
  json doc = {{"pointCount", rel.point_count}, {"classCount", rel.class_count}, {"verification", to_json(v)}};
  std::ostringstream text;
  text << (v.valid ? "valid" : "invalid") << " " << rel.class_count << "-class table on " << rel.point_count
       << " points\n";
  if (v.violation) {
    text << "axiom " << v.violation->axiom << " fails: " << v.violation->detail << '\n';
  }
  int status = kExitOk;
  if (godsil) {
    if (!v.valid) throw PreconditionError("colour-class checks need a valid scheme");
    const auto scheme = AssociationScheme::from_relation(rel);
    const GodsilReport report = verify_godsil_theorems(*scheme);
    doc["godsil"] = to_json(report);
    for (const ColourClassReport& c : report.classes) {
      text << "class " << c.index << ": degree " << c.degree << (c.connected ? ", connected" : ", disconnected")
           << ", omega " << rational_field(c.omega) << (c.passed ? ", pass" : ", FAIL") << '\n';
    }
    if (!report.passed()) status = kExitCounterexample;
  }
  emit(out, opt, doc, text.str());
  return status;
}

int cmd_fxy(const std::vector<long>& kxy, const Globals& opt, std::ostream& out) {
  const Rational f = f_xy(kxy[0], kxy[1], kxy[2]);
  if (opt.format == "json") {
    out << json({{"k", kxy[0]}, {"x", kxy[1]}, {"y", kxy[2]}, {"value", to_string(f)}}).dump(2) << '\n';
  } else {
    out << to_string(f) << '\n';
  }
  return kExitOk;
}

int cmd_matching(const Graph& g, const Globals& opt, std::ostream& out) {
  const MatchingResult r = has_perfect_matching(g);
  json doc = to_json(r);
  doc["maximumMatchingSize"] = maximum_matching(g).size();
  emit(out, opt, doc, r.has_perfect ? "perfect matching found" : "no perfect matching");
  return kExitOk;
}

// Worked constants with the weights that appear in the contradiction steps,
// each paired with the comparison it is set against.
struct ConstantCase {
  WorkedNetwork id;
  ParamMap params;
  Rational expected;
  Rational ceiling;
};

std::vector<ConstantCase> constant_cases() {
  auto r = [](long p, long q) { return Rational(BigInt(p), BigInt(q)); };
  return {
      {WorkedNetwork::C4w, {{"p", r(2, 3)}, {"q", r(2, 3)}}, r(7, 10), r(2, 3)},
      {WorkedNetwork::C3w, {{"s", r(8, 15)}, {"t", r(9, 20)}}, r(59, 119), r(2, 5)},
      {WorkedNetwork::M2, {{"x2", r(1, 2)}, {"y2", r(1, 2)}}, r(5, 12), r(2, 5)},
      {WorkedNetwork::M3, {{"x3", r(1, 3)}, {"y3", r(1, 4)}}, r(31, 75), r(2, 5)},
      {WorkedNetwork::M2, {{"x2", r(2, 5)}, {"y2", r(2, 5)}}, r(11, 28), r(1, 3)},
      {WorkedNetwork::N2, {{"p", r(2, 5)}, {"q", r(1, 6)}}, r(5, 16), r(2, 7)},
  };
}

int cmd_verify(const std::string& what, const std::string& range, const Globals& opt, std::ostream& out) {
  json doc;
  std::ostringstream text;
  bool ok = true;
  if (what == "claims") {
    const auto [lo, hi] = parse_range(range.empty() ? "7..40" : range);
    if (lo < 7) throw UsageError("claim grids start at k = 7");
    json rows = json::array();
    for (long k = lo; k <= hi; ++k) {
      json row = {{"k", k},
                  {"claim4", verify_claim4(k)},
                  {"appendixB", verify_appendix_b(k)},
                  {"gMonotone", verify_g_monotone(k)},
                  {"k2Bound", verify_k2_bound(k)}};
      row["claim3"] = k >= 8 ? json(verify_claim3_arithmetic(k)) : json(nullptr);
      bool row_ok = true;
      for (const auto& [key, value] : row.items()) {
        if (value.is_boolean() && !value.get<bool>()) row_ok = false;
      }
      row["passed"] = row_ok;
      ok = ok && row_ok;
      text << "k=" << k << (row_ok ? " pass" : " FAIL") << '\n';
      rows.push_back(row);
    }
    doc["grids"] = rows;
  } else if (what == "kirchhoff") {
    const auto [lo, hi] = parse_range(range.empty() ? "3..12" : range);
    if (lo < 2) throw UsageError("the Kirchhoff grid needs k >= 2");
    json rows = json::array();
    for (long k = lo; k <= hi; ++k) {
      std::size_t points = 0;
      std::size_t failures = 0;
      for (const auto& [x, y] : f_domain(k)) {
        ++points;
        if (!kirchhoff_cross_check(k, x, y).ok()) ++failures;
      }
      rows.push_back({{"k", k}, {"points", points}, {"failures", failures}});
      ok = ok && failures == 0;
      text << "k=" << k << ": " << points << " points, " << failures << " failures\n";
    }
    doc["grids"] = rows;
  } else if (what == "constants") {
    json rows = json::array();
    for (const ConstantCase& c : constant_cases()) {
      const Rational value = closed_form(c.id, c.params);
      const bool matches = value == c.expected;
      const bool exceeds = value >= c.ceiling;
      json params = json::object();
      for (const auto& [name, v] : c.params) params[name] = to_string(v);
      rows.push_back({{"network", to_string(c.id)},
                      {"params", params},
                      {"value", to_string(value)},
                      {"expected", to_string(c.expected)},
                      {"comparedWith", to_string(c.ceiling)},
                      {"passed", matches && exceeds}});
      ok = ok && matches && exceeds;
      text << to_string(c.id) << " = " << to_string(value) << " >= " << to_string(c.ceiling)
           << (matches && exceeds ? " pass" : " FAIL") << '\n';
    }
    doc["constants"] = rows;
  } else {
    throw UsageError("verify takes claims, kirchhoff or constants");
  }
  doc["passed"] = ok;
  emit(out, opt, doc, text.str());
  return ok ? kExitOk : kExitCounterexample;
}

int cmd_survey(const std::vector<std::string>& args, const Globals& opt, std::ostream& out, std::ostream& err) {
  if (args.size() > 1) throw UsageError("survey takes at most one manifest");
  std::vector<ManifestItem> manifest;
  if (!args.empty()) {
    manifest = parse_manifest(read_file(args[0]));
  } else if (const char* env = std::getenv("EQUIARBOR_CATALOG"); env && *env) {
    manifest = parse_manifest(read_file(env));
  } else {
    manifest = default_catalog();
  }
  const SurveyReport report = survey(manifest, {opt.jobs, opt.enumeration_limit});
  std::ostringstream text;
  for (const SurveyEntry& e : report.entries) {
    text << to_string(e.status) << "  " << e.graph_name << "  omega " << rational_field(e.omega) << "  lambda "
         << (e.lambda ? std::to_string(*e.lambda) : "-") << '\n';
  }
  text << report.summary.passed << " passed, " << report.summary.failed << " failed, " << report.summary.skipped
       << " skipped of " << report.summary.total << '\n';
  emit(out, opt, report.to_json(opt.deterministic), text.str());
  if (opt.format != "text") {
    err << report.summary.passed << " passed, " << report.summary.failed << " failed, " << report.summary.skipped
        << " skipped of " << report.summary.total << '\n';
  }
  return report.summary.failed > 0 ? kExitCounterexample : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact resistance, cut and association-scheme verification", "equiarbor"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals opt;
  app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", opt.jobs, "worker threads for the survey")->check(CLI::Range(1, 256));
  app.add_flag("--deterministic", opt.deterministic, "omit timestamps");
  app.add_option("--enumeration-limit", opt.enumeration_limit, "largest order for exhaustive cut search")
      ->check(CLI::Range(std::size_t{2}, kHardEnumerationLimit));

  std::vector<std::string> args;
  GraphSource src;

  auto* analyze = app.add_subcommand("analyze", "spanning trees, equiarboreality, edge connectivity");
  analyze->add_option("graph", args, "edge-list or graph6 file");
  src.attach(analyze);

  std::string method = "laplacian";
  auto* resist = app.add_subcommand("resist", "effective resistance between two vertices");
  resist->add_option("args", args, "[file] u v")->required();
  resist->add_option("--method", method, "laplacian or tree-ratio")->check(CLI::IsMember({"laplacian", "tree-ratio"}));
  src.attach(resist);

  bool enumerate = false;
  bool classify = false;
  auto* cut = app.add_subcommand("cut", "edge connectivity and minimum cuts");
  cut->add_option("graph", args, "edge-list or graph6 file");
  cut->add_flag("--enumerate", enumerate, "list every minimum cut");
  cut->add_flag("--classify", classify, "classify each minimum cut");
  src.attach(cut);

  std::vector<std::size_t> eliminate;
  std::vector<std::size_t> bipartite;
  auto* transform = app.add_subcommand("transform", "star-mesh elimination and double-star substitution");
  transform->add_option("network", args, "network JSON (or graph) file");
  transform->add_option("--eliminate", eliminate, "vertices to eliminate");
  transform->add_option("--bipartite", bipartite, "m n: K_{m,n} double star")->expected(2);

  std::string from_distance;
  bool godsil = false;
  auto* scheme = app.add_subcommand("scheme", "association-scheme axioms and colour classes");
  scheme->add_option("input", args, "relation-table file");
  scheme->add_option("--from-distance", from_distance, "graph file whose distance partition is tested");
  scheme->add_flag("--verify-godsil", godsil, "check every colour class");
  src.attach(scheme);

  std::vector<long> kxy;
  auto* fxy = app.add_subcommand("fxy", "the cut bound F(x,y) at regularity k");
  fxy->add_option("kxy", kxy, "k x y")->expected(3)->required();

  auto* matching = app.add_subcommand("matching", "perfect matching search");
  matching->add_option("graph", args, "edge-list or graph6 file");
  src.attach(matching);

  std::string what;
  std::string range;
  auto* verify = app.add_subcommand("verify", "grid verifiers and worked constants");
  verify->add_option("what", what, "claims, kirchhoff or constants")->required();
  verify->add_option("--k-range", range, "lo..hi");

  auto* survey_cmd = app.add_subcommand("survey", "run the verification suite over a catalog");
  survey_cmd->add_option("manifest", args, "manifest JSON (default: $EQUIARBOR_CATALOG or built-in)");

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  auto one_file = [&]() -> std::optional<std::string> {
    if (args.size() > 1) throw UsageError("expected a single graph file");
    if (args.empty()) return std::nullopt;
    return args[0];
  };

  try {
    if (analyze->parsed()) return cmd_analyze(src.load(one_file()), opt, out);
    if (resist->parsed()) return cmd_resist(args, src, method, opt, out);
    if (cut->parsed()) return cmd_cut(src.load(one_file()), enumerate, classify, opt, out);
    if (transform->parsed()) return cmd_transform(args, eliminate, bipartite, opt, out);
    if (scheme->parsed()) return cmd_scheme(args, from_distance, src, godsil, opt, out);
    if (fxy->parsed()) return cmd_fxy(kxy, opt, out);
    if (matching->parsed()) return cmd_matching(src.load(one_file()), opt, out);
    if (verify->parsed()) return cmd_verify(what, range, opt, out);
    if (survey_cmd->parsed()) return cmd_survey(args, opt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace equiarbor
