#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xtar/canonical.hpp"
#include "xtar/families.hpp"
#include "xtar/graph6.hpp"
#include "xtar/iso.hpp"
#include "xtar/profile.hpp"
#include "xtar/rules.hpp"
#include "xtar/tar.hpp"

using json = nlohmann::ordered_json;
using namespace xtar;

namespace {

constexpr int kExitParse = 1;
constexpr int kExitGuard = 2;
constexpr int kExitIsolated = 3;
constexpr int kExitNotIsomorphic = 4;
constexpr int kExitCheckFailed = 5;

struct Refusal {
  int code;
  std::string message;
};

XRuleKind parse_rule(const std::string& name) {
  auto r = rule_from_name(name);
  if (!r) throw Refusal{kExitParse, "unknown rule '" + name + "' (expected zf|psd|dom|pd)"};
  return *r;
}

Graph load_graph(const std::string& input) {
  try {
    return graph_from_input(input);
  } catch (const Graph6Error& e) {
    throw Refusal{kExitParse, e.what()};
  } catch (const std::invalid_argument& e) {
    throw Refusal{kExitParse, e.what()};
  }
}

// Strips isolated vertices when allowed, refuses otherwise.  Returns the
// number of removed vertices.
int normalize_or_refuse(Graph& g, bool normalize) {
  Mask iso = g.isolated_vertices();
  if (!iso) return 0;
  if (!normalize)
    throw Refusal{kExitIsolated,
                  "input has isolated vertices; pass --normalize to strip them "
                  "(X(G u rK1) = X(G) + r)"};
  int r = popcount(iso);
  if (iso == g.vertex_mask())
    throw Refusal{kExitIsolated, "input has no edges; nothing remains after normalization"};
  g = induced_subgraph(g, g.vertex_mask() & ~iso);
  return r;
}

json set_to_json(Mask s) {
  json arr = json::array();
  for (Mask rest = s; rest; rest &= rest - 1) arr.push_back(lowest_bit(rest));
  return arr;
}

json analysis_report(const Graph& g, XRuleKind rule, int shift, bool allow_large) {
  XProfile p = build_profile(g, rule, allow_large);
  Thresholds th = thresholds(p);
  json rep;
  rep["graph6"] = emit_graph6(g);
  rep["rule"] = rule_name(rule);
  rep["n"] = g.order();
  if (shift) rep["normalized_shift"] = shift;
  rep["x_number"] = p.x_number;
  rep["upper_x"] = p.upper_x;
  rep["underline_x0"] = th.underline_x0;
  rep["x0"] = th.x0;
  rep["polynomial"] = x_polynomial(p);
  rep["irrelevant"] = set_to_json(irrelevant_vertices(p));
  json sizes = json::object();
  for (int k = 0; k <= g.order(); ++k) {
    auto ms = minimal_sets_of_size(p, k);
    if (!ms.empty()) sizes[std::to_string(k)] = ms.size();
  }
  rep["minimal_set_sizes"] = sizes;
  json levels = json::array();
  for (int k = p.x_number; k <= g.order(); ++k) {
    json level;
    level["k"] = k;
    std::size_t count = 0;
    for (int j = 0; j <= k; ++j) count += p.sets_by_size[j].size();
    level["num_sets"] = count;
    level["connected"] = level_connected(p, k);
    levels.push_back(level);
  }
  rep["levels"] = levels;
  return rep;
}

int cmd_analyze(const std::string& input, const std::string& rule, bool normalize,
                bool allow_large) {
  Graph g = load_graph(input);
  int shift = normalize_or_refuse(g, normalize);
  try {
    std::cout << analysis_report(g, parse_rule(rule), shift, allow_large).dump(2) << "\n";
  } catch (const std::invalid_argument& e) {
    throw Refusal{kExitGuard, e.what()};
  }
  return 0;
}

int cmd_tar(const std::string& input, const std::string& rule, int max_k,
            const std::string& format, bool normalize, bool allow_large) {
  Graph g = load_graph(input);
  int shift = normalize_or_refuse(g, normalize);
  try {
    XRuleKind r = parse_rule(rule);
    XProfile p = build_profile(g, r, allow_large);
    std::optional<int> cap;
    if (max_k >= 0) cap = max_k;
    TarGraph t = build_tar(p, cap);
    if (format == "dot") {
      std::cout << to_dot(t);
      return 0;
    }
    json rep;
    rep["base_graph6"] = emit_graph6(g);
    rep["rule"] = rule_name(r);
    if (shift) rep["normalized_shift"] = shift;
    if (cap) rep["max_k"] = *cap;
    rep["num_sets"] = t.vertices.size();
    rep["num_components"] = level_component_count(p, cap.value_or(g.order()));
    json levels = json::array();
    for (int k = p.x_number; k <= std::min(cap.value_or(g.order()), g.order()); ++k) {
      json level;
      level["k"] = k;
      std::size_t count = 0;
      for (int j = 0; j <= k; ++j) count += p.sets_by_size[j].size();
      level["num_sets"] = count;
      level["connected"] = level_connected(p, k);
      levels.push_back(level);
    }
    rep["levels"] = levels;
    Thresholds th = thresholds(p);
    rep["x0"] = th.x0;
    rep["underline_x0"] = th.underline_x0;
    json sets = json::array();
    for (Mask s : t.vertices) sets.push_back(set_to_json(s));
    rep["sets"] = sets;
    std::cout << rep.dump(2) << "\n";
  } catch (const std::invalid_argument& e) {
    throw Refusal{kExitGuard, e.what()};
  }
  return 0;
}

int cmd_iso(const std::string& input1, const std::string& input2, const std::string& rule) {
  Graph g = load_graph(input1);
  Graph h = load_graph(input2);
  if (g.has_isolated_vertex() || h.has_isolated_vertex())
    throw Refusal{kExitIsolated, "iso requires base graphs with no isolated vertices"};
  IsoVerdict v;
  try {
    v = tar_isomorphic(g, h, parse_rule(rule));
  } catch (const std::invalid_argument& e) {
    throw Refusal{kExitGuard, e.what()};
  }
  json rep;
  rep["isomorphic"] = v.isomorphic();
  rep["bijection"] = v.bijection ? json(v.bijection->forward) : json(nullptr);
  rep["witness"] = v.witness.empty() ? json(nullptr) : json(v.witness);
  std::cout << rep.dump(2) << "\n";
  return v.isomorphic() ? 0 : kExitNotIsomorphic;
}

int cmd_survey(int n, const std::string& rule, const std::string& input_file, int jobs,
               bool long_ok) {
  std::vector<Graph> graphs;
  const std::vector<Graph>* ptr = nullptr;
  if (!input_file.empty()) {
    std::ifstream in(input_file);
    if (!in) throw Refusal{kExitParse, "cannot open " + input_file};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        Graph g = parse_graph6(line);
        if (g.order() != n)
          throw Refusal{kExitParse, input_file + ":" + std::to_string(lineno) +
                                        ": record order does not match --n"};
        if (!g.has_isolated_vertex()) graphs.push_back(g);
      } catch (const Graph6Error& e) {
        throw Refusal{kExitParse, input_file + ":" + std::to_string(lineno) + ": " + e.what()};
      }
    }
    ptr = &graphs;
  }
  try {
    SurveyResult res = uniqueness_survey(n, parse_rule(rule), jobs, long_ok, ptr);
    double ratio = res.total ? static_cast<double>(res.unique) / res.total : 0.0;
    std::printf("%zu %zu %.4g\n", res.total, res.unique, ratio);
  } catch (const std::invalid_argument& e) {
    throw Refusal{kExitGuard, e.what()};
  }
  return 0;
}

int cmd_check(const std::string& input, const std::string& rule, bool normalize) {
  Graph g = load_graph(input);
  int shift = normalize_or_refuse(g, normalize);
  XRuleKind r = parse_rule(rule);
  json rep;
  rep["graph6"] = emit_graph6(g);
  rep["rule"] = rule_name(r);
  if (shift) rep["normalized_shift"] = shift;
  bool all = true;
  auto record = [&](const std::string& name, bool ok) {
    rep[name] = ok ? "pass" : "FAIL";
    all = all && ok;
  };
  try {
    if (g.order() > 16) throw std::invalid_argument("check: order must be <= 16");
    XProfile p = build_profile(g, r);
    TarGraph t = build_tar(p);

    AxiomReport ax = audit_axioms(g, r);
    record("axiom_superset_closed", ax.superset_closed.passed);
    record("axiom_empty_rejected", ax.empty_rejected.passed);
    if (ax.component_union.applicable) record("axiom_component_union", ax.component_union.passed);
    if (ax.near_full_accepted.applicable)
      record("axiom_near_full_accepted", ax.near_full_accepted.passed);

    DegreeStats d = degree_stats(t);
    record("tar_max_degree_is_n", d.max_degree == g.order());
    record("tar_min_degree_is_n_minus_upper_x", d.min_degree == g.order() - p.upper_x);
    record("tar_bipartite", is_bipartite(t));
    record("tar_not_hypercube", !is_hypercube(t));
    if (t.vertices.size() <= 2000)
      record("interval_property_t2", interval_property_check(t, 2).passed());
    if (t.vertices.size() <= 300)
      record("interval_property_t3", interval_property_check(t, 3).passed());

    // Once a level above the upper X-number is connected, every higher level
    // stays connected.
    bool upward = true;
    bool seen_connected_above = false;
    for (int k = p.x_number; k <= g.order(); ++k) {
      bool conn = level_connected(p, k);
      if (k > p.upper_x && seen_connected_above && !conn) upward = false;
      if (k > p.upper_x && conn) seen_connected_above = true;
    }
    record("upward_connectivity", upward);

    if (r == XRuleKind::ZeroForcing) {
      bool reversal = true;
      for (const auto& layer : p.sets_by_size)
        for (Mask s : layer) {
          auto [closure, forces] = zf_closure(g, s);
          Mask forcers = 0;
          for (auto [from, to] : forces.forces) forcers |= bit(from);
          if (zf_closure(g, g.vertex_mask() & ~forcers).closure != g.vertex_mask())
            reversal = false;
        }
      record("reversal_property", reversal);
    }
    rep["irrelevant"] = set_to_json(irrelevant_vertices(p));
  } catch (const std::invalid_argument& e) {
    throw Refusal{kExitGuard, e.what()};
  }
  rep["all_passed"] = all;
  std::cout << rep.dump(2) << "\n";
  return all ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"X-set reconfiguration structure for small graphs"};
  app.require_subcommand(1);

  std::string input, input2, rule = "zf", format = "json", input_file;
  int max_k = -1, n = 0, jobs = 1;
  bool normalize = false, long_ok = false;

  auto* analyze = app.add_subcommand("analyze", "Full X-set report for one graph");
  analyze->add_option("input", input, "graph6 record or family descriptor")->required();
  analyze->add_option("--rule", rule, "zf|psd|dom|pd");
  analyze->add_flag("--normalize", normalize, "strip isolated vertices and report the shift");
  analyze->add_flag("--long", long_ok, "lift the n <= 24 sweep guard");

  auto* tar = app.add_subcommand("tar", "Emit the X-TAR graph");
  tar->add_option("input", input, "graph6 record or family descriptor")->required();
  tar->add_option("--rule", rule, "zf|psd|dom|pd");
  tar->add_option("--max-k", max_k, "restrict to X-sets of size <= k");
  tar->add_option("--format", format, "dot|json");
  tar->add_flag("--normalize", normalize, "strip isolated vertices");
  tar->add_flag("--long", long_ok, "lift the n <= 24 sweep guard");

  auto* iso = app.add_subcommand("iso", "Decide X-TAR graph isomorphism");
  iso->add_option("input1", input, "first graph")->required();
  iso->add_option("input2", input2, "second graph")->required();
  iso->add_option("--rule", rule, "zf|psd|dom|pd");

  auto* survey = app.add_subcommand("survey", "TAR-uniqueness counts over all graphs of order n");
  survey->add_option("--n", n, "graph order")->required();
  survey->add_option("--rule", rule, "zf|psd|dom|pd");
  survey->add_option("--input", input_file, "graph6 file, one record per line");
  survey->add_option("--jobs", jobs, "worker threads");
  survey->add_flag("--long", long_ok, "allow n = 8 internal generation");

  auto* check = app.add_subcommand("check", "Run the structural invariant suite on one graph");
  check->add_option("input", input, "graph6 record or family descriptor")->required();
  check->add_option("--rule", rule, "zf|psd|dom|pd");
  check->add_flag("--normalize", normalize, "strip isolated vertices");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(input, rule, normalize, long_ok);
    if (tar->parsed()) return cmd_tar(input, rule, max_k, format, normalize, long_ok);
    if (iso->parsed()) return cmd_iso(input, input2, rule);
    if (survey->parsed()) return cmd_survey(n, rule, input_file, jobs, long_ok);
    if (check->parsed()) return cmd_check(input, rule, normalize);
  } catch (const Refusal& r) {
    std::cerr << "error: " << r.message << "\n";
    return r.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  }
  return 0;
}
