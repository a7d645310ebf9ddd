#include "xtar/rules.hpp"

namespace xtar {

const char* rule_name(XRuleKind rule) {
  switch (rule) {
    case XRuleKind::ZeroForcing: return "zf";
    case XRuleKind::PsdZeroForcing: return "psd";
    case XRuleKind::Domination: return "dom";
    case XRuleKind::PowerDomination: return "pd";
  }
  return "?";
}

std::optional<XRuleKind> rule_from_name(const std::string& name) {
  if (name == "zf") return XRuleKind::ZeroForcing;
  if (name == "psd") return XRuleKind::PsdZeroForcing;
  if (name == "dom") return XRuleKind::Domination;
  if (name == "pd") return XRuleKind::PowerDomination;
  return std::nullopt;
}

ZfClosureResult zf_closure(const Graph& g, Mask s) {
  ZfClosureResult r{s, {}};
  Mask all = g.vertex_mask();
  bool progressed = true;
  while (progressed && r.closure != all) {
    progressed = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!((r.closure >> v) & 1)) continue;
      Mask white = g.neighbors(v) & ~r.closure;
      if (popcount(white) == 1) {
        int w = lowest_bit(white);
        r.closure |= bit(w);
        r.forces.forces.emplace_back(v, w);
        progressed = true;
      }
    }
  }
  return r;
}

Mask psd_closure(const Graph& g, Mask s) {
  Mask blue = s;
  Mask all = g.vertex_mask();
  bool progressed = true;
  while (progressed && blue != all) {
    progressed = false;
    Mask forced = 0;
    for (Mask comp : components_within(g, all & ~blue)) {
      for (Mask rest = blue; rest; rest &= rest - 1) {
        int u = lowest_bit(rest);
        Mask white = g.neighbors(u) & comp;
        if (popcount(white) == 1) forced |= white;
      }
    }
    if (forced) {
      blue |= forced;
      progressed = true;
    }
  }
  return blue;
}

bool is_x_set(const Graph& g, Mask s, XRuleKind rule) {
  Mask all = g.vertex_mask();
  switch (rule) {
    case XRuleKind::ZeroForcing:
      return zf_closure(g, s).closure == all;
    case XRuleKind::PsdZeroForcing:
      return psd_closure(g, s) == all;
    case XRuleKind::Domination:
      return closed_neighborhood(g, s) == all;
    case XRuleKind::PowerDomination:
      return s != 0 && zf_closure(g, closed_neighborhood(g, s)).closure == all;
  }
  return false;
}

AxiomReport audit_axioms(const Graph& g, XRuleKind rule) {
  int n = g.order();
  if (n > 16) throw std::invalid_argument("audit_axioms: order must be <= 16");
  Mask all = g.vertex_mask();
  AxiomReport rep;

  std::vector<char> feasible(std::size_t{1} << n);
  for (Mask s = 0; s <= all; ++s) feasible[s] = is_x_set(g, s, rule);

  // (1) supersets of X-sets are X-sets
  for (Mask s = 0; s <= all && rep.superset_closed.passed; ++s) {
    if (!feasible[s]) continue;
    for (int v = 0; v < n; ++v)
      if (!((s >> v) & 1) && !feasible[s | bit(v)]) {
        rep.superset_closed.passed = false;
        rep.superset_closed.witness = s | bit(v);
        break;
      }
  }

  // (2) the empty set is never an X-set
  if (feasible[0]) {
    rep.empty_rejected.passed = false;
    rep.empty_rejected.witness = 0;
  }

  // (3) on a disconnected graph, X-sets are exactly the unions of
  // per-component X-sets
  auto comps = components_within(g, all);
  if (comps.size() < 2) {
    rep.component_union.applicable = false;
  } else {
    std::vector<Graph> sub;
    for (Mask c : comps) sub.push_back(induced_subgraph(g, c));
    for (Mask s = 0; s <= all; ++s) {
      bool decomposed = true;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        Mask part = s & comps[i];
        Mask local = 0;
        int next = 0;
        for (Mask rest = comps[i]; rest; rest &= rest - 1, ++next)
          if ((part >> lowest_bit(rest)) & 1) local |= bit(next);
        if (!is_x_set(sub[i], local, rule)) {
          decomposed = false;
          break;
        }
      }
      if (decomposed != static_cast<bool>(feasible[s])) {
        rep.component_union.passed = false;
        rep.component_union.witness = s;
        break;
      }
    }
  }

  // (4) with no isolated vertices, every (n-1)-subset is an X-set
  if (g.has_isolated_vertex()) {
    rep.near_full_accepted.applicable = false;
  } else {
    for (int v = 0; v < n; ++v)
      if (!feasible[all & ~bit(v)]) {
        rep.near_full_accepted.passed = false;
        rep.near_full_accepted.witness = all & ~bit(v);
        break;
      }
  }
  return rep;
}

}  // namespace xtar
