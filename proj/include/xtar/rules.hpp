#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xtar/graph.hpp"

namespace xtar {

enum class XRuleKind { ZeroForcing, PsdZeroForcing, Domination, PowerDomination };

const char* rule_name(XRuleKind rule);
std::optional<XRuleKind> rule_from_name(const std::string& name);  // zf|psd|dom|pd

// Ordered (forcer, forced) pairs; replaying them from the initial set is
// legal at every step.
struct ForceRecord {
  std::vector<std::pair<int, int>> forces;
};

struct ZfClosureResult {
  Mask closure;
  ForceRecord forces;
};

// Fixed point of the standard color change rule.  Forces are applied in
// ascending forcer order within each round, so the record is deterministic.
ZfClosureResult zf_closure(const Graph& g, Mask s);

// Fixed point of the PSD color change rule; components of G - blue are
// recomputed after each completed round.
Mask psd_closure(const Graph& g, Mask s);

bool is_x_set(const Graph& g, Mask s, XRuleKind rule);
inline bool is_x_set(const Graph& g, const VertexSet& s, XRuleKind rule) {
  return is_x_set(g, s.bits(), rule);
}

// Exhaustive audit of the four defining conditions of an X-set parameter on
// one graph (order <= 16).  Conditions that do not apply (component
// decomposition on a connected graph, the (n-1)-subset condition with
// isolated vertices present) are reported as not applicable.
struct AxiomCheck {
  bool applicable = true;
  bool passed = true;
  std::optional<Mask> witness;  // a violating subset, when failed
};
struct AxiomReport {
  AxiomCheck superset_closed;    // (1)
  AxiomCheck empty_rejected;     // (2)
  AxiomCheck component_union;    // (3)
  AxiomCheck near_full_accepted; // (4)
  bool all_passed() const {
    return superset_closed.passed && empty_rejected.passed && component_union.passed &&
           near_full_accepted.passed;
  }
};
AxiomReport audit_axioms(const Graph& g, XRuleKind rule);

}  // namespace xtar
