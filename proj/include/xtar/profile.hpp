#pragma once

#include <vector>

#include "xtar/graph.hpp"
#include "xtar/rules.hpp"

namespace xtar {

// Complete catalog of the X-sets of one graph under one rule.
struct XProfile {
  Graph graph;
  XRuleKind rule;
  // sets_by_size[k]: all X-sets of cardinality k, ascending by bit value.
  std::vector<std::vector<Mask>> sets_by_size;
  // X-sets none of whose single-element deletions are X-sets, ascending by
  // (size, bit value).
  std::vector<Mask> minimal_sets;
  int x_number = 0;  // X(G)
  int upper_x = 0;   // max cardinality of a minimal X-set

  bool contains(Mask s) const;
  std::size_t total_sets() const;
};

// Full subset sweep, ascending by cardinality with superset-closure pruning.
// Guarded at n <= 24 unless allow_large is set.
XProfile build_profile(const Graph& g, XRuleKind rule, bool allow_large = false);

// Coefficients z(G;k) for k = 0..n (explicit zeros below X(G)).
std::vector<std::uint64_t> x_polynomial(const XProfile& profile);

std::vector<Mask> minimal_sets_of_size(const XProfile& profile, int k);

}  // namespace xtar
