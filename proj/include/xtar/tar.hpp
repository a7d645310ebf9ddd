#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xtar/profile.hpp"

namespace xtar {

// X-TAR reconfiguration graph: the X-sets themselves are the vertices and
// adjacency (symmetric difference of size one) is implicit, never stored.
struct TarGraph {
  int base_n = 0;
  std::vector<Mask> vertices;  // ascending by (cardinality, bit value)
  std::unordered_map<Mask, int> index;
  std::optional<int> level_cap;

  bool contains(Mask s) const { return index.count(s) != 0; }
  int degree_of(Mask s) const;
  std::size_t edge_count() const;
};

// All X-sets, or only those of size <= cap.  A cap below X(G) yields an
// empty TAR graph (allowed; callers can see vertices.empty()).
TarGraph build_tar(const XProfile& profile, std::optional<int> cap = std::nullopt);

// Connectivity of the k-TAR graph via BFS over implicit adjacency.
bool level_connected(const XProfile& profile, int k);
int level_component_count(const XProfile& profile, int k);

struct Thresholds {
  int underline_x0;  // least k with level k connected
  int x0;            // least k with every level in [k, n] connected
};
// Requires a base graph with no isolated vertices (the parameters are not
// defined otherwise).
Thresholds thresholds(const XProfile& profile);

struct DegreeStats {
  int max_degree;
  int min_degree;
};
DegreeStats degree_stats(const TarGraph& tar);

// Always true for a TAR graph; verified by checking the cardinality-parity
// two-coloring edge by edge.
bool is_bipartite(const TarGraph& tar);

// True iff the TAR graph is isomorphic to some Q_t, decided by the interval
// characterization: 2^t vertices all lying in an interval [S, S'] with
// |S' \ S| = t.
bool is_hypercube(const TarGraph& tar);

// Verifies that every induced Q_t (t = 2 or 3) is an interval of length t.
struct IntervalReport {
  std::size_t cubes_checked = 0;
  std::vector<std::vector<Mask>> violations;
  bool passed() const { return violations.empty(); }
};
IntervalReport interval_property_check(const TarGraph& tar, int t);

// Cartesian product of two uncapped TAR graphs on the shifted vertex
// universe; equals the TAR graph of the disjoint-union base graph.
TarGraph tar_cartesian(const TarGraph& t1, const TarGraph& t2);

std::string set_label(Mask s);  // "{v1,v2,...}"
std::string to_dot(const TarGraph& tar);

}  // namespace xtar
