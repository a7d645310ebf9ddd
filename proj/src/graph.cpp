#include "xtar/graph.hpp"

namespace xtar {

Mask closed_neighborhood(const Graph& g, Mask s) {
  Mask out = s;
  for (Mask rest = s; rest; rest &= rest - 1) out |= g.neighbors(lowest_bit(rest));
  return out;
}

std::vector<Mask> components_within(const Graph& g, Mask w) {
  std::vector<Mask> comps;
  Mask remaining = w;
  while (remaining) {
    Mask comp = bit(lowest_bit(remaining));
    for (;;) {
      Mask grown = comp;
      for (Mask rest = comp; rest; rest &= rest - 1)
        grown |= g.neighbors(lowest_bit(rest)) & w;
      if (grown == comp) break;
      comp = grown;
    }
    comps.push_back(comp);
    remaining &= ~comp;
  }
  return comps;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > 64)
    throw std::invalid_argument("disjoint_union: combined order exceeds 64");
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u)
    for (Mask rest = a.neighbors(u); rest; rest &= rest - 1) {
      int v = lowest_bit(rest);
      if (u < v) g.add_edge(u, v);
    }
  for (int u = 0; u < b.order(); ++u)
    for (Mask rest = b.neighbors(u); rest; rest &= rest - 1) {
      int v = lowest_bit(rest);
      if (u < v) g.add_edge(a.order() + u, a.order() + v);
    }
  return g;
}

Graph induced_subgraph(const Graph& g, Mask keep) {
  int m = popcount(keep);
  if (m == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> map(g.order(), -1);
  int next = 0;
  for (Mask rest = keep; rest; rest &= rest - 1) map[lowest_bit(rest)] = next++;
  Graph h(m);
  for (Mask rest = keep; rest; rest &= rest - 1) {
    int u = lowest_bit(rest);
    for (Mask nb = g.neighbors(u) & keep; nb; nb &= nb - 1) {
      int v = lowest_bit(nb);
      if (u < v) h.add_edge(map[u], map[v]);
    }
  }
  return h;
}

}  // namespace xtar
