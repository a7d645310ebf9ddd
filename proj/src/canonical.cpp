#include "xtar/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_set>

#include "xtar/graph6.hpp"

namespace xtar {

namespace {

struct State {
  std::uint32_t mask = 0;
  std::array<std::uint16_t, 16> pat{};  // adjacency to the placed sequence, MSB first
  std::array<std::int8_t, 16> seq{};
};

std::string state_key(const State& s, int n) {
  std::string k;
  k.reserve(4 + 2 * n);
  k.append(reinterpret_cast<const char*>(&s.mask), 4);
  for (int v = 0; v < n; ++v) {
    std::uint16_t p = (s.mask >> v) & 1 ? 0xFFFF : s.pat[v];
    k.append(reinterpret_cast<const char*>(&p), 2);
  }
  return k;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  int n = g.order();
  if (n > 16) throw std::invalid_argument("canonical_form: order must be <= 16");

  std::vector<State> frontier;
  {
    // Position 0 carries no adjacency bits; all first choices tie.
    std::unordered_set<std::string> seen;
    for (int v = 0; v < n; ++v) {
      State s;
      s.mask = 1u << v;
      s.seq[0] = static_cast<std::int8_t>(v);
      for (int u = 0; u < n; ++u)
        if (u != v) s.pat[u] = g.has_edge(u, v) ? 1 : 0;
      // pat here is 0-bit wide conceptually; adjacency to position 0 is
      // folded in when position 1 is chosen, so store it pre-shifted.
      if (seen.insert(state_key(s, n)).second) frontier.push_back(s);
    }
  }

  for (int k = 1; k < n; ++k) {
    std::uint16_t best = 0xFFFF;
    for (const State& s : frontier)
      for (int v = 0; v < n; ++v)
        if (!((s.mask >> v) & 1)) best = std::min(best, s.pat[v]);

    std::vector<State> next;
    std::unordered_set<std::string> seen;
    for (const State& s : frontier)
      for (int v = 0; v < n; ++v) {
        if ((s.mask >> v) & 1 || s.pat[v] != best) continue;
        State t;
        t.mask = s.mask | (1u << v);
        t.seq = s.seq;
        t.seq[k] = static_cast<std::int8_t>(v);
        for (int u = 0; u < n; ++u)
          if (!((t.mask >> u) & 1))
            t.pat[u] = static_cast<std::uint16_t>((s.pat[u] << 1) | (g.has_edge(u, v) ? 1 : 0));
        if (seen.insert(state_key(t, n)).second) next.push_back(t);
      }
    frontier = std::move(next);
  }

  CanonicalForm out;
  out.labeling.assign(n, 0);
  for (int i = 0; i < n; ++i) out.labeling[i] = frontier.front().seq[i];
  Graph canon(n);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[out.labeling[i]] = i;
  for (int u = 0; u < n; ++u)
    for (Mask rest = g.neighbors(u); rest; rest &= rest - 1) {
      int v = lowest_bit(rest);
      if (u < v) canon.add_edge(pos[u], pos[v]);
    }
  out.certificate = emit_graph6(canon);
  return out;
}

std::vector<Graph> enumerate_nonisomorphic(int n, bool require_no_isolated, bool long_ok) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("enumerate_nonisomorphic: internal generation covers n <= 8");
  if (n == 8 && !long_ok)
    throw std::invalid_argument("enumerate_nonisomorphic: n = 8 requires the long flag");

  // Grow one order at a time: every class of order k has a member whose last
  // vertex deletion yields the stored representative of some order-(k-1)
  // class, so extending each representative by one vertex with every possible
  // neighborhood covers all classes.
  std::vector<std::string> certs = {emit_graph6(Graph(1))};
  std::vector<Graph> reps = {Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> found;
    for (const Graph& base : reps) {
      for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
        Graph cand(k);
        for (int u = 0; u < k - 1; ++u)
          for (Mask rest = base.neighbors(u); rest; rest &= rest - 1) {
            int v = lowest_bit(rest);
            if (u < v) cand.add_edge(u, v);
          }
        for (Mask rest = nb; rest; rest &= rest - 1) cand.add_edge(lowest_bit(rest), k - 1);
        CanonicalForm cf = canonical_form(cand);
        if (seen.insert(cf.certificate).second) found.emplace_back(cf.certificate, cand);
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    reps.clear();
    for (auto& [cert, graph] : found) {
      graph.set_label(cert);
      reps.push_back(graph);
    }
  }

  if (!require_no_isolated) return reps;
  std::vector<Graph> filtered;
  for (const Graph& g : reps)
    if (!g.has_isolated_vertex()) filtered.push_back(g);
  return filtered;
}

}  // namespace xtar
