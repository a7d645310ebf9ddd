#include "xtar/families.hpp"

#include <cstdlib>
#include <vector>

#include "xtar/graph6.hpp"

namespace xtar {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Graph complete_graph(int n) {
  if (n < 1 || n > 64) bad("complete(n): need 1 <= n <= 64");
  Graph g(n, "complete:" + std::to_string(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  if (n < 1 || n > 64) bad("path(n): need 1 <= n <= 64");
  Graph g(n, "path:" + std::to_string(n));
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3 || n > 64) bad("cycle(n): need 3 <= n <= 64");
  Graph g(n, "cycle:" + std::to_string(n));
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph star_graph(int r) {
  if (r < 1 || r > 63) bad("star(r): need 1 <= r <= 63");
  Graph g(r + 1, "star:" + std::to_string(r));
  for (int v = 1; v <= r; ++v) g.add_edge(0, v);
  return g;
}

Graph double_star(int a, int b) {
  if (a < 1 || b < 1 || a + b > 62) bad("double_star(a,b): need a,b >= 1, a+b <= 62");
  Graph g(a + b + 2, "double_star:" + std::to_string(a) + "," + std::to_string(b));
  g.add_edge(0, 1);
  for (int i = 0; i < a; ++i) g.add_edge(0, 2 + i);
  for (int i = 0; i < b; ++i) g.add_edge(1, 2 + a + i);
  return g;
}

Graph paw_graph() {
  Graph g = star_graph(3);
  g.add_edge(2, 3);
  g.set_label("paw");
  return g;
}

Graph hypercube_graph(int t) {
  if (t < 0 || t > 6) bad("hypercube(t): need 0 <= t <= 6");
  Graph g(1 << t, "hypercube:" + std::to_string(t));
  for (int u = 0; u < (1 << t); ++u)
    for (int i = 0; i < t; ++i)
      if (!((u >> i) & 1)) g.add_edge(u, u | (1 << i));
  return g;
}

Graph corona_leaves(const Graph& h, int r) {
  if (r < 1) bad("corona(h,r): need r >= 1");
  int k = h.order();
  if (k + k * r > 64) bad("corona(h,r): order exceeds 64");
  Graph g(k + k * r, "corona:" + std::to_string(r));
  for (int u = 0; u < k; ++u)
    for (Mask rest = h.neighbors(u); rest; rest &= rest - 1) {
      int v = lowest_bit(rest);
      if (u < v) g.add_edge(u, v);
    }
  for (int v = 0; v < k; ++v)
    for (int j = 0; j < r; ++j) g.add_edge(v, k + v * r + j);
  return g;
}

Graph grl_graph(int r, int l) {
  if (r < 3 || l < 1 || l > r - 2) bad("grl(r,l): need r >= 3 and 1 <= l <= r-2");
  if (r + l > 64) bad("grl(r,l): order exceeds 64");
  Graph g(r + l, "grl:" + std::to_string(r) + "," + std::to_string(l));
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) g.add_edge(u, v);
  for (int i = 0; i < l; ++i) g.add_edge(i, r + i);
  return g;
}

Graph h_family(int r) {
  if (r < 2 || 2 * r + 4 > 64) bad("h(r): need r >= 2 and 2r+4 <= 64");
  int m = r + 2;
  Graph g(2 * m, "h:" + std::to_string(r));
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      g.add_edge(u, v);
      g.add_edge(m + u, m + v);
    }
  for (int i = 0; i < r; ++i) g.add_edge(i, m + i);
  return g;
}

Graph hr_family(int r) {
  if (r < 2 || r + 6 > 64) bad("hr(r): need r >= 2 and r+6 <= 64");
  Graph g(r + 6, "hr:" + std::to_string(r));
  // H_2 on vertices 0..7; u_1 = 6, u_2 = 7 with N = {3,4,5}.
  static constexpr int edges[][2] = {{0, 1}, {1, 2}, {2, 5}, {4, 5}, {3, 4}, {0, 3}, {0, 5},
                                     {1, 5}, {1, 4}, {4, 7}, {3, 7}, {3, 6}, {4, 6}, {0, 4},
                                     {2, 4}, {2, 3}, {1, 3}, {5, 7}, {5, 6}};
  for (auto [u, v] : edges) g.add_edge(u, v);
  for (int k = 3; k <= r; ++k)
    for (int w : {3, 4, 5}) g.add_edge(5 + k, w);
  return g;
}

namespace {

std::vector<long> parse_args(const std::string& s) {
  std::vector<long> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0') bad("family descriptor: bad numeric argument '" + tok + "'");
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Graph graph_from_descriptor(const std::string& desc) {
  std::size_t colon = desc.find(':');
  std::string name = desc.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : desc.substr(colon + 1);

  if (name == "paw") return paw_graph();

  if (name == "corona") {
    // corona:<base descriptor>,r -- split at the last comma.
    std::size_t comma = rest.rfind(',');
    if (comma == std::string::npos) bad("corona: expected corona:<base>,r");
    Graph base = graph_from_descriptor(rest.substr(0, comma));
    auto args = parse_args(rest.substr(comma + 1));
    return corona_leaves(base, static_cast<int>(args.at(0)));
  }

  if (name == "cycle") {
    // "cycle:n" or "cycle:n+chord" (chord {0,2}).
    bool chord = false;
    if (rest.size() > 6 && rest.substr(rest.size() - 6) == "+chord") {
      chord = true;
      rest = rest.substr(0, rest.size() - 6);
    }
    auto args = parse_args(rest);
    Graph g = cycle_graph(static_cast<int>(args.at(0)));
    if (chord) {
      g.add_edge(0, 2);
      g.set_label(g.label() + "+chord");
    }
    return g;
  }

  auto args = parse_args(rest);
  auto arg = [&](std::size_t i) { return static_cast<int>(args.at(i)); };
  if (name == "complete") return complete_graph(arg(0));
  if (name == "path") return path_graph(arg(0));
  if (name == "star") return star_graph(arg(0));
  if (name == "double_star" || name == "ds") return double_star(arg(0), arg(1));
  if (name == "hypercube") return hypercube_graph(arg(0));
  if (name == "grl") return grl_graph(arg(0), arg(1));
  if (name == "h") return h_family(arg(0));
  if (name == "hr") return hr_family(arg(0));
  bad("unknown family '" + name + "'");
}

Graph graph_from_input(const std::string& input) {
  static const char* names[] = {"complete", "path",      "cycle", "star", "double_star", "ds",
                                "paw",      "hypercube", "corona", "grl",  "h",           "hr"};
  std::string head = input.substr(0, input.find(':'));
  for (const char* nm : names)
    if (head == nm) return graph_from_descriptor(input);
  return parse_graph6(input);
}

}  // namespace xtar
