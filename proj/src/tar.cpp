#include "xtar/tar.hpp"

#include <algorithm>
#include <deque>

namespace xtar {

namespace {

bool tar_order(Mask a, Mask b) { return std::pair(popcount(a), a) < std::pair(popcount(b), b); }

}  // namespace

int TarGraph::degree_of(Mask s) const {
  int d = 0;
  for (int v = 0; v < base_n; ++v)
    if (contains(s ^ bit(v))) ++d;
  return d;
}

std::size_t TarGraph::edge_count() const {
  std::size_t twice = 0;
  for (Mask s : vertices) twice += degree_of(s);
  return twice / 2;
}

TarGraph build_tar(const XProfile& profile, std::optional<int> cap) {
  TarGraph t;
  t.base_n = profile.graph.order();
  t.level_cap = cap;
  int top = cap.value_or(t.base_n);
  for (int k = 0; k <= std::min<int>(top, t.base_n); ++k)
    for (Mask s : profile.sets_by_size[k]) t.vertices.push_back(s);
  std::sort(t.vertices.begin(), t.vertices.end(), tar_order);
  for (std::size_t i = 0; i < t.vertices.size(); ++i) t.index.emplace(t.vertices[i], i);
  return t;
}

namespace {

int count_components(const XProfile& profile, int k) {
  std::unordered_map<Mask, char> seen;
  std::vector<Mask> verts;
  for (int j = 0; j <= std::min<int>(k, profile.graph.order()); ++j)
    for (Mask s : profile.sets_by_size[j]) {
      verts.push_back(s);
      seen.emplace(s, 0);
    }
  int comps = 0;
  std::deque<Mask> queue;
  for (Mask start : verts) {
    if (seen[start]) continue;
    ++comps;
    seen[start] = 1;
    queue.push_back(start);
    while (!queue.empty()) {
      Mask s = queue.front();
      queue.pop_front();
      for (int v = 0; v < profile.graph.order(); ++v) {
        Mask nb = s ^ bit(v);
        auto it = seen.find(nb);
        if (it != seen.end() && !it->second) {
          it->second = 1;
          queue.push_back(nb);
        }
      }
    }
  }
  return comps;
}

}  // namespace

bool level_connected(const XProfile& profile, int k) { return count_components(profile, k) <= 1; }

int level_component_count(const XProfile& profile, int k) { return count_components(profile, k); }

Thresholds thresholds(const XProfile& profile) {
  if (profile.graph.has_isolated_vertex())
    throw std::invalid_argument(
        "thresholds: base graph has isolated vertices; strip them first (the profile of "
        "G u rK1 equals the profile of G with the isolated vertices adjoined to every set)");
  int n = profile.graph.order();
  Thresholds t{profile.x_number, profile.x_number};
  for (int k = profile.x_number; k <= n; ++k)
    if (level_connected(profile, k)) {
      t.underline_x0 = k;
      break;
    }
  for (int k = n; k >= profile.x_number; --k)
    if (!level_connected(profile, k)) {
      t.x0 = k + 1;
      break;
    }
  return t;
}

DegreeStats degree_stats(const TarGraph& tar) {
  if (tar.vertices.empty()) throw std::invalid_argument("degree_stats: empty TAR graph");
  DegreeStats d{0, tar.base_n + 1};
  for (Mask s : tar.vertices) {
    int deg = tar.degree_of(s);
    d.max_degree = std::max(d.max_degree, deg);
    d.min_degree = std::min(d.min_degree, deg);
  }
  return d;
}

bool is_bipartite(const TarGraph& tar) {
  for (Mask s : tar.vertices)
    for (int v = 0; v < tar.base_n; ++v) {
      Mask nb = s ^ bit(v);
      if (tar.contains(nb) && popcount(s) % 2 == popcount(nb) % 2) return false;
    }
  return true;
}

bool is_hypercube(const TarGraph& tar) {
  std::size_t m = tar.vertices.size();
  if (m == 0 || (m & (m - 1)) != 0) return false;
  int t = 0;
  while ((std::size_t{1} << t) < m) ++t;
  Mask lo = ~Mask{0}, hi = 0;
  for (Mask s : tar.vertices) {
    lo &= s;
    hi |= s;
  }
  if (popcount(hi & ~lo) != t) return false;
  for (Mask s : tar.vertices)
    if ((s & ~hi) || (lo & ~s)) return false;
  // 2^t distinct sets inside an interval of length t: all of [lo, hi].
  return true;
}

IntervalReport interval_property_check(const TarGraph& tar, int t) {
  if (t != 2 && t != 3) throw std::invalid_argument("interval_property_check: t must be 2 or 3");
  std::size_t m = tar.vertices.size();
  if ((t == 2 && m > 2000) || (t == 3 && m > 300))
    throw std::invalid_argument("interval_property_check: TAR graph too large for t");

  IntervalReport rep;
  auto check_cube = [&](const std::vector<Mask>& cube) {
    ++rep.cubes_checked;
    Mask lo = ~Mask{0}, hi = 0;
    for (Mask s : cube) {
      lo &= s;
      hi |= s;
    }
    bool ok = popcount(hi & ~lo) == t && cube.size() == (std::size_t{1} << t);
    std::vector<Mask> sorted = cube;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end()) ok = false;
    for (Mask s : cube)
      if ((lo & ~s) || (s & ~hi)) ok = false;
    if (!ok) rep.violations.push_back(cube);
  };

  if (t == 2) {
    // Induced 4-cycles: pairs at symmetric-difference distance 2 whose two
    // possible midpoints are both present.
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Mask a = tar.vertices[i], c = tar.vertices[j];
        Mask d = a ^ c;
        if (popcount(d) != 2) continue;
        Mask x = d & -d, y = d & ~x;
        if (tar.contains(a ^ x) && tar.contains(a ^ y)) check_cube({a, a ^ x, c, a ^ y});
      }
  } else {
    // Every induced Q_3 contains a corner together with three of its
    // neighbors, and those determine the remaining vertices.
    for (Mask s : tar.vertices) {
      std::vector<int> dirs;
      for (int v = 0; v < tar.base_n; ++v)
        if (tar.contains(s ^ bit(v))) dirs.push_back(v);
      for (std::size_t a = 0; a < dirs.size(); ++a)
        for (std::size_t b = a + 1; b < dirs.size(); ++b)
          for (std::size_t c = b + 1; c < dirs.size(); ++c) {
            std::vector<Mask> cube;
            bool complete = true;
            for (int sub = 0; sub < 8 && complete; ++sub) {
              Mask v = s;
              if (sub & 1) v ^= bit(dirs[a]);
              if (sub & 2) v ^= bit(dirs[b]);
              if (sub & 4) v ^= bit(dirs[c]);
              if (!tar.contains(v)) complete = false;
              cube.push_back(v);
            }
            // Count each cube once, from its least corner.
            if (complete && s == *std::min_element(cube.begin(), cube.end(), tar_order))
              check_cube(cube);
          }
    }
  }
  return rep;
}

TarGraph tar_cartesian(const TarGraph& t1, const TarGraph& t2) {
  if (t1.level_cap || t2.level_cap)
    throw std::invalid_argument("tar_cartesian: requires uncapped TAR graphs");
  if (t1.base_n + t2.base_n > 64)
    throw std::invalid_argument("tar_cartesian: combined universe exceeds 64");
  TarGraph t;
  t.base_n = t1.base_n + t2.base_n;
  t.vertices.reserve(t1.vertices.size() * t2.vertices.size());
  for (Mask a : t1.vertices)
    for (Mask b : t2.vertices) t.vertices.push_back(a | (b << t1.base_n));
  std::sort(t.vertices.begin(), t.vertices.end(), tar_order);
  for (std::size_t i = 0; i < t.vertices.size(); ++i) t.index.emplace(t.vertices[i], i);
  return t;
}

std::string set_label(Mask s) {
  std::string out = "{";
  bool first = true;
  for (Mask rest = s; rest; rest &= rest - 1) {
    if (!first) out += ",";
    out += std::to_string(lowest_bit(rest));
    first = false;
  }
  return out + "}";
}

std::string to_dot(const TarGraph& tar) {
  std::string out = "graph tar {\n";
  for (Mask s : tar.vertices) out += "  \"" + set_label(s) + "\";\n";
  for (Mask s : tar.vertices)
    for (int v = 0; v < tar.base_n; ++v) {
      Mask nb = s ^ bit(v);
      if (tar.contains(nb) && tar_order(s, nb))
        out += "  \"" + set_label(s) + "\" -- \"" + set_label(nb) + "\";\n";
    }
  out += "}\n";
  return out;
}

}  // namespace xtar
