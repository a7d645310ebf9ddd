#include "xtar/iso.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "xtar/canonical.hpp"
#include "xtar/graph6.hpp"

namespace xtar {

Bijection Bijection::identity(int n) {
  Bijection b;
  b.forward.resize(n);
  b.inverse.resize(n);
  for (int i = 0; i < n; ++i) b.forward[i] = b.inverse[i] = i;
  return b;
}

Bijection Bijection::from_forward(std::vector<int> fwd) {
  Bijection b;
  b.inverse.assign(fwd.size(), -1);
  for (std::size_t i = 0; i < fwd.size(); ++i) b.inverse[fwd[i]] = static_cast<int>(i);
  b.forward = std::move(fwd);
  for (int v : b.inverse)
    if (v < 0) throw std::invalid_argument("Bijection: forward map is not a bijection");
  return b;
}

Mask Bijection::apply(Mask s) const {
  Mask out = 0;
  for (Mask rest = s; rest; rest &= rest - 1) out |= bit(forward[lowest_bit(rest)]);
  return out;
}

Mask irrelevant_vertices(const XProfile& profile) {
  Mask in_some_minimal = 0;
  for (Mask s : profile.minimal_sets) in_some_minimal |= s;
  return profile.graph.vertex_mask() & ~in_some_minimal;
}

bool nu_map_is_automorphism(const XProfile& profile, Mask r) {
  // nu_R is an involution, so mapping the family into itself means onto.
  for (const auto& layer : profile.sets_by_size)
    for (Mask s : layer)
      if (!profile.contains(s ^ r)) return false;
  return true;
}

namespace {

// Per-vertex occurrence counts in minimal sets, bucketed by set size.
std::vector<std::vector<int>> minimal_signatures(const XProfile& p) {
  int n = p.graph.order();
  std::vector<std::vector<int>> sig(n, std::vector<int>(n + 1, 0));
  for (Mask s : p.minimal_sets)
    for (Mask rest = s; rest; rest &= rest - 1) ++sig[lowest_bit(rest)][popcount(s)];
  return sig;
}

std::vector<int> minimal_size_multiset(const XProfile& p) {
  std::vector<int> sizes;
  for (Mask s : p.minimal_sets) sizes.push_back(popcount(s));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct BijectionSearch {
  const XProfile& p;
  const XProfile& q;
  int n;
  std::vector<std::vector<int>> psig, qsig;
  std::vector<int> order;           // p-vertices in assignment order
  std::vector<std::vector<int>> check_at;  // minimal-set ids completed per step
  std::unordered_set<Mask> q_minimal;
  std::vector<int> fwd;
  Mask used = 0;

  bool run(std::vector<int>& out) {
    psig = minimal_signatures(p);
    qsig = minimal_signatures(q);
    {
      auto ps = psig, qs = qsig;
      std::sort(ps.begin(), ps.end());
      std::sort(qs.begin(), qs.end());
      if (ps != qs) return false;
    }
    // Rarest signatures first.
    std::map<std::vector<int>, int> freq;
    for (const auto& s : psig) ++freq[s];
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(freq[psig[a]], a) < std::pair(freq[psig[b]], b);
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    check_at.assign(n, {});
    for (std::size_t id = 0; id < p.minimal_sets.size(); ++id) {
      int last = 0;
      for (Mask rest = p.minimal_sets[id]; rest; rest &= rest - 1)
        last = std::max(last, pos[lowest_bit(rest)]);
      check_at[last].push_back(static_cast<int>(id));
    }
    for (Mask s : q.minimal_sets) q_minimal.insert(s);
    fwd.assign(n, -1);
    return extend(0, out);
  }

  bool extend(int step, std::vector<int>& out) {
    if (step == n) {
      out = fwd;
      return true;
    }
    int v = order[step];
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1 || psig[v] != qsig[w]) continue;
      fwd[v] = w;
      used |= bit(w);
      bool ok = true;
      for (int id : check_at[step]) {
        Mask image = 0;
        for (Mask rest = p.minimal_sets[id]; rest; rest &= rest - 1)
          image |= bit(fwd[lowest_bit(rest)]);
        if (!q_minimal.count(image)) {
          ok = false;
          break;
        }
      }
      if (ok && extend(step + 1, out)) return true;
      used &= ~bit(w);
      fwd[v] = -1;
    }
    return false;
  }
};

std::string first_invariant_mismatch(const XProfile& p, const XProfile& q) {
  if (p.graph.order() != q.graph.order()) return "order";
  if (p.x_number != q.x_number) return "x-number";
  if (p.upper_x != q.upper_x) return "upper-x-number";
  if (x_polynomial(p) != x_polynomial(q)) return "polynomial";
  if (minimal_size_multiset(p) != minimal_size_multiset(q)) return "minimal-set sizes";
  return {};
}

}  // namespace

std::optional<Bijection> find_xset_bijection(const XProfile& p, const XProfile& q) {
  if (p.rule != q.rule) throw std::invalid_argument("find_xset_bijection: rule mismatch");
  if (!first_invariant_mismatch(p, q).empty()) return std::nullopt;
  BijectionSearch search{p, q, p.graph.order()};
  std::vector<int> fwd;
  if (!search.run(fwd)) return std::nullopt;
  return Bijection::from_forward(std::move(fwd));
}

IsoVerdict tar_isomorphic(const Graph& g, const Graph& h, XRuleKind rule) {
  if (g.has_isolated_vertex() || h.has_isolated_vertex())
    throw std::invalid_argument(
        "tar_isomorphic: strip isolated vertices first (G u rK1 reduces to G)");
  XProfile p = build_profile(g, rule);
  XProfile q = build_profile(h, rule);
  IsoVerdict v;
  v.witness = first_invariant_mismatch(p, q);
  if (!v.witness.empty()) return v;
  if (auto b = find_xset_bijection(p, q)) {
    v.bijection = std::move(*b);
    return v;
  }
  v.witness = "exhausted search";
  return v;
}

namespace {

struct BruteIso {
  int n;
  std::vector<Mask> a1, a2;  // adjacency rows
  std::vector<int> deg1, deg2, fwd;
  Mask used = 0;

  bool extend(int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1 || deg1[v] != deg2[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (((a1[v] >> u) & 1) != ((a2[w] >> fwd[u]) & 1)) ok = false;
      if (!ok) continue;
      fwd[v] = w;
      used |= bit(w);
      if (extend(v + 1)) return true;
      used &= ~bit(w);
    }
    return false;
  }
};

}  // namespace

bool brute_tar_iso(const TarGraph& t1, const TarGraph& t2) {
  std::size_t n = t1.vertices.size();
  if (n > 64 || t2.vertices.size() > 64)
    throw std::invalid_argument("brute_tar_iso: TAR graph exceeds 64 vertices");
  if (n != t2.vertices.size()) return false;

  BruteIso b;
  b.n = static_cast<int>(n);
  auto rows = [](const TarGraph& t) {
    std::vector<Mask> adj(t.vertices.size(), 0);
    for (std::size_t i = 0; i < t.vertices.size(); ++i)
      for (int v = 0; v < t.base_n; ++v) {
        auto it = t.index.find(t.vertices[i] ^ bit(v));
        if (it != t.index.end()) adj[i] |= bit(it->second);
      }
    return adj;
  };
  b.a1 = rows(t1);
  b.a2 = rows(t2);
  for (Mask row : b.a1) b.deg1.push_back(popcount(row));
  for (Mask row : b.a2) b.deg2.push_back(popcount(row));
  auto d1 = b.deg1, d2 = b.deg2;
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  b.fwd.assign(n, -1);
  return b.extend(0);
}

namespace {

std::string survey_key(const XProfile& p) {
  std::string key = std::to_string(p.graph.order()) + "|" + std::to_string(p.x_number) + "|" +
                    std::to_string(p.upper_x) + "|";
  for (auto c : x_polynomial(p)) key += std::to_string(c) + ",";
  key += "|";
  auto sig = minimal_signatures(p);
  std::sort(sig.begin(), sig.end());
  for (const auto& s : sig) {
    for (int c : s) key += std::to_string(c) + ".";
    key += ";";
  }
  return key;
}

}  // namespace

SurveyResult uniqueness_survey(int n, XRuleKind rule, int jobs, bool long_ok,
                               const std::vector<Graph>* graphs) {
  std::vector<Graph> own;
  if (!graphs) {
    own = enumerate_nonisomorphic(n, /*require_no_isolated=*/true, long_ok);
    graphs = &own;
  }
  std::size_t total = graphs->size();

  // Profiles are cached per (certificate, rule); the certificate also names
  // the graph in the output classes.
  struct Entry {
    std::string cert;
    std::string key;
    XProfile profile{Graph(1), XRuleKind::ZeroForcing, {}, {}, 0, 0};
  };
  std::vector<Entry> entries(total);
  {
    std::mutex next_mutex;
    std::size_t next = 0;
    auto worker = [&] {
      for (;;) {
        std::size_t i;
        {
          std::lock_guard lock(next_mutex);
          if (next >= total) return;
          i = next++;
        }
        const Graph& g = (*graphs)[i];
        entries[i].cert =
            g.order() <= 16 ? certificate(g) : emit_graph6(g);
        entries[i].profile = build_profile(g, rule);
        entries[i].key = survey_key(entries[i].profile);
      }
    };
    int workers = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }

  // Bucket by the fast invariants, then decide pairwise within buckets.
  std::map<std::string, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < total; ++i) buckets[entries[i].key].push_back(i);

  std::vector<std::size_t> cls(total);
  for (std::size_t i = 0; i < total; ++i) cls[i] = i;
  for (auto& [key, members] : buckets) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      if (cls[members[a]] != members[a]) continue;
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (cls[members[b]] != members[b]) continue;
        if (find_xset_bijection(entries[members[a]].profile, entries[members[b]].profile))
          cls[members[b]] = members[a];
      }
    }
  }

  std::map<std::size_t, std::vector<std::string>> grouped;
  for (std::size_t i = 0; i < total; ++i) grouped[cls[i]].push_back(entries[i].cert);

  SurveyResult res;
  res.total = total;
  for (auto& [rep, certs] : grouped) {
    std::sort(certs.begin(), certs.end());
    if (certs.size() == 1) ++res.unique;
    res.classes.push_back(certs);
  }
  std::sort(res.classes.begin(), res.classes.end());
  return res;
}

std::vector<Mask> twin_classes(const Graph& g) {
  std::vector<Mask> classes;
  std::map<Mask, Mask> by_neighborhood;
  for (int v = 0; v < g.order(); ++v) by_neighborhood[g.neighbors(v)] |= bit(v);
  for (auto& [nb, cls] : by_neighborhood) classes.push_back(cls);
  std::sort(classes.begin(), classes.end(),
            [](Mask a, Mask b) { return lowest_bit(a) < lowest_bit(b); });
  return classes;
}

TwinDeletionReport twin_deletion_check(const Graph& g, Mask twinclass) {
  if (popcount(twinclass) < 3)
    throw std::invalid_argument(
        "twin_deletion_check: twin class must have at least 3 members (fails for pairs)");
  if (g.order() > 16) throw std::invalid_argument("twin_deletion_check: order must be <= 16");
  for (Mask rest = twinclass; rest; rest &= rest - 1)
    if (g.neighbors(lowest_bit(rest)) != g.neighbors(lowest_bit(twinclass)))
      throw std::invalid_argument("twin_deletion_check: vertices are not twins");

  int u = lowest_bit(twinclass);
  int n = g.order();
  Graph gi = induced_subgraph(g, g.vertex_mask() & ~bit(u));
  auto lift = [&](Mask s) {
    Mask out = 0;
    for (Mask rest = s; rest; rest &= rest - 1) {
      int v = lowest_bit(rest);
      out |= bit(v < u ? v : v + 1);
    }
    return out;
  };

  XProfile pg = build_profile(g, XRuleKind::ZeroForcing);
  XProfile pgi = build_profile(gi, XRuleKind::ZeroForcing);
  std::unordered_set<Mask> gi_min(pgi.minimal_sets.begin(), pgi.minimal_sets.end());
  std::unordered_set<Mask> g_min(pg.minimal_sets.begin(), pg.minimal_sets.end());

  TwinDeletionReport rep;
  std::size_t mapped = 0;
  for (Mask s = 0; s < (Mask{1} << (n - 1)); ++s) {
    Mask image = lift(s) | bit(u);
    bool zfs_gi = pgi.contains(s);
    bool zfs_g = pg.contains(image);
    if (zfs_gi != zfs_g) {
      rep.passed = false;
      rep.detail = "set " + set_label(s) + " breaks the bijection";
      return rep;
    }
    if (zfs_gi) {
      ++mapped;
      if (gi_min.count(s) != g_min.count(image)) {
        rep.passed = false;
        rep.detail = "set " + set_label(s) + " breaks minimality preservation";
        return rep;
      }
    }
  }
  // Every ZFS of G containing u is covered: u's deletion ranges over all
  // subsets of V(G_i), so the count check below is a set equality.
  std::size_t with_u = 0;
  for (const auto& layer : pg.sets_by_size)
    for (Mask s : layer)
      if ((s >> u) & 1) ++with_u;
  if (with_u != mapped) {
    rep.passed = false;
    rep.detail = "bijection is not onto";
    return rep;
  }
  rep.detail = std::to_string(mapped) + " sets matched";
  return rep;
}

}  // namespace xtar
