#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "xtar/canonical.hpp"
#include "xtar/families.hpp"

using namespace xtar;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

// Plain O(n!) isomorphism test, independent of the canonical labeling code.
bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("certificate is invariant under relabeling") {
  std::mt19937 rng(777);
  std::vector<Graph> samples = {path_graph(6),  cycle_graph(7),    star_graph(5),
                                paw_graph(),    complete_graph(5), double_star(2, 3),
                                grl_graph(4, 2)};
  for (const Graph& g : samples) {
    std::string cert = certificate(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 20; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(certificate(permuted(g, perm)) == cert);
    }
    // The labeling actually produces the certificate graph.
    CanonicalForm cf = canonical_form(g);
    std::vector<int> pos(g.order());
    for (int i = 0; i < g.order(); ++i) pos[cf.labeling[i]] = i;
    CHECK(certificate(permuted(g, pos)) == cf.certificate);
  }
}

TEST_CASE("certificate separates non-isomorphic graphs") {
  CHECK(certificate(path_graph(4)) != certificate(star_graph(3)));
  CHECK(certificate(cycle_graph(6)) != certificate(graph_from_descriptor("cycle:6+chord")));
  // Same degree sequence, different graphs: C6 vs two triangles.
  Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(certificate(cycle_graph(6)) != certificate(two_triangles));
}

TEST_CASE("enumeration agrees with a brute-force partition on 4 vertices") {
  // All 2^6 labeled graphs on 4 vertices, partitioned by pairwise brute
  // isomorphism: 11 classes.
  std::vector<Graph> reps;
  for (int bits = 0; bits < 64; ++bits) {
    Graph g(4);
    int e = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, ++e)
        if (bits & (1 << e)) g.add_edge(i, j);
    bool found = false;
    for (const Graph& r : reps)
      if (brute_isomorphic(g, r)) found = true;
    if (!found) reps.push_back(g);
  }
  CHECK(reps.size() == 11);

  std::vector<Graph> enumerated = enumerate_nonisomorphic(4, false);
  CHECK(enumerated.size() == 11);
  std::set<std::string> enum_certs, brute_certs;
  for (const Graph& g : enumerated) enum_certs.insert(certificate(g));
  for (const Graph& g : reps) brute_certs.insert(certificate(g));
  CHECK(enum_certs == brute_certs);
}

TEST_CASE("enumeration counts match the catalog") {
  // 1, 2, 4, 11, 34, 156, 1044 graphs; 0, 1, 2, 7, 23, 122, 888 without
  // isolated vertices.
  CHECK(enumerate_nonisomorphic(1, false).size() == 1);
  CHECK(enumerate_nonisomorphic(2, false).size() == 2);
  CHECK(enumerate_nonisomorphic(3, false).size() == 4);
  CHECK(enumerate_nonisomorphic(5, false).size() == 34);
  CHECK(enumerate_nonisomorphic(6, false).size() == 156);
  CHECK(enumerate_nonisomorphic(7, false).size() == 1044);
  CHECK(enumerate_nonisomorphic(2, true).size() == 1);
  CHECK(enumerate_nonisomorphic(3, true).size() == 2);
  CHECK(enumerate_nonisomorphic(4, true).size() == 7);
  CHECK(enumerate_nonisomorphic(5, true).size() == 23);
  CHECK(enumerate_nonisomorphic(6, true).size() == 122);
  CHECK(enumerate_nonisomorphic(7, true).size() == 888);
}
