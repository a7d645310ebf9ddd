#include <doctest.h>

#include <algorithm>

#include "xtar/canonical.hpp"
#include "xtar/families.hpp"
#include "xtar/iso.hpp"

using namespace xtar;

namespace {

Graph figure_g() {
  Graph g(6);
  for (auto [u, v] : {std::pair{2, 3}, {2, 5}, {0, 2}, {0, 4}, {1, 4}, {0, 1}}) g.add_edge(u, v);
  return g;
}

Graph figure_h() {
  Graph g(6);
  for (auto [u, v] : {std::pair{1, 3}, {1, 2}, {2, 4}, {1, 4}, {0, 1}, {0, 2}, {2, 3}, {3, 4},
                      {4, 5}, {3, 5}})
    g.add_edge(u, v);
  return g;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
  return h;
}

}  // namespace

TEST_CASE("irrelevant vertices of standard examples") {
  // Star: the center lies in no minimal zero forcing set.
  auto star = build_profile(star_graph(4), XRuleKind::ZeroForcing);
  CHECK(irrelevant_vertices(star) == bit(0));

  // Corona H o rK1 with r >= 2: exactly the base vertices are irrelevant.
  for (const Graph& h : {path_graph(3), complete_graph(3)}) {
    auto p = build_profile(corona_leaves(h, 2), XRuleKind::ZeroForcing);
    CHECK(irrelevant_vertices(p) == full_mask(h.order()));
  }

  // G(r,l) under power domination: the leaves are irrelevant.
  auto grl = build_profile(grl_graph(4, 2), XRuleKind::PowerDomination);
  CHECK(irrelevant_vertices(grl) == (bit(4) | bit(5)));

  // Domination and PSD forcing admit no irrelevant vertices here.
  for (const Graph& g : {paw_graph(), star_graph(4), corona_leaves(path_graph(3), 2)}) {
    CHECK(irrelevant_vertices(build_profile(g, XRuleKind::Domination)) == 0);
    CHECK(irrelevant_vertices(build_profile(g, XRuleKind::PsdZeroForcing)) == 0);
  }
}

TEST_CASE("nu maps are automorphisms exactly for irrelevant shifts") {
  auto p = build_profile(star_graph(4), XRuleKind::ZeroForcing);
  CHECK(nu_map_is_automorphism(p, 0));
  CHECK(nu_map_is_automorphism(p, bit(0)));
  for (int v = 1; v <= 4; ++v) CHECK(!nu_map_is_automorphism(p, bit(v)));

  auto q = build_profile(corona_leaves(complete_graph(3), 2), XRuleKind::ZeroForcing);
  for (Mask r = 0; r < bit(3); ++r) CHECK(nu_map_is_automorphism(q, r));  // subsets of V(K3)
  CHECK(!nu_map_is_automorphism(q, bit(0) | bit(3)));
}

TEST_CASE("nu shift by an irrelevant vertex is a TAR involution") {
  auto p = build_profile(star_graph(4), XRuleKind::ZeroForcing);
  TarGraph t = build_tar(p);
  Mask r = bit(0);
  for (Mask s : t.vertices) {
    Mask image = s ^ r;
    CHECK(t.contains(image));
    CHECK((image ^ r) == s);
    // Adjacency is preserved: the map changes each set in the one fixed
    // coordinate, so symmetric differences are untouched.
    for (int v = 0; v < t.base_n; ++v)
      if (t.contains(s ^ bit(v))) CHECK(t.contains(image ^ bit(v)));
  }
  // Shifting by the single irrelevant vertex pairs each set with a distinct
  // partner: a perfect matching on the TAR vertices.
  for (Mask s : t.vertices) CHECK((s ^ r) != s);
}

TEST_CASE("TAR isomorphism via minimal-set bijections") {
  // A graph is TAR-isomorphic to any relabeling of itself.
  Graph g = figure_g();
  std::vector<int> perm = {3, 0, 5, 1, 4, 2};
  IsoVerdict v = tar_isomorphic(g, permuted(g, perm), XRuleKind::ZeroForcing);
  REQUIRE(v.isomorphic());
  // The bijection transports every zero forcing set.
  auto p = build_profile(g, XRuleKind::ZeroForcing);
  auto q = build_profile(permuted(g, perm), XRuleKind::ZeroForcing);
  for (const auto& layer : p.sets_by_size)
    for (Mask s : layer) CHECK(q.contains(v.bijection->apply(s)));

  // Equal polynomials are not enough: the figure pair differs already in the
  // largest minimal set.
  IsoVerdict w = tar_isomorphic(figure_g(), figure_h(), XRuleKind::ZeroForcing);
  CHECK(!w.isomorphic());
  CHECK(w.witness == "upper-x-number");

  IsoVerdict x = tar_isomorphic(complete_graph(3), path_graph(3), XRuleKind::ZeroForcing);
  CHECK(!x.isomorphic());
  CHECK(x.witness == "x-number");
}

TEST_CASE("bijection search agrees with the brute-force TAR oracle") {
  std::vector<Graph> graphs = enumerate_nonisomorphic(4, true);
  auto more = enumerate_nonisomorphic(3, true);
  graphs.insert(graphs.end(), more.begin(), more.end());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i; j < graphs.size(); ++j) {
      auto p = build_profile(graphs[i], XRuleKind::ZeroForcing);
      auto q = build_profile(graphs[j], XRuleKind::ZeroForcing);
      bool fast = find_xset_bijection(p, q).has_value();
      bool brute = brute_tar_iso(build_tar(p), build_tar(q));
      CHECK(fast == brute);
    }
}

TEST_CASE("uniqueness survey on small orders") {
  SurveyResult r4 = uniqueness_survey(4, XRuleKind::ZeroForcing);
  CHECK(r4.total == 7);
  CHECK(r4.unique == 4);
  std::size_t classed = 0;
  for (const auto& cls : r4.classes) classed += cls.size();
  CHECK(classed == 7);

  SurveyResult r5 = uniqueness_survey(5, XRuleKind::ZeroForcing, 2);
  CHECK(r5.total == 23);
  CHECK(r5.unique == 7);

  // Every class is internally TAR-isomorphic and classes are pairwise not.
  std::vector<Graph> graphs = enumerate_nonisomorphic(4, true);
  auto by_cert = [&](const std::string& cert) -> const Graph& {
    for (const Graph& g : graphs)
      if (certificate(g) == cert) return g;
    FAIL("certificate not found");
    return graphs.front();
  };
  for (const auto& cls : r4.classes)
    for (std::size_t i = 1; i < cls.size(); ++i)
      CHECK(tar_isomorphic(by_cert(cls[0]), by_cert(cls[i]), XRuleKind::ZeroForcing)
                .isomorphic());
  for (std::size_t a = 0; a < r4.classes.size(); ++a)
    for (std::size_t b = a + 1; b < r4.classes.size(); ++b)
      CHECK(!tar_isomorphic(by_cert(r4.classes[a][0]), by_cert(r4.classes[b][0]),
                            XRuleKind::ZeroForcing)
                 .isomorphic());
}

TEST_CASE("twin classes and twin deletion") {
  Graph s = star_graph(4);
  std::vector<Mask> classes = twin_classes(s);
  // Center alone; the four leaves share an open neighborhood.
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == bit(0));
  CHECK(classes[1] == (bit(1) | bit(2) | bit(3) | bit(4)));

  TwinDeletionReport rep = twin_deletion_check(s, classes[1]);
  CHECK(rep.passed);

  // The double star DS(2,2) has twin classes of size two only, where the
  // deletion argument genuinely fails: removing a leaf drops the zero forcing
  // number from 2 to 1 and no size-preserving bijection exists.
  Graph ds = double_star(2, 2);
  CHECK(build_profile(ds, XRuleKind::ZeroForcing).x_number == 2);
  for (Mask cls : twin_classes(ds)) CHECK(popcount(cls) <= 2);
  CHECK_THROWS_AS(twin_deletion_check(ds, bit(2) | bit(3)), std::invalid_argument);
}
