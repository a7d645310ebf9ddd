#include <doctest.h>

#include <algorithm>

#include "xtar/families.hpp"
#include "xtar/profile.hpp"

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

}  // namespace

TEST_CASE("profile of complete graphs") {
  for (int n : {2, 3, 4, 5, 6}) {
    XProfile p = build_profile(complete_graph(n), XRuleKind::ZeroForcing);
    CHECK(p.x_number == n - 1);
    CHECK(p.upper_x == n - 1);
    CHECK(p.minimal_sets.size() == static_cast<std::size_t>(n));
    // Only the (n-1)-subsets and the full set are zero forcing sets.
    CHECK(p.total_sets() == static_cast<std::size_t>(n) + 1);
  }
}

TEST_CASE("profile of stars") {
  for (int r : {3, 4, 5}) {
    XProfile p = build_profile(star_graph(r), XRuleKind::ZeroForcing);
    CHECK(p.x_number == r - 1);
    CHECK(p.upper_x == r - 1);
    // Minimal sets: any r-1 of the r leaves.
    CHECK(p.minimal_sets.size() == static_cast<std::size_t>(r));
    for (Mask s : p.minimal_sets) CHECK((s & bit(0)) == 0);
  }
}

TEST_CASE("zero forcing polynomial of the two six-vertex examples") {
  // Two non-isomorphic graphs sharing the polynomial 8x^3 + 13x^4 + 6x^5 + x^6.
  std::vector<std::uint64_t> want = {0, 0, 0, 8, 13, 6, 1};
  CHECK(x_polynomial(build_profile(figure_g(), XRuleKind::ZeroForcing)) == want);
  CHECK(x_polynomial(build_profile(figure_h(), XRuleKind::ZeroForcing)) == want);
}

TEST_CASE("profile of the paw") {
  XProfile p = build_profile(paw_graph(), XRuleKind::ZeroForcing);
  CHECK(p.x_number == 2);
  CHECK(p.upper_x == 2);
  CHECK(p.sets_by_size[2].size() == 5);
  // Every pair except {center, pendant} = {0, 1}, which leaves both triangle
  // vertices white with no forcer.
  std::vector<Mask> want;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      if (!(u == 0 && v == 1)) want.push_back(bit(u) | bit(v));
  std::sort(want.begin(), want.end());
  CHECK(p.sets_by_size[2] == want);
}

TEST_CASE("profile of the H(r) family") {
  for (int r : {2, 3}) {
    XProfile p = build_profile(h_family(r), XRuleKind::ZeroForcing);
    CHECK(p.x_number == r + 2);
    CHECK(p.upper_x == r + 2);
    for (Mask s : p.minimal_sets) CHECK(popcount(s) == r + 2);
  }
}

TEST_CASE("profile of the twin-expanded family H_r") {
  // H_r has minimal zero forcing sets of two different sizes, r+2 and r+4.
  for (int r : {2, 3}) {
    XProfile p = build_profile(hr_family(r), XRuleKind::ZeroForcing);
    CHECK(p.x_number == r + 2);
    CHECK(p.upper_x == r + 4);
    CHECK(minimal_sets_of_size(p, r + 2).size() > 0);
    CHECK(minimal_sets_of_size(p, r + 4).size() > 0);
    CHECK(minimal_sets_of_size(p, r + 3).empty());
  }
}

TEST_CASE("minimum degree bounds the zero forcing number") {
  for (const Graph& g : {cycle_graph(6), grl_graph(4, 2), h_family(2), figure_g(), figure_h()}) {
    XProfile p = build_profile(g, XRuleKind::ZeroForcing);
    int delta = g.order();
    for (int v = 0; v < g.order(); ++v) delta = std::min(delta, g.degree(v));
    CHECK(delta <= p.x_number);
  }
}

TEST_CASE("isolated vertices shift every parameter by one") {
  Graph base = paw_graph();
  Graph with_iso = disjoint_union(base, Graph(1));
  for (XRuleKind rule : {XRuleKind::ZeroForcing, XRuleKind::PsdZeroForcing, XRuleKind::Domination,
                         XRuleKind::PowerDomination}) {
    XProfile p = build_profile(base, rule);
    XProfile q = build_profile(with_iso, rule);
    CHECK(q.x_number == p.x_number + 1);
    CHECK(q.upper_x == p.upper_x + 1);
    // Every X-set of the union is an X-set of the base plus the isolated
    // vertex.
    CHECK(q.total_sets() == p.total_sets());
    for (Mask s : q.minimal_sets) CHECK((s & bit(4)) != 0);
  }
}

TEST_CASE("minimum zero forcing sets can have empty intersection") {
  XProfile p = build_profile(cycle_graph(4), XRuleKind::ZeroForcing);
  Mask common = full_mask(4);
  for (Mask s : p.sets_by_size[p.x_number]) common &= s;
  CHECK(common == 0);
}

TEST_CASE("sweep guard") {
  CHECK_THROWS_AS(build_profile(path_graph(25), XRuleKind::ZeroForcing), std::invalid_argument);
}
