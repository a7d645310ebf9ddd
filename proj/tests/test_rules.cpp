#include <doctest.h>

#include "xtar/families.hpp"
#include "xtar/rules.hpp"

using namespace xtar;

TEST_CASE("zero forcing closure on a path") {
  Graph p = path_graph(5);
  auto [closure, forces] = zf_closure(p, bit(0));
  CHECK(closure == full_mask(5));
  CHECK(forces.forces.size() == 4);
  // Deterministic replay: each force is legal when applied in order.
  Mask blue = bit(0);
  for (auto [from, to] : forces.forces) {
    CHECK((blue & bit(from)) != 0);
    CHECK((blue & bit(to)) == 0);
    CHECK(popcount(p.neighbors(from) & ~blue) == 1);
    blue |= bit(to);
  }
  CHECK(blue == closure);

  // A middle vertex alone forces nothing (two white neighbors).
  CHECK(zf_closure(p, bit(2)).closure == bit(2));
}

TEST_CASE("zero forcing sets of small families") {
  Graph c5 = cycle_graph(5);
  // C_n: exactly the pairs of consecutive vertices work at size 2.
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      bool consecutive = c5.has_edge(u, v);
      CHECK(is_x_set(c5, bit(u) | bit(v), XRuleKind::ZeroForcing) == consecutive);
    }

  Graph k4 = complete_graph(4);
  CHECK(!is_x_set(k4, bit(0) | bit(1), XRuleKind::ZeroForcing));
  CHECK(is_x_set(k4, bit(0) | bit(1) | bit(2), XRuleKind::ZeroForcing));
}

TEST_CASE("PSD closure relaxes standard forcing") {
  // On a path, one endpoint PSD-forces everything; so does a middle vertex,
  // because the components of G - blue are handled separately.
  Graph p = path_graph(5);
  CHECK(psd_closure(p, bit(2)) == full_mask(5));
  CHECK(is_x_set(p, bit(2), XRuleKind::PsdZeroForcing));
  CHECK(!is_x_set(p, bit(2), XRuleKind::ZeroForcing));

  // Every zero forcing set is a PSD forcing set.
  Graph c6 = cycle_graph(6);
  for (Mask s = 1; s < full_mask(6); ++s)
    if (is_x_set(c6, s, XRuleKind::ZeroForcing)) {
      CHECK(is_x_set(c6, s, XRuleKind::PsdZeroForcing));
    }
}

TEST_CASE("domination and power domination") {
  Graph s4 = star_graph(4);
  CHECK(is_x_set(s4, bit(0), XRuleKind::Domination));
  CHECK(!is_x_set(s4, bit(1), XRuleKind::Domination));
  // Power domination: N[S] must be a zero forcing set.  The center works; a
  // leaf only monitors {leaf, center} and the center then has three white
  // neighbors.
  CHECK(is_x_set(s4, bit(0), XRuleKind::PowerDomination));
  CHECK(!is_x_set(s4, bit(1), XRuleKind::PowerDomination));

  Graph p5 = path_graph(5);
  CHECK(!is_x_set(p5, bit(2), XRuleKind::Domination));
  CHECK(is_x_set(p5, bit(2), XRuleKind::PowerDomination));
  CHECK(is_x_set(p5, bit(0) | bit(2) | bit(4), XRuleKind::Domination));
}

TEST_CASE("monotonicity under supersets") {
  Graph g = graph_from_descriptor("cycle:6+chord");
  for (XRuleKind rule : {XRuleKind::ZeroForcing, XRuleKind::PsdZeroForcing, XRuleKind::Domination,
                         XRuleKind::PowerDomination})
    for (Mask s = 1; s < full_mask(6); ++s)
      if (is_x_set(g, s, rule))
        for (int v = 0; v < 6; ++v)
          if (!(s & bit(v))) {
            CHECK(is_x_set(g, s | bit(v), rule));
          }
}

TEST_CASE("reversal of a chronological list of forces") {
  // If S forces G with force list F, then V minus the forcers is also a zero
  // forcing set (reversing the forces).
  for (const Graph& g : {path_graph(6), cycle_graph(6), paw_graph(), h_family(2)}) {
    for (Mask s = 1; s < full_mask(g.order()); ++s) {
      auto [closure, forces] = zf_closure(g, s);
      if (closure != g.vertex_mask()) continue;
      Mask forcers = 0;
      for (auto [from, to] : forces.forces) forcers |= bit(from);
      CHECK(zf_closure(g, g.vertex_mask() & ~forcers).closure == g.vertex_mask());
    }
  }
}

TEST_CASE("axiom audit on representative graphs") {
  for (XRuleKind rule : {XRuleKind::ZeroForcing, XRuleKind::PsdZeroForcing, XRuleKind::Domination,
                         XRuleKind::PowerDomination}) {
    AxiomReport conn = audit_axioms(cycle_graph(5), rule);
    CHECK(conn.all_passed());
    CHECK(!conn.component_union.applicable);
    CHECK(conn.near_full_accepted.applicable);

    AxiomReport disc = audit_axioms(disjoint_union(path_graph(3), complete_graph(3)), rule);
    CHECK(disc.all_passed());
    CHECK(disc.component_union.applicable);

    // With an isolated vertex the (n-1)-subset condition does not apply.
    AxiomReport iso = audit_axioms(disjoint_union(path_graph(3), Graph(1)), rule);
    CHECK(!iso.near_full_accepted.applicable);
    CHECK(iso.superset_closed.passed);
    CHECK(iso.empty_rejected.passed);
  }
}
