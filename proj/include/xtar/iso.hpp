#pragma once

#include <optional>
#include <string>
#include <vector>

#include "xtar/profile.hpp"
#include "xtar/tar.hpp"

namespace xtar {

// Total vertex bijection V(G) -> V(G'); forward and inverse compose to the
// identity.
struct Bijection {
  std::vector<int> forward;
  std::vector<int> inverse;

  static Bijection identity(int n);
  static Bijection from_forward(std::vector<int> fwd);
  Mask apply(Mask s) const;
};

struct IsoVerdict {
  std::optional<Bijection> bijection;
  Mask irrelevant_shift = 0;  // R' when a raw isomorphism was corrected by nu
  std::string witness;        // first failed invariant on the negative branch
  bool isomorphic() const { return bijection.has_value(); }
};

// Vertices absent from every minimal X-set.  Every subset of the result is an
// X-irrelevant set.
Mask irrelevant_vertices(const XProfile& profile);

// Whether S -> S (+) r maps the X-set family onto itself.  Equals
// r subset-of irrelevant_vertices(profile).
bool nu_map_is_automorphism(const XProfile& profile, Mask r);

// A vertex bijection carrying the minimal-set family of p onto that of q,
// found by backtracking with occurrence-signature refinement.  Such a
// bijection extends to all X-sets and hence to a TAR-graph isomorphism.
std::optional<Bijection> find_xset_bijection(const XProfile& p, const XProfile& q);

// TAR-graph isomorphism for base graphs with no isolated vertices.  The
// negative witness is the first mismatch in the fixed order: order, x-number,
// upper-x-number, polynomial, minimal-set sizes, exhausted search.
IsoVerdict tar_isomorphic(const Graph& g, const Graph& h, XRuleKind rule);

// Independent oracle: general graph-isomorphism backtracking on the
// materialized TAR graphs (at most 64 vertices each).
bool brute_tar_iso(const TarGraph& t1, const TarGraph& t2);

struct SurveyResult {
  std::size_t total = 0;
  std::size_t unique = 0;
  // TAR-isomorphism classes as groups of canonical certificates, sorted.
  std::vector<std::vector<std::string>> classes;
};

// Partition all no-isolated-vertex graphs of order n into TAR-isomorphism
// classes.  `graphs` overrides internal generation (e.g. graph6 ingestion).
SurveyResult uniqueness_survey(int n, XRuleKind rule, int jobs = 1, bool long_ok = false,
                               const std::vector<Graph>* graphs = nullptr);

// Maximal sets of vertices with pairwise equal open neighborhoods, ordered by
// least vertex.
std::vector<Mask> twin_classes(const Graph& g);

struct TwinDeletionReport {
  bool passed = true;
  std::string detail;
};
// For a twin class of size >= 3 with least member u: verifies that
// S -> S + {u} is a minimality-preserving bijection from the zero forcing
// sets of G - u onto the zero forcing sets of G containing u.
TwinDeletionReport twin_deletion_check(const Graph& g, Mask twinclass);

}  // namespace xtar
