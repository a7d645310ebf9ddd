#pragma once

#include <string>
#include <vector>

#include "xtar/graph.hpp"

namespace xtar {

struct CanonicalForm {
  std::vector<int> labeling;  // labeling[i] = original vertex placed at position i
  std::string certificate;    // graph6 of the relabeled graph; equal iff isomorphic
};

// Deterministic canonical labeling for graphs of order <= 16.  The
// certificate is the lexicographically least graph6 body over all vertex
// orderings, found by breadth-first refinement over partial orderings.
CanonicalForm canonical_form(const Graph& g);

inline std::string certificate(const Graph& g) { return canonical_form(g).certificate; }

// One representative per isomorphism class of order n, sorted by certificate.
// Internal generation covers n <= 7; n = 8 must be requested with long_ok.
std::vector<Graph> enumerate_nonisomorphic(int n, bool require_no_isolated, bool long_ok = false);

}  // namespace xtar
