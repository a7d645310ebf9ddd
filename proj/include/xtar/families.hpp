#pragma once

#include <string>

#include "xtar/graph.hpp"

namespace xtar {

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// K_{1,r}; vertex 0 is the center, leaves are 1..r.
Graph star_graph(int r);
// Adjacent centers 0 and 1; a leaves 2..a+1 on center 0, b leaves on center 1.
Graph double_star(int a, int b);
// K_{1,3} with the extra edge {2,3}.
Graph paw_graph();
Graph hypercube_graph(int t);
// H o rK1: each vertex of h gains r private leaves.  Leaves of vertex v are
// numbered h.order() + v*r .. h.order() + v*r + r - 1.
Graph corona_leaves(const Graph& h, int r);
// G(r,l): K_r o K_1 with r-l leaves removed.  Clique vertices 0..r-1,
// leaf r+i hangs off clique vertex i for i = 0..l-1.
Graph grl_graph(int r, int l);
// H(r): cliques {0..r+1} and {r+2..2r+3} plus the matching i ~ r+2+i for
// i = 0..r-1.  (The 1-based labels used elsewhere are these indices plus one.)
Graph h_family(int r);
// H_r: the 8-vertex graph H_2 with twin vertices u_3..u_r appended; u_1 and
// u_2 are vertices 6 and 7, every u_k has N(u_k) = {3,4,5}.
Graph hr_family(int r);

// "name:args" descriptor used by the CLI, e.g. "cycle:6", "grl:5,2",
// "corona:complete:3,2", "cycle:6+chord".  Throws std::invalid_argument.
Graph graph_from_descriptor(const std::string& desc);

// Descriptor if it looks like one, otherwise a graph6 record.
Graph graph_from_input(const std::string& input);

}  // namespace xtar
