#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace xtar {

// Vertex subsets of a graph on at most 64 vertices, stored as one word.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int v) { return Mask{1} << v; }
inline Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// A subset of {0,...,universe-1}.  Iteration yields vertices in ascending
// index order.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(Mask bits, int universe) : bits_(bits), universe_(universe) {
    if (universe < 0 || universe > 64)
      throw std::invalid_argument("VertexSet: universe must be in [0,64]");
    if (bits & ~full_mask(universe))
      throw std::invalid_argument("VertexSet: bit set outside universe");
  }
  static VertexSet empty_set(int n) { return VertexSet(0, n); }
  static VertexSet full(int n) { return VertexSet(full_mask(n), n); }

  Mask bits() const { return bits_; }
  int universe() const { return universe_; }
  int count() const { return popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const { return (bits_ >> v) & 1; }

  VertexSet with(int v) const { return VertexSet(bits_ | bit(v), universe_); }
  VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v), universe_); }

  VertexSet operator|(const VertexSet& o) const { return VertexSet(bits_ | o.bits_, universe_); }
  VertexSet operator&(const VertexSet& o) const { return VertexSet(bits_ & o.bits_, universe_); }
  VertexSet operator^(const VertexSet& o) const { return VertexSet(bits_ ^ o.bits_, universe_); }
  VertexSet complement() const { return VertexSet(~bits_ & full_mask(universe_), universe_); }
  bool is_subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }

  bool operator==(const VertexSet& o) const = default;

  struct iterator {
    Mask rest;
    int operator*() const { return lowest_bit(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits_}; }
  iterator end() const { return {0}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v : *this) out.push_back(v);
    return out;
  }

 private:
  Mask bits_ = 0;
  int universe_ = 0;
};

// Simple undirected graph on 1..64 vertices, one neighborhood mask per vertex.
// Immutable once built (edges are added during construction only).
class Graph {
 public:
  explicit Graph(int n, std::string label = {}) : n_(n), adj_(n, 0), label_(std::move(label)) {
    if (n < 1 || n > 64) throw std::invalid_argument("Graph: order must be in [1,64]");
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  int order() const { return n_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  Mask neighbors(int v) const { return adj_[v]; }
  Mask closed_neighbors(int v) const { return adj_[v] | bit(v); }
  int degree(int v) const { return popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }

  Mask vertex_mask() const { return full_mask(n_); }

  Mask isolated_vertices() const {
    Mask iso = 0;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] == 0) iso |= bit(v);
    return iso;
  }
  bool has_isolated_vertex() const { return isolated_vertices() != 0; }

  std::size_t edge_count() const {
    std::size_t s = 0;
    for (int v = 0; v < n_; ++v) s += popcount(adj_[v]);
    return s / 2;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_;
  std::vector<Mask> adj_;
  std::string label_;
};

// N[S]: union of closed neighborhoods over S.
Mask closed_neighborhood(const Graph& g, Mask s);
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  return VertexSet(closed_neighborhood(g, s.bits()), g.order());
}

// Connected components of the subgraph induced on w, ordered by least vertex.
std::vector<Mask> components_within(const Graph& g, Mask w);

// Disjoint union; vertices of b are shifted up by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// Induced subgraph on `keep`; vertices are relabeled in ascending order.
Graph induced_subgraph(const Graph& g, Mask keep);

}  // namespace xtar
