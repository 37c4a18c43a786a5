#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "synckit/bitset.hpp"
#include "synckit/perm_group.hpp"

namespace synckit {

// Simple undirected graph with bit-vector adjacency rows. Symmetric and
// irreflexive by construction; equality is literal, not isomorphism.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(size_t(n), Bitset(n)) {}

  static Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
  }

  int size() const { return n_; }

  void add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    adj_[size_t(u)].set(v);
    adj_[size_t(v)].set(u);
  }

  bool adjacent(int u, int v) const {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_);
    return u != v && adj_[size_t(u)].test(v);
  }

  const Bitset& neighbors(int v) const { return adj_[size_t(v)]; }
  int degree(int v) const { return adj_[size_t(v)].count(); }

  int edge_count() const {
    int total = 0;
    for (const auto& row : adj_) total += row.count();
    return total / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n_; ++u)
      adj_[size_t(u)].for_each([&](int v) {
        if (v > u) es.emplace_back(u, v);
      });
    return es;
  }

  bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }
  bool is_null() const { return edge_count() == 0; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

inline Graph complement(const Graph& g) {
  const int n = g.size();
  Graph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

inline Graph graph_union(const Graph& a, const Graph& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("union: vertex-set mismatch");
  Graph u = a;
  for (auto [x, y] : b.edges()) u.add_edge(x, y);
  return u;
}

// Subgraph induced by verts, re-indexed by position in verts.
inline Graph induced(const Graph& g, const std::vector<int>& verts) {
  const int m = int(verts.size());
  Graph h(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(verts[size_t(i)], verts[size_t(j)])) h.add_edge(i, j);
  return h;
}

// True iff every generator maps edges to edges.
inline bool is_invariant(const Graph& x, const PermGroup& g) {
  if (x.size() != g.degree())
    throw std::invalid_argument("is_invariant: degree mismatch");
  for (const auto& p : g.generators())
    for (auto [u, v] : x.edges())
      if (!x.adjacent(p[u], p[v])) return false;
  return true;
}

// Union of the orbital graphs selected by mask (bit i = i-th pair orbit).
inline Graph invariant_graph_for_mask(const PermGroup& g, uint32_t mask) {
  Graph x(g.degree());
  const auto& orbits = g.pair_orbits();
  for (size_t i = 0; i < orbits.size(); ++i)
    if (mask & (uint32_t(1) << i))
      for (auto [u, v] : orbits[i]) x.add_edge(u, v);
  return x;
}

}  // namespace synckit
