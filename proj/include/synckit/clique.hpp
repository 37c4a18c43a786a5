#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "synckit/errors.hpp"
#include "synckit/graph.hpp"

namespace synckit {

struct CliqueResult {
  int omega = 0;
  std::vector<int> witness;  // a clique of size omega, sorted
};

namespace detail {

// Greedy coloring of the candidate set; emits vertices ordered by color
// (ascending), the standard branch-and-bound bound for max clique.
inline void color_sort(const Graph& g, const Bitset& cand,
                       std::vector<int>& order, std::vector<int>& bound) {
  order.clear();
  bound.clear();
  Bitset rest = cand;
  int color = 0;
  while (rest.any()) {
    ++color;
    Bitset cls = rest;
    while (cls.any()) {
      int v = cls.first();
      order.push_back(v);
      bound.push_back(color);
      rest.reset(v);
      cls.reset(v);
      cls.subtract(g.neighbors(v));
    }
  }
}

inline void clique_expand(const Graph& g, Bitset cand, std::vector<int>& cur,
                          CliqueResult& best) {
  if (cand.none()) {
    if (int(cur.size()) > best.omega) {
      best.omega = int(cur.size());
      best.witness = cur;
    }
    return;
  }
  std::vector<int> order, bound;
  color_sort(g, cand, order, bound);
  for (int i = int(order.size()) - 1; i >= 0; --i) {
    if (int(cur.size()) + bound[size_t(i)] <= best.omega) return;
    int v = order[size_t(i)];
    cur.push_back(v);
    clique_expand(g, cand & g.neighbors(v), cur, best);
    cur.pop_back();
    cand.reset(v);
  }
}

}  // namespace detail

// Exact maximum clique size with witness, by branch and bound with
// greedy-coloring upper bounds on bit-vector candidate sets.
inline CliqueResult clique_number(const Graph& g) {
  CliqueResult best;
  if (g.size() == 0) return best;
  Bitset all(g.size());
  for (int v = 0; v < g.size(); ++v) all.set(v);
  std::vector<int> cur;
  detail::clique_expand(g, all, cur, best);
  std::sort(best.witness.begin(), best.witness.end());
  return best;
}

namespace detail {

inline void cliques_of_size_rec(const Graph& g, int k, const Bitset& cand,
                                std::vector<int>& cur,
                                std::vector<std::vector<int>>& out,
                                uint64_t cap, uint64_t& nodes) {
  if (int(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  if (int(cur.size()) + cand.count() < k) return;
  Bitset rest = cand;
  while (rest.any()) {
    int v = rest.first();
    rest.reset(v);
    if (++nodes > cap) throw cap_exceeded("clique enumeration cap exceeded");
    cur.push_back(v);
    cliques_of_size_rec(g, k, rest & g.neighbors(v), cur, out, cap, nodes);
    cur.pop_back();
  }
}

}  // namespace detail

// All cliques of exactly size k, each sorted ascending, in lexicographic
// order.
inline std::vector<std::vector<int>> cliques_of_size(
    const Graph& g, int k, uint64_t cap_nodes = 10'000'000) {
  std::vector<std::vector<int>> out;
  if (k <= 0 || k > g.size()) return out;
  Bitset all(g.size());
  for (int v = 0; v < g.size(); ++v) all.set(v);
  std::vector<int> cur;
  uint64_t nodes = 0;
  detail::cliques_of_size_rec(g, k, all, cur, out, cap_nodes, nodes);
  return out;
}

// All cliques of the maximum size.
inline std::vector<std::vector<int>> maximum_cliques(
    const Graph& g, uint64_t cap_nodes = 10'000'000) {
  int omega = clique_number(g).omega;
  return cliques_of_size(g, omega, cap_nodes);
}

}  // namespace synckit
