#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "synckit/clique.hpp"
#include "synckit/errors.hpp"
#include "synckit/graph.hpp"

namespace synckit {

struct ColoringResult {
  int chi = 0;
  std::vector<int> witness;  // proper coloring using exactly chi colors
};

namespace detail {

inline int saturation(const Graph& g, const std::vector<int>& colors, int v) {
  std::vector<char> seen(colors.size(), 0);
  int s = 0;
  g.neighbors(v).for_each([&](int u) {
    int c = colors[size_t(u)];
    if (c >= 0 && !seen[size_t(c)]) {
      seen[size_t(c)] = 1;
      ++s;
    }
  });
  return s;
}

// DSATUR vertex selection: max saturation, then max degree, then min index.
inline int pick_vertex(const Graph& g, const std::vector<int>& colors) {
  int best = -1, best_sat = -1, best_deg = -1;
  for (int v = 0; v < g.size(); ++v) {
    if (colors[size_t(v)] >= 0) continue;
    int sat = saturation(g, colors, v);
    int deg = g.degree(v);
    if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
      best = v;
      best_sat = sat;
      best_deg = deg;
    }
  }
  return best;
}

inline bool color_feasible(const Graph& g, const std::vector<int>& colors,
                           int v, int c) {
  bool ok = true;
  g.neighbors(v).for_each([&](int u) {
    if (colors[size_t(u)] == c) ok = false;
  });
  return ok;
}

inline bool k_color_rec(const Graph& g, int k, std::vector<int>& colors,
                        int used, uint64_t cap, uint64_t& nodes) {
  int v = pick_vertex(g, colors);
  if (v < 0) return true;
  // New colors are introduced in first-use order, capping the branching.
  int limit = std::min(k - 1, used);
  for (int c = 0; c <= limit; ++c) {
    if (!color_feasible(g, colors, v, c)) continue;
    if (++nodes > cap) throw cap_exceeded("coloring search cap exceeded");
    colors[size_t(v)] = c;
    if (k_color_rec(g, k, colors, std::max(used, c + 1), cap, nodes))
      return true;
    colors[size_t(v)] = -1;
  }
  return false;
}

}  // namespace detail

// Decides k-colorability; a maximum clique is pre-colored to break color
// symmetry. Fills out with a proper coloring when satisfiable.
inline bool k_colorable(const Graph& g, int k, std::vector<int>* out = nullptr,
                        uint64_t cap_nodes = 10'000'000) {
  if (g.size() == 0) {
    if (out) out->clear();
    return true;
  }
  if (k <= 0) return false;
  CliqueResult cr = clique_number(g);
  if (cr.omega > k) return false;
  std::vector<int> colors(size_t(g.size()), -1);
  for (size_t i = 0; i < cr.witness.size(); ++i)
    colors[size_t(cr.witness[i])] = int(i);
  uint64_t nodes = 0;
  if (!detail::k_color_rec(g, k, colors, cr.omega, cap_nodes, nodes))
    return false;
  if (out) *out = colors;
  return true;
}

// Greedy DSATUR coloring; upper bound for the exact solver.
inline ColoringResult greedy_coloring(const Graph& g) {
  ColoringResult r;
  r.witness.assign(size_t(g.size()), -1);
  for (int step = 0; step < g.size(); ++step) {
    int v = detail::pick_vertex(g, r.witness);
    int c = 0;
    while (!detail::color_feasible(g, r.witness, v, c)) ++c;
    r.witness[size_t(v)] = c;
    r.chi = std::max(r.chi, c + 1);
  }
  return r;
}

// Exact chromatic number: iterative deepening from the clique lower bound to
// the greedy upper bound.
inline ColoringResult chromatic_number(const Graph& g,
                                       uint64_t cap_nodes = 10'000'000) {
  ColoringResult result;
  if (g.size() == 0) return result;
  if (g.is_null()) {
    result.chi = 1;
    result.witness.assign(size_t(g.size()), 0);
    return result;
  }
  const int lb = clique_number(g).omega;
  ColoringResult greedy = greedy_coloring(g);
  assert(lb <= greedy.chi);
  for (int k = lb; k < greedy.chi; ++k) {
    std::vector<int> w;
    if (k_colorable(g, k, &w, cap_nodes)) {
      result.chi = k;
      result.witness = std::move(w);
      assert(result.chi >= lb);
      return result;
    }
  }
  return greedy;
}

}  // namespace synckit
