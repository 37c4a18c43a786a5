#pragma once

// Test-only brute-force oracles, kept independent of the implementation
// paths they check.

#include <algorithm>
#include <set>
#include <vector>

#include "synckit/graph.hpp"
#include "synckit/perm.hpp"
#include "synckit/transform.hpp"

namespace oracles {

// Full closure of a permutation set under composition.
inline std::set<synckit::Permutation> group_closure(
    const std::vector<synckit::Permutation>& gens, size_t cap = 1'000'000) {
  std::set<synckit::Permutation> seen(gens.begin(), gens.end());
  seen.insert(synckit::Permutation(gens[0].degree()));
  for (;;) {
    std::vector<synckit::Permutation> fresh;
    for (const auto& a : seen)
      for (const auto& g : gens) {
        auto p = synckit::compose(a, g);
        if (!seen.contains(p)) fresh.push_back(p);
      }
    if (fresh.empty()) return seen;
    for (auto& p : fresh) seen.insert(std::move(p));
    if (seen.size() > cap) throw std::runtime_error("oracle closure cap");
  }
}

// Full closure of a transformation set (nonempty words only).
inline std::set<synckit::Transformation> monoid_closure_naive(
    const std::vector<synckit::Transformation>& gens,
    size_t cap = 1'000'000) {
  std::set<synckit::Transformation> seen(gens.begin(), gens.end());
  std::vector<synckit::Transformation> work(seen.begin(), seen.end());
  while (!work.empty()) {
    auto a = std::move(work.back());
    work.pop_back();
    for (const auto& g : gens) {
      auto t = synckit::compose(a, g);
      if (seen.insert(t).second) {
        if (seen.size() > cap) throw std::runtime_error("oracle closure cap");
        work.push_back(std::move(t));
      }
    }
  }
  return seen;
}

// Collapsible pairs by scanning the full monoid closure.
inline std::vector<std::pair<int, int>> collapsible_pairs_naive(
    const std::vector<synckit::Transformation>& gens,
    size_t cap = 1'000'000) {
  auto closure = monoid_closure_naive(gens, cap);
  const int n = gens[0].degree();
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool collapsible = false;
      for (const auto& t : closure)
        if (t[x] == t[y]) {
          collapsible = true;
          break;
        }
      if (collapsible) out.emplace_back(x, y);
    }
  return out;
}

// Maximum clique by full subset enumeration (n <= 20).
inline int clique_number_naive(const synckit::Graph& g) {
  const int n = g.size();
  int best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    if (int(verts.size()) <= best) continue;
    bool clique = true;
    for (size_t i = 0; clique && i < verts.size(); ++i)
      for (size_t j = i + 1; clique && j < verts.size(); ++j)
        if (!g.adjacent(verts[i], verts[j])) clique = false;
    if (clique) best = int(verts.size());
  }
  return best;
}

// Chromatic number by plain backtracking over vertices in index order.
inline bool k_colorable_naive(const synckit::Graph& g, int k,
                              std::vector<int>& colors, int v) {
  if (v == g.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v) && colors[size_t(u)] == c) ok = false;
    if (!ok) continue;
    colors[size_t(v)] = c;
    if (k_colorable_naive(g, k, colors, v + 1)) return true;
  }
  colors[size_t(v)] = -1;
  return false;
}

inline int chromatic_number_naive(const synckit::Graph& g) {
  if (g.size() == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> colors(size_t(g.size()), -1);
    if (k_colorable_naive(g, k, colors, 0)) return k;
  }
}

}  // namespace oracles
