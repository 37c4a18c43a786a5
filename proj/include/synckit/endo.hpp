#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "synckit/clique.hpp"
#include "synckit/errors.hpp"
#include "synckit/graph.hpp"

namespace synckit {

// Vertex map between graphs; tagged use here is always source == target
// (endomorphisms of X).
struct GraphMap {
  std::vector<int> images;

  bool is_bijective() const {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
      if (seen[size_t(v)]) return false;
      seen[size_t(v)] = 1;
    }
    return true;
  }

  std::vector<int> image_set() const {
    std::vector<int> im(images);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

inline bool is_endomorphism(const Graph& x, const std::vector<int>& images) {
  if (int(images.size()) != x.size()) return false;
  for (int v : images)
    if (v < 0 || v >= x.size()) return false;
  for (auto [u, v] : x.edges())
    if (!x.adjacent(images[size_t(u)], images[size_t(v)])) return false;
  return true;
}

namespace detail {

template <typename F>
bool endo_rec(const Graph& x, std::vector<int>& img, int v, uint64_t cap,
              uint64_t& nodes, F& f) {
  const int n = x.size();
  if (v == n) return f(img);
  Bitset cand(n);
  for (int u = 0; u < n; ++u) cand.set(u);
  x.neighbors(v).for_each([&](int u) {
    if (u < v) cand &= x.neighbors(img[size_t(u)]);
  });
  bool go_on = true;
  cand.for_each([&](int w) {
    if (!go_on) return;
    if (++nodes > cap) throw cap_exceeded("endomorphism search cap exceeded");
    img[size_t(v)] = w;
    go_on = endo_rec(x, img, v + 1, cap, nodes, f);
  });
  img[size_t(v)] = -1;
  return go_on;
}

}  // namespace detail

// Visits every endomorphism of x in lexicographic order of the image
// sequence. The visitor returns false to stop early. Returns the number of
// endomorphisms visited.
template <typename F>
uint64_t for_each_endomorphism(const Graph& x, uint64_t cap_nodes, F f) {
  uint64_t count = 0;
  auto wrapped = [&](const std::vector<int>& img) {
    ++count;
    return f(img);
  };
  std::vector<int> img(size_t(x.size()), -1);
  uint64_t nodes = 0;
  detail::endo_rec(x, img, 0, cap_nodes, nodes, wrapped);
  return count;
}

inline std::vector<GraphMap> endomorphisms(const Graph& x,
                                           uint64_t cap_nodes = 10'000'000) {
  std::vector<GraphMap> out;
  for_each_endomorphism(x, cap_nodes, [&](const std::vector<int>& img) {
    out.push_back(GraphMap{img});
    return true;
  });
  return out;
}

struct PseudoCoreResult {
  bool pseudo_core = true;
  std::optional<GraphMap> counterexample;
  int omega = 0;
  uint64_t endomorphism_count = 0;
};

// A graph is a pseudo-core when every endomorphism is an automorphism or a
// colouring. "Colouring" is taken as: the image induces a complete subgraph
// of size exactly omega(X).
inline PseudoCoreResult is_pseudo_core(const Graph& x,
                                       uint64_t cap_nodes = 10'000'000) {
  PseudoCoreResult r;
  r.omega = clique_number(x).omega;
  r.endomorphism_count =
      for_each_endomorphism(x, cap_nodes, [&](const std::vector<int>& img) {
        GraphMap m{img};
        if (m.is_bijective()) return true;
        auto im = m.image_set();
        bool colouring = int(im.size()) == r.omega;
        for (size_t i = 0; colouring && i < im.size(); ++i)
          for (size_t j = i + 1; colouring && j < im.size(); ++j)
            if (!x.adjacent(im[i], im[j])) colouring = false;
        if (colouring) return true;
        r.pseudo_core = false;
        r.counterexample = std::move(m);
        return false;
      });
  return r;
}

}  // namespace synckit
