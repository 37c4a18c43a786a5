#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "synckit/perm.hpp"

namespace synckit {

// Total map on {0..n-1}; need not be injective.
class Transformation {
 public:
  explicit Transformation(int degree) : img_(size_t(degree)) {
    for (int i = 0; i < degree; ++i) img_[size_t(i)] = i;
  }

  explicit Transformation(std::vector<int> images) : img_(std::move(images)) {
    const int n = int(img_.size());
    for (int v : img_)
      if (v < 0 || v >= n)
        throw std::invalid_argument("transformation image out of range");
  }

  explicit Transformation(const Permutation& p) : img_(p.images()) {}

  int degree() const { return int(img_.size()); }

  int operator[](int x) const {
    assert(x >= 0 && x < degree());
    return img_[size_t(x)];
  }

  const std::vector<int>& images() const { return img_; }

  bool is_permutation() const {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
      if (seen[size_t(v)]) return false;
      seen[size_t(v)] = 1;
    }
    return true;
  }

  bool is_constant() const {
    for (int v : img_)
      if (v != img_[0]) return false;
    return degree() > 0;
  }

  Permutation to_permutation() const {
    if (!is_permutation())
      throw std::invalid_argument("transformation is not a permutation");
    return Permutation(img_);
  }

  // Sorted distinct image points.
  std::vector<int> image_set() const {
    std::vector<int> im(img_);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  friend bool operator==(const Transformation&, const Transformation&) =
      default;
  friend auto operator<=>(const Transformation&, const Transformation&) =
      default;

 private:
  std::vector<int> img_;
};

// x -> u[t[x]] (apply t first).
inline Transformation compose(const Transformation& t,
                              const Transformation& u) {
  if (t.degree() != u.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(size_t(t.degree()));
  for (int x = 0; x < t.degree(); ++x) im[size_t(x)] = u[t[x]];
  return Transformation(std::move(im));
}

inline Transformation compose(const Permutation& p, const Transformation& t) {
  return compose(Transformation(p), t);
}
inline Transformation compose(const Transformation& t, const Permutation& p) {
  return compose(t, Transformation(p));
}

// Image size.
inline int rank(const Transformation& t) {
  std::vector<char> seen(size_t(t.degree()), 0);
  int r = 0;
  for (int v : t.images()) {
    if (!seen[size_t(v)]) {
      seen[size_t(v)] = 1;
      ++r;
    }
  }
  return r;
}

// Partition of {0..n-1} in canonical form: every block sorted, blocks ordered
// by least element.
class Partition {
 public:
  static Partition of_kernel(const Transformation& t) {
    const int n = t.degree();
    std::map<int, std::vector<int>> fibers;
    for (int x = 0; x < n; ++x) fibers[t[x]].push_back(x);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(fibers.size());
    for (auto& [v, b] : fibers) blocks.push_back(std::move(b));
    return Partition(n, std::move(blocks), /*validated=*/true);
  }

  static Partition from_blocks(int degree,
                               std::vector<std::vector<int>> blocks) {
    std::vector<char> seen(size_t(degree), 0);
    for (auto& b : blocks) {
      if (b.empty()) throw std::invalid_argument("empty block");
      std::sort(b.begin(), b.end());
      for (int x : b) {
        if (x < 0 || x >= degree || seen[size_t(x)])
          throw std::invalid_argument("blocks are not a partition");
        seen[size_t(x)] = 1;
      }
    }
    for (char c : seen)
      if (!c) throw std::invalid_argument("blocks do not cover every point");
    return Partition(degree, std::move(blocks), true);
  }

  int degree() const { return degree_; }
  int block_count() const { return int(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  int block_index_of(int x) const {
    assert(x >= 0 && x < degree_);
    return block_of_[size_t(x)];
  }

  bool is_uniform() const {
    for (const auto& b : blocks_)
      if (b.size() != blocks_[0].size()) return false;
    return true;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.blocks_ <=> b.blocks_;
  }

 private:
  Partition(int degree, std::vector<std::vector<int>> blocks, bool)
      : degree_(degree), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    block_of_.assign(size_t(degree_), -1);
    for (size_t i = 0; i < blocks_.size(); ++i)
      for (int x : blocks_[i]) block_of_[size_t(x)] = int(i);
  }

  int degree_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

inline Partition kernel(const Transformation& t) {
  return Partition::of_kernel(t);
}

inline bool is_uniform(const Partition& p) { return p.is_uniform(); }

// g t g^{-1} under left-to-right composition.
inline Transformation conjugate(const Permutation& g, const Transformation& t) {
  if (g.degree() != t.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  return compose(compose(Transformation(g), t), Transformation(g.inverse()));
}

// Evaluates both sides of the identity
//   g1 a1 g2 a2 ... gk ak g{k+1}
//     = a1^{g1} a2^{g1 g2} ... ak^{g1...gk} (g1 g2 ... g{k+1})
// and reports whether they agree as transformations. Takes k+1 group
// elements and k singular maps.
inline bool conjugation_identity_check(const std::vector<Permutation>& gs,
                                       const std::vector<Transformation>& as) {
  if (gs.size() != as.size() + 1)
    throw std::invalid_argument("need k maps and k+1 permutations");
  const int n = gs[0].degree();
  for (const auto& g : gs)
    if (g.degree() != n) throw std::invalid_argument("degree mismatch");
  for (const auto& a : as)
    if (a.degree() != n) throw std::invalid_argument("degree mismatch");

  Transformation lhs(gs[0]);
  for (size_t i = 0; i < as.size(); ++i)
    lhs = compose(compose(lhs, as[i]), gs[i + 1]);

  Permutation prefix(n);
  Transformation rhs(n);
  for (size_t i = 0; i < as.size(); ++i) {
    prefix = compose(prefix, gs[i]);
    rhs = compose(rhs, conjugate(prefix, as[i]));
  }
  Permutation all(n);
  for (const auto& g : gs) all = compose(all, g);
  rhs = compose(rhs, Transformation(all));

  return lhs == rhs;
}

}  // namespace synckit
