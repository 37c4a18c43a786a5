#pragma once

#include <cassert>
#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace synckit {

// Bijection on {0..n-1}. The action is on the right throughout: the image of
// x under g is g[x], and compose(p, q) maps x to q[p[x]].
class Permutation {
 public:
  explicit Permutation(int degree) : img_(size_t(degree)) {
    for (int i = 0; i < degree; ++i) img_[size_t(i)] = i;
  }

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = int(img_.size());
    std::vector<char> seen(size_t(n), 0);
    for (int v : img_) {
      if (v < 0 || v >= n || seen[size_t(v)])
        throw std::invalid_argument("image list is not a permutation");
      seen[size_t(v)] = 1;
    }
  }

  int degree() const { return int(img_.size()); }

  int operator[](int x) const {
    assert(x >= 0 && x < degree());
    return img_[size_t(x)];
  }

  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (img_[size_t(i)] != i) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < degree(); ++i) inv[size_t(img_[size_t(i)])] = i;
    Permutation r(degree());
    r.img_ = std::move(inv);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// x -> q[p[x]] (apply p first).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> im(size_t(p.degree()));
  for (int x = 0; x < p.degree(); ++x) im[size_t(x)] = q[p[x]];
  return Permutation(std::move(im));
}

inline Permutation inverse(const Permutation& p) { return p.inverse(); }

}  // namespace synckit
