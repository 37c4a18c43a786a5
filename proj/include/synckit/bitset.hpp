#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace synckit {

// Dynamic fixed-width bitset over 64-bit words; used for point and vertex
// sets. Width is fixed at construction.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(word_count(n), 0) {}

  int width() const { return n_; }

  bool test(int i) const {
    assert(in_range(i));
    return (w_[size_t(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(in_range(i));
    w_[size_t(i) >> 6] |= uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(in_range(i));
    w_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63));
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& subtract(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  Bitset complemented() const {
    Bitset r(*this);
    for (auto& w : r.w_) w = ~w;
    r.mask_tail();
    return r;
  }

  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  // First set bit, or -1.
  int first() const {
    for (size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k * 64) + std::countr_zero(w_[k]);
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t k = 0; k < w_.size(); ++k) {
      uint64_t w = w_[k];
      while (w) {
        f(int(k * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_points() const {
    std::vector<int> v;
    v.reserve(size_t(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  static size_t word_count(int n) { return size_t(n + 63) / 64; }
  bool in_range(int i) const { return i >= 0 && i < n_; }
  void mask_tail() {
    if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace synckit
