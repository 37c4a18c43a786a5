#pragma once

#include <cassert>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "synckit/perm.hpp"
#include "synckit/transform.hpp"

namespace synckit {

// Unbiased draw from {0..bound-1} by rejection; mt19937_64 is fully
// specified, so seeded runs are reproducible across platforms (which
// std::uniform_int_distribution does not guarantee).
inline uint64_t next_below(std::mt19937_64& rng, uint64_t bound) {
  assert(bound > 0);
  const uint64_t limit = (~uint64_t(0) / bound) * bound;
  for (;;) {
    uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[size_t(i)] = i;
  for (int i = n - 1; i > 0; --i)
    std::swap(img[size_t(i)], img[next_below(rng, uint64_t(i) + 1)]);
  return Permutation(std::move(img));
}

inline Transformation random_transformation(std::mt19937_64& rng, int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) img[size_t(i)] = int(next_below(rng, uint64_t(n)));
  return Transformation(std::move(img));
}

// Rejection sampling on kernels: redraws until the kernel is non-uniform.
// Requires n >= 3 (every kernel on fewer points is uniform).
inline Transformation random_nonuniform_transformation(std::mt19937_64& rng,
                                                       int n,
                                                       int* rejections = nullptr) {
  if (n < 3)
    throw std::invalid_argument("no non-uniform kernels exist below degree 3");
  for (;;) {
    Transformation t = random_transformation(rng, n);
    if (!kernel(t).is_uniform()) return t;
    if (rejections) ++*rejections;
  }
}

}  // namespace synckit
