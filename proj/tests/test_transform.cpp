#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "synckit/rng.hpp"
#include "synckit/transform.hpp"

using namespace synckit;

TEST_CASE("kernel fibers in canonical form") {
  CHECK(kernel(Transformation(4)) ==
        Partition::from_blocks(4, {{0}, {1}, {2}, {3}}));
  CHECK(kernel(Transformation(std::vector<int>{2, 2, 2, 2})) ==
        Partition::from_blocks(4, {{0, 1, 2, 3}}));
  CHECK(kernel(Transformation(std::vector<int>{0, 0, 1, 2})) ==
        Partition::from_blocks(4, {{0, 1}, {2}, {3}}));
}

TEST_CASE("rank is the image size") {
  CHECK(rank(Transformation(5)) == 5);
  CHECK(rank(Transformation(std::vector<int>{3, 3, 3, 3})) == 1);
  CHECK(rank(Transformation(std::vector<int>{0, 0, 1, 2})) == 3);
}

TEST_CASE("uniformity of partitions") {
  CHECK(is_uniform(kernel(Transformation(4))));
  CHECK_FALSE(is_uniform(Partition::from_blocks(4, {{0, 1}, {2}, {3}})));
  CHECK(is_uniform(
      Partition::from_blocks(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})));
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {}}),
                  std::invalid_argument);
  // Canonical form: blocks sorted by least element.
  auto p = Partition::from_blocks(4, {{3, 2}, {1, 0}});
  CHECK(p.blocks() == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(p.block_index_of(3) == 1);
}

TEST_CASE("conjugation") {
  std::mt19937_64 rng(11);
  Transformation t = random_transformation(rng, 6);
  CHECK(conjugate(Permutation(6), t) == t);

  Permutation g = random_permutation(rng, 6);
  CHECK(conjugate(g, Transformation(6)) == Transformation(6));

  for (int i = 0; i < 100; ++i) {
    Permutation h = random_permutation(rng, 9);
    Transformation u = random_transformation(rng, 9);
    CHECK(rank(conjugate(h, u)) == rank(u));
  }
  CHECK_THROWS_AS(conjugate(Permutation(3), Transformation(4)),
                  std::invalid_argument);
}

TEST_CASE("conjugation identity") {
  std::mt19937_64 rng(13);
  // k = 0: the product of group elements equals itself.
  CHECK(conjugation_identity_check({random_permutation(rng, 9)}, {}));
  for (int k : {1, 2, 3}) {
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<Permutation> gs;
      std::vector<Transformation> as;
      for (int i = 0; i <= k; ++i) gs.push_back(random_permutation(rng, 9));
      for (int i = 0; i < k; ++i) as.push_back(random_transformation(rng, 9));
      CHECK(conjugation_identity_check(gs, as));
    }
  }
  CHECK_THROWS_AS(conjugation_identity_check({}, {}), std::invalid_argument);
}

TEST_CASE("rank is submultiplicative and kernels only merge") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    Transformation u = random_transformation(rng, 8);
    Transformation v = random_transformation(rng, 8);
    CHECK(rank(compose(u, v)) <= std::min(rank(u), rank(v)));

    // kernel(u) refines kernel(u v): same u-image implies same uv-image.
    auto uv = compose(u, v);
    Partition ku = kernel(u);
    for (const auto& block : ku.blocks())
      for (int x : block) CHECK(uv[x] == uv[block[0]]);
  }
}
