#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "synckit/perm.hpp"
#include "synckit/rng.hpp"

using namespace synckit;

TEST_CASE("compose applies left to right") {
  Permutation p(std::vector<int>{1, 0, 2});
  Permutation q(std::vector<int>{0, 2, 1});
  CHECK(compose(p, q) == Permutation(std::vector<int>{2, 0, 1}));

  Permutation id(3);
  CHECK(compose(id, p) == p);
  CHECK(compose(p, id) == p);
  CHECK(compose(p, p.inverse()) == id);
}

TEST_CASE("inverse by direct table evaluation") {
  CHECK(Permutation(3).inverse() == Permutation(3));
  CHECK(Permutation(std::vector<int>{1, 2, 0}).inverse() ==
        Permutation(std::vector<int>{2, 0, 1}));
}

TEST_CASE("inversion is an involution") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Permutation p = random_permutation(rng, 1 + int(next_below(rng, 12)));
    CHECK(p.inverse().inverse() == p);
    for (int x = 0; x < p.degree(); ++x) CHECK(p.inverse()[p[x]] == x);
  }
}

TEST_CASE("non-bijections are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(compose(Permutation(2), Permutation(3)),
                  std::invalid_argument);
}
