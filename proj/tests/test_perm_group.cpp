#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "synckit/catalog.hpp"
#include "synckit/perm_group.hpp"

using namespace synckit;

namespace {

PermGroup cyclic4() {
  return PermGroup(4, {Permutation(std::vector<int>{1, 2, 3, 0})});
}

PermGroup symmetric(int n) {
  std::vector<int> cyc(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) cyc[size_t(i)] = (i + 1) % n;
  std::vector<int> swp(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) swp[size_t(i)] = i;
  std::swap(swp[0], swp[1]);
  return PermGroup(n, {Permutation(cyc), Permutation(swp)});
}

}  // namespace

TEST_CASE("orbits") {
  PermGroup g(3, {Permutation(std::vector<int>{1, 0, 2})});
  CHECK(g.orbit(2) == std::vector<int>{2});
  CHECK(g.orbit(0) == std::vector<int>{0, 1});
  CHECK_FALSE(g.is_transitive());
  CHECK_THROWS_AS(g.orbit(5), std::invalid_argument);

  auto grid = grid_group(true);
  CHECK(grid.group->orbit(0).size() == 9);
  CHECK(grid.group->is_transitive());

  PermGroup trivial(1, {Permutation(1)});
  CHECK(trivial.is_transitive());
}

TEST_CASE("pair orbits partition all 2-subsets") {
  auto s6 = s_m_on_2sets(6);
  CHECK(s6.group->pair_orbit_count() == 2);

  auto s5nat = symmetric(5);
  CHECK(s5nat.pair_orbit_count() == 1);

  auto grid = grid_group(true);
  const PermGroup& g = *grid.group;
  CHECK(g.pair_orbit_count() == 2);

  // Disjoint, covering, and closed under every generator.
  std::set<std::pair<int, int>> all;
  for (const auto& orbit : g.pair_orbits())
    for (auto pr : orbit) CHECK(all.insert(pr).second);
  CHECK(int(all.size()) == g.pair_count());
  for (const auto& orbit : g.pair_orbits()) {
    std::set<std::pair<int, int>> members(orbit.begin(), orbit.end());
    for (auto [x, y] : orbit)
      for (const auto& p : g.generators()) {
        int a = p[x], b = p[y];
        if (a > b) std::swap(a, b);
        CHECK(members.contains({a, b}));
      }
  }
}

TEST_CASE("primitivity by the minimal-block method") {
  auto c4 = cyclic4();
  CHECK(c4.is_transitive());
  auto blocks = c4.nontrivial_block_system();
  REQUIRE(blocks.has_value());
  CHECK(blocks->blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK_FALSE(c4.is_primitive());

  // The witness is generator-invariant and nontrivial.
  for (const auto& g : c4.generators())
    for (const auto& block : blocks->blocks) {
      std::vector<int> image;
      for (int x : block) image.push_back(g[x]);
      std::sort(image.begin(), image.end());
      bool found = false;
      for (const auto& other : blocks->blocks)
        if (other == image) found = true;
      CHECK(found);
    }

  CHECK(grid_group(true).group->is_primitive());
  CHECK(grid_group(false).group->is_primitive());
  CHECK(s_m_on_2sets(6).group->is_primitive());

  PermGroup intrans(3, {Permutation(std::vector<int>{1, 0, 2})});
  CHECK_THROWS_AS(intrans.is_primitive(), std::invalid_argument);
}

TEST_CASE("order via the stabilizer chain matches brute-force closure") {
  struct Case {
    PermGroup group;
    uint64_t expect;
  };
  std::vector<Case> cases;
  cases.push_back({cyclic4(), 4});
  cases.push_back({symmetric(4), 24});
  cases.push_back({symmetric(6), 720});
  cases.push_back({*grid_group(true).group, 72});
  cases.push_back({*grid_group(false).group, 36});
  cases.push_back({*s_m_on_2sets(6).group, 720});
  cases.push_back({*affine_half_group(3).group, 36});
  cases.push_back({*flags_group().group, 336});
  for (const auto& c : cases) {
    CHECK(c.group.order() == c.expect);
    CHECK(oracles::group_closure(c.group.generators()).size() == c.expect);
  }
}

TEST_CASE("element enumeration is complete, duplicate-free, and capped") {
  const PermGroup g = *grid_group(true).group;
  auto elems = g.elements();
  CHECK(elems.size() == 72);
  std::set<Permutation> uniq(elems.begin(), elems.end());
  CHECK(uniq.size() == 72);
  for (const auto& e : elems) CHECK(g.contains(e));
  CHECK_THROWS_AS(g.elements(10), cap_exceeded);

  // Deterministic order.
  CHECK(g.elements() == g.elements());
}

TEST_CASE("membership") {
  const PermGroup g = *grid_group(false).group;
  const PermGroup full = *grid_group(true).group;
  int inside = 0;
  for (const auto& e : full.elements()) {
    CHECK(full.contains(e));
    if (g.contains(e)) ++inside;
  }
  CHECK(inside == 36);
}

TEST_CASE("generator hygiene") {
  // x g g^{-1} = x for every generator and point.
  for (const auto& name : {"grid", "flags-q2", "w2"}) {
    auto entry = catalog_entry(name);
    REQUIRE(entry.has_value());
    const PermGroup& g = *entry->group;
    for (const auto& p : g.generators())
      for (int x = 0; x < g.degree(); ++x) CHECK(p.inverse()[p[x]] == x);
  }
  CHECK_THROWS_AS(PermGroup(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(PermGroup(3, {Permutation(2)}), std::invalid_argument);
  // All-identity generators leave the trivial group.
  PermGroup trivial(4, {Permutation(4), Permutation(4)});
  CHECK(trivial.order() == 1);
  CHECK(trivial.generators().size() == 1);
}
