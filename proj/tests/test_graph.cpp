#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "synckit/catalog.hpp"
#include "synckit/graph.hpp"
#include "synckit/rng.hpp"

using namespace synckit;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int density_pct) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (int(next_below(rng, 100)) < density_pct) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("basic graph operations") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(0) == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);

  CHECK(Graph::complete(5).edge_count() == 10);
  CHECK(Graph(3).is_null());
}

TEST_CASE("complement, union, induced") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(rng, 2 + int(next_below(rng, 9)), 40);
    CHECK(complement(complement(g)) == g);
    CHECK(graph_union(g, complement(g)) == Graph::complete(g.size()));
  }
  CHECK_THROWS_AS(graph_union(Graph(3), Graph(4)), std::invalid_argument);

  // Complement of L(K_6): 15 vertices of degree 6.
  Graph c = complement(line_graph_complete(6));
  CHECK(c.size() == 15);
  CHECK(c.edge_count() == 45);
  for (int v = 0; v < 15; ++v) CHECK(c.degree(v) == 6);

  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  Graph sub = induced(path, {0, 1});
  CHECK(sub.size() == 2);
  CHECK(sub.adjacent(0, 1));
  CHECK(induced(path, {0, 2}).is_null());
}

TEST_CASE("invariance under a group") {
  auto grid = grid_group(true);
  const PermGroup& g = *grid.group;

  // Every orbital graph is invariant by construction.
  for (uint32_t mask = 1; mask < 3u; ++mask)
    CHECK(is_invariant(invariant_graph_for_mask(g, mask), g));

  // The rook's graph is the first orbital union here.
  CHECK(is_invariant(grid.graphs[0].second, g));

  // A single edge is not invariant under a transitive group on > 2 points.
  Graph one(9);
  one.add_edge(0, 1);
  CHECK_FALSE(is_invariant(one, g));

  CHECK_THROWS_AS(is_invariant(Graph(4), g), std::invalid_argument);
}
