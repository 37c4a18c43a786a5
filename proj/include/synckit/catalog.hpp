#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "synckit/clique.hpp"
#include "synckit/dfa.hpp"
#include "synckit/exact_cover.hpp"
#include "synckit/gf.hpp"
#include "synckit/graph.hpp"
#include "synckit/perm_group.hpp"
#include "synckit/sync.hpp"

namespace synckit {

// Expected facts are verified by the test suite from the raw constructions;
// library code never assumes them.
struct CatalogFacts {
  int degree = -1;
  long long order = -1;
  int pair_orbit_count = -1;
  std::optional<bool> primitive;
  std::optional<bool> synchronizing;
  std::optional<int> nonsync_partitions;
  std::optional<int> m_g;
  std::optional<Fraction> big_m_bound;  // upper bound on M(G)
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::optional<PermGroup> group;
  std::vector<std::pair<std::string, Graph>> graphs;
  std::optional<Dfa> dfa;
  CatalogFacts facts;
  std::map<std::string, std::string> notes;
};

// ---------------------------------------------------------------------------
// 3x3 grid: automorphism group of the grid (S3 wr S2 in product action) and
// its index-2 subgroup, the kernel of sign(rows) sign(cols) sign(swap).

namespace detail {

inline Permutation grid_perm(int (*cell)(int, int)) {
  std::vector<int> img(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) img[size_t(3 * r + c)] = cell(r, c);
  return Permutation(std::move(img));
}

}  // namespace detail

inline CatalogEntry grid_group(bool full) {
  using detail::grid_perm;
  Permutation row_cycle =
      grid_perm([](int r, int c) { return 3 * ((r + 1) % 3) + c; });
  Permutation row_swap = grid_perm(
      [](int r, int c) { return 3 * (r == 0 ? 1 : r == 1 ? 0 : 2) + c; });
  Permutation col_cycle =
      grid_perm([](int r, int c) { return 3 * r + (c + 1) % 3; });
  Permutation col_swap = grid_perm(
      [](int r, int c) { return 3 * r + (c == 0 ? 1 : c == 1 ? 0 : 2); });
  Permutation transpose = grid_perm([](int r, int c) { return 3 * c + r; });

  CatalogEntry e;
  e.name = full ? "grid" : "grid-index2";
  e.description = full ? "automorphism group of the 3x3 grid"
                       : "index-2 subgroup of the 3x3 grid group";
  std::vector<Permutation> gens;
  if (full) {
    gens = {row_cycle, row_swap, col_cycle, col_swap, transpose};
  } else {
    gens = {row_cycle, col_cycle, compose(row_swap, col_swap),
            compose(row_swap, transpose)};
  }
  e.group.emplace(9, std::move(gens));

  Graph rook(9);
  for (int u = 0; u < 9; ++u)
    for (int v = u + 1; v < 9; ++v)
      if (u / 3 == v / 3 || u % 3 == v % 3) rook.add_edge(u, v);
  e.graphs.emplace_back("rook", rook);
  e.graphs.emplace_back("rook-complement", complement(rook));

  e.facts.degree = 9;
  e.facts.order = full ? 72 : 36;
  e.facts.pair_orbit_count = 2;
  e.facts.primitive = true;
  e.facts.synchronizing = false;
  e.facts.nonsync_partitions = 4;
  e.facts.m_g = 2;
  e.facts.big_m_bound = Fraction::of(0, 1);
  if (!full)
    e.notes["subgroup"] =
        "kernel of sign(row perm) * sign(col perm) * sign(swap)";
  return e;
}

// ---------------------------------------------------------------------------
// S_m acting on 2-subsets; the invariant graphs are the line graph of K_m
// and its complement.

inline std::vector<std::pair<int, int>> two_subsets(int m) {
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) subsets.emplace_back(i, j);
  return subsets;
}

inline Graph line_graph_complete(int m) {
  auto subsets = two_subsets(m);
  const int n = int(subsets.size());
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto [i, j] = subsets[size_t(a)];
      auto [k, l] = subsets[size_t(b)];
      if (i == k || i == l || j == k || j == l) g.add_edge(a, b);
    }
  return g;
}

inline CatalogEntry s_m_on_2sets(int m) {
  if (m < 5) throw std::invalid_argument("s_m_on_2sets: m >= 5 required");
  auto subsets = two_subsets(m);
  const int n = int(subsets.size());
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < n; ++a) index[subsets[size_t(a)]] = a;

  auto induced_perm = [&](auto point_map) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
      auto [i, j] = subsets[size_t(a)];
      int x = point_map(i), y = point_map(j);
      if (x > y) std::swap(x, y);
      img[size_t(a)] = index.at({x, y});
    }
    return Permutation(std::move(img));
  };
  Permutation swap01 =
      induced_perm([](int i) { return i == 0 ? 1 : i == 1 ? 0 : i; });
  Permutation cycle = induced_perm([m](int i) { return (i + 1) % m; });

  CatalogEntry e;
  e.name = "s" + std::to_string(m) + "-on-2sets";
  e.description = "symmetric group S_" + std::to_string(m) + " on 2-subsets";
  e.group.emplace(n, std::vector<Permutation>{swap01, cycle});
  e.graphs.emplace_back("lk" + std::to_string(m), line_graph_complete(m));
  e.graphs.emplace_back("lk" + std::to_string(m) + "-complement",
                        complement(line_graph_complete(m)));
  e.facts.degree = n;
  long long order = 1;
  for (int i = 2; i <= m; ++i) order *= i;
  e.facts.order = order;
  e.facts.pair_orbit_count = 2;
  e.facts.primitive = true;
  e.facts.synchronizing = m % 2 == 1;
  return e;
}

// ---------------------------------------------------------------------------
// Flags of PG(2,2) under the linear group extended by the duality. Points
// and lines are the nonzero vectors/functionals of GF(2)^3 as bitmasks 1..7;
// incidence is zero dot product.

struct FlagsData {
  std::vector<std::pair<int, int>> flags;  // (point mask, line mask), lex
  PermGroup group;
  PermGroup linear_group;
  Permutation duality;
  Permutation singer;             // Singer cycle acting on flags
  std::vector<int> singer_orbit;  // one flag orbit of the Singer cycle
  Graph o1, o2, o3;               // share point/line; incident pair; opposite

  FlagsData(std::vector<std::pair<int, int>> f, PermGroup g, PermGroup lin,
            Permutation d, Permutation s, std::vector<int> orbit, Graph a,
            Graph b, Graph c)
      : flags(std::move(f)),
        group(std::move(g)),
        linear_group(std::move(lin)),
        duality(std::move(d)),
        singer(std::move(s)),
        singer_orbit(std::move(orbit)),
        o1(std::move(a)),
        o2(std::move(b)),
        o3(std::move(c)) {}
};

namespace detail {

inline int dot2(int v, int w) { return std::popcount(unsigned(v & w)) & 1; }

// v * A over GF(2), rows[i] = image of e_i.
inline int apply_mat2(const std::array<int, 3>& rows, int v) {
  int out = 0;
  for (int i = 0; i < 3; ++i)
    if (v & (1 << i)) out ^= rows[size_t(i)];
  return out;
}

inline std::array<int, 3> invert_mat2(const std::array<int, 3>& rows) {
  // Gaussian elimination on a 3x3 GF(2) matrix paired with the identity.
  std::array<int, 3> a = rows, inv = {1, 2, 4};
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = col; r < 3; ++r)
      if (a[size_t(r)] & (1 << col)) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular matrix");
    std::swap(a[size_t(col)], a[size_t(piv)]);
    std::swap(inv[size_t(col)], inv[size_t(piv)]);
    for (int r = 0; r < 3; ++r)
      if (r != col && (a[size_t(r)] & (1 << col))) {
        a[size_t(r)] ^= a[size_t(col)];
        inv[size_t(r)] ^= inv[size_t(col)];
      }
  }
  return inv;
}

inline std::array<int, 3> transpose_mat2(const std::array<int, 3>& rows) {
  std::array<int, 3> t = {0, 0, 0};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (rows[size_t(i)] & (1 << j)) t[size_t(j)] |= 1 << i;
  return t;
}

}  // namespace detail

inline FlagsData flags_data() {
  using namespace detail;
  std::vector<std::pair<int, int>> flags;
  for (int v = 1; v <= 7; ++v)
    for (int w = 1; w <= 7; ++w)
      if (dot2(v, w) == 0) flags.emplace_back(v, w);
  const int n = int(flags.size());
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < n; ++i) index[flags[size_t(i)]] = i;

  auto linear_on_flags = [&](const std::array<int, 3>& a) {
    std::array<int, 3> dual = transpose_mat2(invert_mat2(a));
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      auto [v, w] = flags[size_t(i)];
      img[size_t(i)] = index.at({apply_mat2(a, v), apply_mat2(dual, w)});
    }
    return Permutation(std::move(img));
  };

  // Companion matrix of x^3 + x + 1 (a Singer cycle) and a transvection
  // generate GL(3,2).
  std::array<int, 3> singer_mat = {2, 4, 3};  // e1->e2, e2->e3, e3->e1+e2
  std::array<int, 3> transvection = {3, 2, 4};  // e1->e1+e2
  Permutation singer = linear_on_flags(singer_mat);
  Permutation trans = linear_on_flags(transvection);

  std::vector<int> dual_img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto [v, w] = flags[size_t(i)];
    dual_img[size_t(i)] = index.at({w, v});
  }
  Permutation duality(std::move(dual_img));

  PermGroup linear(n, {singer, trans});
  PermGroup group(n, {singer, trans, duality});

  std::vector<int> orbit;
  int f = 0;
  for (int k = 0; k < 7; ++k) {
    orbit.push_back(f);
    f = singer[f];
  }
  std::sort(orbit.begin(), orbit.end());

  Graph o1(n), o2(n), o3(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto [p, l] = flags[size_t(i)];
      auto [p2, l2] = flags[size_t(j)];
      if (p == p2 || l == l2)
        o1.add_edge(i, j);
      else if (dot2(p, l2) == 0 || dot2(p2, l) == 0)
        o2.add_edge(i, j);
      else
        o3.add_edge(i, j);
    }

  return FlagsData(std::move(flags), std::move(group), std::move(linear),
                   std::move(duality), std::move(singer), std::move(orbit),
                   std::move(o1), std::move(o2), std::move(o3));
}

inline CatalogEntry flags_group() {
  FlagsData d = flags_data();
  CatalogEntry e;
  e.name = "flags-q2";
  e.description = "flags of PG(2,2) under the linear group with duality";
  e.group = d.group;
  e.graphs.emplace_back("flags-o1", d.o1);
  e.graphs.emplace_back("flags-o2", d.o2);
  e.graphs.emplace_back("flags-o3", d.o3);
  e.facts.degree = 21;
  e.facts.order = 336;
  e.facts.pair_orbit_count = 3;
  e.facts.primitive = true;
  e.facts.synchronizing = false;
  e.facts.nonsync_partitions = 2;
  e.facts.m_g = 2;
  e.facts.big_m_bound = Fraction::of(0, 1);
  return e;
}

// ---------------------------------------------------------------------------
// Affine half-multiplicative groups: the additive group of GF(p^2) extended
// by the index-2 subgroup of the multiplicative group. The two invariant
// graphs join points whose difference lies in one of the two classes of
// (p+1)/2 directions.

struct AffineData {
  int p;
  Gf field;
  PermGroup group;
  std::vector<int> direction_of;            // by nonzero field element
  std::vector<std::vector<int>> classes;    // two direction classes
  std::vector<std::vector<int>> lines;      // affine lines, sorted point sets
  Graph class_graph0, class_graph1;

  AffineData(int pp, Gf f, PermGroup g, std::vector<int> dir,
             std::vector<std::vector<int>> cls,
             std::vector<std::vector<int>> ln, Graph g0, Graph g1)
      : p(pp),
        field(std::move(f)),
        group(std::move(g)),
        direction_of(std::move(dir)),
        classes(std::move(cls)),
        lines(std::move(ln)),
        class_graph0(std::move(g0)),
        class_graph1(std::move(g1)) {}
};

inline AffineData affine_data(int p) {
  if (p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("affine_data: p in {3,5,7}");
  Gf f = Gf::quadratic_field(p);
  const int n = f.size();

  auto translation = [&](int c) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x) img[size_t(x)] = f.add(x, c);
    return Permutation(std::move(img));
  };
  int g = f.primitive_element();
  int m = f.mul(g, g);
  std::vector<int> mul_img(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) mul_img[size_t(x)] = f.mul(x, m);
  Permutation mult(std::move(mul_img));
  PermGroup group(n, {translation(1), translation(p), mult});

  // Direction of v: the least element of v GF(p)^*.
  std::vector<int> dir(size_t(n), -1);
  std::vector<int> reps;
  for (int v = 1; v < n; ++v) {
    int least = v;
    for (int c = 1; c < p; ++c) least = std::min(least, f.mul(c, v));
    dir[size_t(v)] = least;
    if (least == v) reps.push_back(v);
  }

  // Direction classes: orbits of multiplication by m on the reps.
  std::map<int, int> class_of;
  std::vector<std::vector<int>> classes;
  for (int rep : reps) {
    if (class_of.contains(rep)) continue;
    std::vector<int> cls;
    int v = rep;
    while (!class_of.contains(dir[size_t(v)])) {
      class_of[dir[size_t(v)]] = int(classes.size());
      cls.push_back(dir[size_t(v)]);
      v = f.mul(v, m);
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }

  std::vector<std::vector<int>> lines;
  std::set<std::vector<int>> seen;
  for (int rep : reps)
    for (int a = 0; a < n; ++a) {
      std::vector<int> line;
      for (int c = 0; c < p; ++c) line.push_back(f.add(a, f.mul(c, rep)));
      std::sort(line.begin(), line.end());
      if (seen.insert(line).second) lines.push_back(line);
    }
  std::sort(lines.begin(), lines.end());

  Graph g0(n), g1(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      int d = dir[size_t(f.sub(x, y))];
      if (class_of.at(d) == 0)
        g0.add_edge(x, y);
      else
        g1.add_edge(x, y);
    }

  return AffineData(p, std::move(f), std::move(group), std::move(dir),
                    std::move(classes), std::move(lines), std::move(g0),
                    std::move(g1));
}

inline CatalogEntry affine_half_group(int p) {
  AffineData d = affine_data(p);
  CatalogEntry e;
  e.name = "affine-p" + std::to_string(p);
  e.description = "GF(p^2) additive group by the index-2 multiplicative "
                  "subgroup, p = " + std::to_string(p);
  e.group = d.group;
  e.graphs.emplace_back("direction-class-0", d.class_graph0);
  e.graphs.emplace_back("direction-class-1", d.class_graph1);
  e.facts.degree = p * p;
  e.facts.order = (long long)(p) * p * (p * p - 1) / 2;
  e.facts.pair_orbit_count = 2;
  e.facts.primitive = true;
  e.facts.synchronizing = false;
  e.facts.nonsync_partitions = p + 1;
  e.notes["quadratic"] =
      "x^2 - " + std::to_string(d.field.nonresidue()) + " over GF(" +
      std::to_string(p) + ")";
  return e;
}

// Every p-subset of the affine plane that is not a line determines at least
// (p+3)/2 directions; checked exhaustively.
struct RedeiReport {
  int p = 0;
  int threshold = 0;
  long long sets_checked = 0;
  long long line_sets = 0;
  int min_directions_nonline = 0;
  bool ok = false;
};

inline RedeiReport redei_check(const AffineData& d) {
  RedeiReport rep;
  rep.p = d.p;
  rep.threshold = (d.p + 3) / 2;
  const int n = d.field.size();
  std::set<std::vector<int>> line_set(d.lines.begin(), d.lines.end());
  rep.min_directions_nonline = d.p + 2;

  std::vector<int> pick;
  std::set<int> dirs;
  auto rec = [&](auto&& self, int next) -> void {
    if (int(pick.size()) == d.p) {
      ++rep.sets_checked;
      if (line_set.contains(pick)) {
        ++rep.line_sets;
        return;
      }
      dirs.clear();
      for (size_t i = 0; i < pick.size(); ++i)
        for (size_t j = i + 1; j < pick.size(); ++j)
          dirs.insert(d.direction_of[size_t(
              d.field.sub(pick[i], pick[j]))]);
      rep.min_directions_nonline =
          std::min(rep.min_directions_nonline, int(dirs.size()));
      return;
    }
    for (int v = next; v < n; ++v) {
      if (n - v < d.p - int(pick.size())) break;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  rep.ok = rep.min_directions_nonline >= rep.threshold;
  return rep;
}

// ---------------------------------------------------------------------------
// The symplectic generalized quadrangle W(2): 15 points, 15 totally
// isotropic lines, group generated by the symplectic transvections.

struct W2Data {
  PermGroup group;
  std::vector<std::vector<int>> lines;  // sorted triples of point ids 0..14
  Graph collinearity;

  W2Data(PermGroup g, std::vector<std::vector<int>> ln, Graph col)
      : group(std::move(g)), lines(std::move(ln)), collinearity(std::move(col)) {}
};

namespace detail {

// Alternating form on GF(2)^4 in the standard hyperbolic basis.
inline int symp_form(int x, int y) {
  auto bit = [](int v, int i) { return (v >> i) & 1; };
  return (bit(x, 0) & bit(y, 1)) ^ (bit(x, 1) & bit(y, 0)) ^
         (bit(x, 2) & bit(y, 3)) ^ (bit(x, 3) & bit(y, 2));
}

}  // namespace detail

inline W2Data w2_data() {
  using detail::symp_form;
  const int n = 15;  // point id = mask - 1
  std::vector<Permutation> transvections;
  for (int v = 1; v <= 15; ++v) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int x = 1; x <= 15; ++x) {
      int y = symp_form(x, v) ? (x ^ v) : x;
      img[size_t(x - 1)] = y - 1;
    }
    transvections.push_back(Permutation(std::move(img)));
  }
  PermGroup group(n, std::move(transvections));

  std::set<std::vector<int>> lineset;
  for (int u = 1; u <= 15; ++u)
    for (int v = u + 1; v <= 15; ++v)
      if (symp_form(u, v) == 0) {
        std::vector<int> line{u - 1, v - 1, (u ^ v) - 1};
        std::sort(line.begin(), line.end());
        lineset.insert(line);
      }
  std::vector<std::vector<int>> lines(lineset.begin(), lineset.end());

  Graph col(n);
  for (int u = 1; u <= 15; ++u)
    for (int v = u + 1; v <= 15; ++v)
      if (symp_form(u, v) == 0) col.add_edge(u - 1, v - 1);

  return W2Data(std::move(group), std::move(lines), std::move(col));
}

struct W2Analysis {
  std::vector<std::vector<int>> ovoids;   // 5-point sets, sorted
  std::vector<std::vector<int>> spreads;  // 5-line-id sets, sorted
  int max_ovoid_intersection = 0;
  bool ovoid_intersections_all_odd = true;
  bool ovoid_partition_exists = false;
  int max_spread_common_lines = 0;
};

inline W2Analysis analyze_w2(const W2Data& d) {
  W2Analysis a;
  // Ovoids: independent 5-sets of the collinearity graph; every such set
  // meets every line exactly once (re-checked below).
  a.ovoids = cliques_of_size(complement(d.collinearity), 5);
  for (const auto& o : a.ovoids)
    for (const auto& line : d.lines) {
      int hits = 0;
      for (int x : line)
        if (std::find(o.begin(), o.end(), x) != o.end()) ++hits;
      if (hits != 1) throw std::logic_error("ovoid misses a line");
    }
  for (size_t i = 0; i < a.ovoids.size(); ++i)
    for (size_t j = i + 1; j < a.ovoids.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(a.ovoids[i].begin(), a.ovoids[i].end(),
                            a.ovoids[j].begin(), a.ovoids[j].end(),
                            std::back_inserter(inter));
      a.max_ovoid_intersection =
          std::max(a.max_ovoid_intersection, int(inter.size()));
      if (inter.size() % 2 == 0) a.ovoid_intersections_all_odd = false;
    }

  // Spreads: exact covers of the point set by lines.
  ExactCover cover(15);
  for (size_t i = 0; i < d.lines.size(); ++i)
    cover.add_option(d.lines[i], int(i));
  cover.solve([&](const std::vector<int>& tags) {
    a.spreads.push_back(tags);
    return true;
  });
  for (size_t i = 0; i < a.spreads.size(); ++i)
    for (size_t j = i + 1; j < a.spreads.size(); ++j) {
      std::vector<int> inter;
      std::set_intersection(a.spreads[i].begin(), a.spreads[i].end(),
                            a.spreads[j].begin(), a.spreads[j].end(),
                            std::back_inserter(inter));
      a.max_spread_common_lines =
          std::max(a.max_spread_common_lines, int(inter.size()));
    }

  // A partition into ovoids would be an exact cover by ovoids.
  if (!a.ovoids.empty()) {
    ExactCover ocover(15);
    for (size_t i = 0; i < a.ovoids.size(); ++i)
      ocover.add_option(a.ovoids[i], int(i));
    a.ovoid_partition_exists = ocover.solution_count() > 0;
  }
  return a;
}

inline CatalogEntry symplectic_w2() {
  W2Data d = w2_data();
  CatalogEntry e;
  e.name = "w2";
  e.description =
      "symplectic generalized quadrangle W(2) under Sp(4,2) transvections";
  e.group = d.group;
  e.graphs.emplace_back("collinearity", d.collinearity);
  e.graphs.emplace_back("collinearity-complement", complement(d.collinearity));
  e.facts.degree = 15;
  e.facts.order = 720;
  e.facts.pair_orbit_count = 2;
  e.facts.primitive = true;
  e.facts.synchronizing = false;
  e.facts.m_g = 2;
  e.facts.big_m_bound = Fraction::of(1, 5);
  e.notes["line-size"] = "q + 1 = 3 as forced by the geometry";
  return e;
}

// ---------------------------------------------------------------------------
// Lines of PG(3,2) under GL(4,2): construction and clique analysis only.

struct PgLinesData {
  PermGroup group;
  std::vector<std::vector<int>> lines;  // triples of point masks 1..15
  Graph concurrence;

  PgLinesData(PermGroup g, std::vector<std::vector<int>> ln, Graph con)
      : group(std::move(g)), lines(std::move(ln)), concurrence(std::move(con)) {}
};

namespace detail {

inline int apply_mat4(const std::array<int, 4>& rows, int v) {
  int out = 0;
  for (int i = 0; i < 4; ++i)
    if (v & (1 << i)) out ^= rows[size_t(i)];
  return out;
}

}  // namespace detail

inline PgLinesData pg32_lines_data() {
  using detail::apply_mat4;
  std::set<std::vector<int>> lineset;
  for (int u = 1; u <= 15; ++u)
    for (int v = u + 1; v <= 15; ++v) {
      std::vector<int> line{u, v, u ^ v};
      std::sort(line.begin(), line.end());
      lineset.insert(line);
    }
  std::vector<std::vector<int>> lines(lineset.begin(), lineset.end());
  const int n = int(lines.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[lines[size_t(i)]] = i;

  auto line_perm = [&](const std::array<int, 4>& rows) {
    std::vector<int> img(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      std::vector<int> image;
      for (int v : lines[size_t(i)]) image.push_back(apply_mat4(rows, v));
      std::sort(image.begin(), image.end());
      img[size_t(i)] = index.at(image);
    }
    return Permutation(std::move(img));
  };

  // Companion matrix of x^4 + x + 1 and a transvection generate GL(4,2).
  std::array<int, 4> companion = {2, 4, 8, 3};
  std::array<int, 4> transvection = {3, 2, 4, 8};
  PermGroup group(n, {line_perm(companion), line_perm(transvection)});

  Graph con(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> inter;
      std::set_intersection(lines[size_t(a)].begin(), lines[size_t(a)].end(),
                            lines[size_t(b)].begin(), lines[size_t(b)].end(),
                            std::back_inserter(inter));
      if (!inter.empty()) con.add_edge(a, b);
    }
  return PgLinesData(std::move(group), std::move(lines), std::move(con));
}

struct PgLinesCliqueReport {
  int omega = 0;
  int maximum_clique_count = 0;
  int point_stars = 0;
  int plane_families = 0;
  int other = 0;
  int lines_through_a_point = 0;
  int lines_in_a_plane = 0;
  bool godsil_royle_inequality = false;  // v > k(k^2-2k+2) for the design
};

inline PgLinesCliqueReport pg32_clique_analysis(const PgLinesData& d) {
  PgLinesCliqueReport rep;
  rep.omega = clique_number(d.concurrence).omega;
  auto cliques = cliques_of_size(d.concurrence, rep.omega);
  rep.maximum_clique_count = int(cliques.size());
  for (const auto& clique : cliques) {
    // Star: a common point in every line of the clique.
    bool star = false;
    for (int pt = 1; pt <= 15 && !star; ++pt) {
      bool in_all = true;
      for (int li : clique) {
        const auto& line = d.lines[size_t(li)];
        if (std::find(line.begin(), line.end(), pt) == line.end())
          in_all = false;
      }
      if (in_all) star = true;
    }
    // Plane family: all points of all lines inside one hyperplane.
    bool plane = false;
    for (int f = 1; f <= 15 && !plane; ++f) {
      bool inside = true;
      for (int li : clique)
        for (int v : d.lines[size_t(li)])
          if (std::popcount(unsigned(v & f)) & 1) inside = false;
      if (inside) plane = true;
    }
    if (star)
      ++rep.point_stars;
    else if (plane)
      ++rep.plane_families;
    else
      ++rep.other;
  }
  // Lines through the first point and lines inside the first hyperplane.
  for (const auto& line : d.lines) {
    if (std::find(line.begin(), line.end(), 1) != line.end())
      ++rep.lines_through_a_point;
    bool inside = true;
    for (int v : line)
      if (std::popcount(unsigned(v & 8)) & 1) inside = false;
    if (inside) ++rep.lines_in_a_plane;
  }
  // 2-(15,3,1) design: v = 15 points, k = 3 points per line.
  rep.godsil_royle_inequality = 15 > 3 * (3 * 3 - 2 * 3 + 2);
  return rep;
}

inline CatalogEntry projective_lines_entry() {
  PgLinesData d = pg32_lines_data();
  CatalogEntry e;
  e.name = "pg32-lines";
  e.description = "lines of PG(3,2) under GL(4,2); clique analysis only";
  e.group = d.group;
  e.graphs.emplace_back("concurrence", d.concurrence);
  e.facts.degree = 35;
  e.facts.order = 20160;
  e.facts.pair_orbit_count = 2;
  e.notes["chromatic"] = "not computed; out of scope for this family";
  return e;
}

// ---------------------------------------------------------------------------
// Named graphs and automata.

inline Graph octahedron() {
  // Complement of 3.K2: vertices 2i and 2i+1 are the only non-edges.
  Graph g(6);
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (!(u / 2 == v / 2)) g.add_edge(u, v);
  return g;
}

inline Graph petersen() { return complement(line_graph_complete(5)); }

inline Dfa cerny_automaton(int n) {
  if (n < 2) throw std::invalid_argument("cerny_automaton: n >= 2");
  std::vector<int> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[size_t(i)] = (i + 1) % n;
    b[size_t(i)] = i;
  }
  b[0] = 1;
  return Dfa(n, {"a", "b"},
             {Transformation(std::move(a)), Transformation(std::move(b))});
}

inline Dfa dungeon_dfa() {
  // RED images [3,1,4,2], BLUE images [3,3,1,1] (1-based).
  return Dfa(4, {"RED", "BLUE"},
             {Transformation(std::vector<int>{2, 0, 3, 1}),
              Transformation(std::vector<int>{2, 2, 0, 0})});
}

inline CatalogEntry graph_entry(const std::string& name, Graph g,
                                const std::string& description) {
  CatalogEntry e;
  e.name = name;
  e.description = description;
  e.graphs.emplace_back(name, std::move(g));
  return e;
}

inline CatalogEntry dfa_entry(const std::string& name, Dfa a,
                              const std::string& description) {
  CatalogEntry e;
  e.name = name;
  e.description = description;
  e.dfa = std::move(a);
  return e;
}

inline std::vector<std::string> catalog_names() {
  return {"grid",      "grid-index2", "s5-on-2sets", "s6-on-2sets",
          "flags-q2",  "affine-p3",   "affine-p5",   "w2",
          "pg32-lines", "octahedron", "petersen",    "lk5",
          "lk6",       "dungeon",     "cerny4"};
}

inline std::optional<CatalogEntry> catalog_entry(const std::string& name) {
  if (name == "grid") return grid_group(true);
  if (name == "grid-index2") return grid_group(false);
  if (name == "s5-on-2sets") return s_m_on_2sets(5);
  if (name == "s6-on-2sets") return s_m_on_2sets(6);
  if (name == "flags-q2") return flags_group();
  if (name == "affine-p3") return affine_half_group(3);
  if (name == "affine-p5") return affine_half_group(5);
  if (name == "w2") return symplectic_w2();
  if (name == "pg32-lines") return projective_lines_entry();
  if (name == "octahedron")
    return graph_entry("octahedron", octahedron(),
                       "octahedron: 2-subsets of a 4-set meeting nontrivially");
  if (name == "petersen")
    return graph_entry("petersen", petersen(),
                       "Petersen graph as the complement of L(K_5)");
  if (name == "lk5")
    return graph_entry("lk5", line_graph_complete(5), "line graph of K_5");
  if (name == "lk6")
    return graph_entry("lk6", line_graph_complete(6), "line graph of K_6");
  if (name == "dungeon")
    return dfa_entry("dungeon", dungeon_dfa(), "the four-cave dungeon");
  if (name == "cerny4")
    return dfa_entry("cerny4", cerny_automaton(4), "Cerny automaton C_4");
  return std::nullopt;
}

}  // namespace synckit
