#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "synckit/errors.hpp"
#include "synckit/perm.hpp"

namespace synckit {

// Partition of the point set permuted setwise by every generator; all blocks
// have the same size d with 1 < d < n.
struct BlockSystem {
  std::vector<std::vector<int>> blocks;  // canonical: sorted, by least element
};

// Unordered pairs {x,y}, x < y, indexed 0..n(n-1)/2-1 in lexicographic order.
inline int pair_index(int n, int x, int y) {
  assert(x != y && x >= 0 && y >= 0 && x < n && y < n);
  if (x > y) std::swap(x, y);
  return x * n - x * (x + 1) / 2 + (y - x - 1);
}

inline std::pair<int, int> pair_of_index(int n, int idx) {
  int x = 0;
  int row = n - 1;
  while (idx >= row) {
    idx -= row;
    --row;
    ++x;
  }
  return {x, x + 1 + idx};
}

// Permutation group given by generators. All caches (orbits on points and
// pairs, stabilizer chain, order) are built at construction; instances are
// immutable afterwards and safe to share across threads.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators)
      : degree_(degree) {
    if (generators.empty())
      throw std::invalid_argument("group needs at least one generator");
    for (const auto& g : generators)
      if (g.degree() != degree)
        throw std::invalid_argument("generator degree mismatch");
    // Deduplicate; drop identities unless that would leave nothing.
    std::set<Permutation> uniq;
    for (auto& g : generators)
      if (!g.is_identity()) uniq.insert(std::move(g));
    gens_.assign(uniq.begin(), uniq.end());
    if (gens_.empty()) gens_.push_back(Permutation(degree));

    build_point_orbits();
    build_pair_orbits();
    build_chain();
  }

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::vector<int> orbit(int x) const {
    if (x < 0 || x >= degree_)
      throw std::invalid_argument("orbit: point out of range");
    return point_orbits_[size_t(point_orbit_id_[size_t(x)])];
  }

  const std::vector<std::vector<int>>& point_orbits() const {
    return point_orbits_;
  }

  bool is_transitive() const {
    return degree_ <= 1 || int(point_orbits_[0].size()) == degree_;
  }

  int pair_count() const { return degree_ * (degree_ - 1) / 2; }

  // G-orbits on unordered 2-subsets; each orbit, read as an edge set, is an
  // orbital graph.
  const std::vector<std::vector<std::pair<int, int>>>& pair_orbits() const {
    return pair_orbits_;
  }
  int pair_orbit_count() const { return int(pair_orbits_.size()); }
  int pair_orbit_id(int x, int y) const {
    return pair_orbit_id_[size_t(pair_index(degree_, x, y))];
  }

  // Finest nontrivial block system found by the minimal-block method: for
  // each b != 0, the finest G-congruence identifying 0 and b. nullopt means
  // primitive. Requires a transitive group.
  std::optional<BlockSystem> nontrivial_block_system() const {
    if (!is_transitive())
      throw std::invalid_argument("block systems require a transitive group");
    const int n = degree_;
    for (int b = 1; b < n; ++b) {
      std::vector<int> uf(static_cast<size_t>(n));
      std::iota(uf.begin(), uf.end(), 0);
      auto find = [&](int x) {
        while (uf[size_t(x)] != x) {
          uf[size_t(x)] = uf[size_t(uf[size_t(x)])];
          x = uf[size_t(x)];
        }
        return x;
      };
      std::vector<std::pair<int, int>> agenda{{0, b}};
      uf[size_t(find(b))] = find(0);
      while (!agenda.empty()) {
        auto [x, y] = agenda.back();
        agenda.pop_back();
        for (const auto& g : gens_) {
          int fx = find(g[x]), fy = find(g[y]);
          if (fx != fy) {
            uf[size_t(fy)] = fx;
            agenda.emplace_back(g[x], g[y]);
          }
        }
      }
      std::vector<std::vector<int>> classes(static_cast<size_t>(n));
      for (int x = 0; x < n; ++x) classes[size_t(find(x))].push_back(x);
      int k = 0;
      for (const auto& c : classes)
        if (!c.empty()) ++k;
      if (k > 1 && k < n) {
        std::vector<std::vector<int>> blocks;
        for (auto& c : classes)
          if (!c.empty()) blocks.push_back(std::move(c));
        std::sort(blocks.begin(), blocks.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
        return BlockSystem{std::move(blocks)};
      }
    }
    return std::nullopt;
  }

  bool is_primitive() const { return !nontrivial_block_system().has_value(); }

  uint64_t order() const { return order_; }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_)
      throw std::invalid_argument("contains: degree mismatch");
    Permutation h = g;
    for (const auto& level : chain_) {
      int p = h[level.base];
      if (!level.in_orbit[size_t(p)]) return false;
      h = compose(h, transversal(level, p).inverse());
    }
    return h.is_identity();
  }

  // Deterministic enumeration of all elements via transversal products along
  // the stabilizer chain (deepest level first). Returns false iff the cap
  // was hit.
  template <typename F>
  bool for_each_element(uint64_t cap, F f) const {
    uint64_t emitted = 0;
    return enumerate_level(int(chain_.size()) - 1, Permutation(degree_), cap,
                           emitted, f);
  }

  std::vector<Permutation> elements(uint64_t cap = 1'000'000) const {
    std::vector<Permutation> out;
    bool complete = for_each_element(cap, [&](const Permutation& g) {
      out.push_back(g);
    });
    if (!complete) throw cap_exceeded("group enumeration cap exceeded");
    return out;
  }

 private:
  struct ChainLevel {
    int base = -1;
    std::vector<Permutation> gens;
    std::vector<int> orbit;  // BFS discovery order, starting at base
    std::vector<char> in_orbit;
    std::vector<int> parent;  // tree edge: point reached from parent via gens[via]
    std::vector<int> via;
  };

  void build_point_orbits() {
    point_orbit_id_.assign(size_t(degree_), -1);
    for (int x = 0; x < degree_; ++x) {
      if (point_orbit_id_[size_t(x)] >= 0) continue;
      int id = int(point_orbits_.size());
      std::vector<int> orb{x};
      point_orbit_id_[size_t(x)] = id;
      for (size_t h = 0; h < orb.size(); ++h)
        for (const auto& g : gens_) {
          int y = g[orb[h]];
          if (point_orbit_id_[size_t(y)] < 0) {
            point_orbit_id_[size_t(y)] = id;
            orb.push_back(y);
          }
        }
      std::sort(orb.begin(), orb.end());
      point_orbits_.push_back(std::move(orb));
    }
  }

  void build_pair_orbits() {
    const int np = pair_count();
    pair_orbit_id_.assign(size_t(np), -1);
    for (int idx = 0; idx < np; ++idx) {
      if (pair_orbit_id_[size_t(idx)] >= 0) continue;
      int id = int(pair_orbits_.size());
      std::vector<int> orb{idx};
      pair_orbit_id_[size_t(idx)] = id;
      for (size_t h = 0; h < orb.size(); ++h) {
        auto [x, y] = pair_of_index(degree_, orb[h]);
        for (const auto& g : gens_) {
          int j = pair_index(degree_, g[x], g[y]);
          if (pair_orbit_id_[size_t(j)] < 0) {
            pair_orbit_id_[size_t(j)] = id;
            orb.push_back(j);
          }
        }
      }
      std::sort(orb.begin(), orb.end());
      std::vector<std::pair<int, int>> pairs;
      pairs.reserve(orb.size());
      for (int j : orb) pairs.push_back(pair_of_index(degree_, j));
      pair_orbits_.push_back(std::move(pairs));
    }
  }

  // Deterministic Schreier chain with base points chosen ascending (the
  // smallest point moved at each level). Schreier generators are deduplicated
  // level by level; exact at the scales this artifact targets.
  void build_chain() {
    order_ = 1;
    std::vector<Permutation> cur = gens_;
    while (true) {
      std::set<Permutation> uniq;
      for (auto& g : cur)
        if (!g.is_identity()) uniq.insert(std::move(g));
      if (uniq.empty()) break;

      ChainLevel level;
      level.gens.assign(uniq.begin(), uniq.end());
      int base = -1;
      for (int x = 0; x < degree_ && base < 0; ++x)
        for (const auto& g : level.gens)
          if (g[x] != x) {
            base = x;
            break;
          }
      assert(base >= 0);
      level.base = base;
      level.in_orbit.assign(size_t(degree_), 0);
      level.parent.assign(size_t(degree_), -1);
      level.via.assign(size_t(degree_), -1);
      level.orbit.push_back(base);
      level.in_orbit[size_t(base)] = 1;
      for (size_t h = 0; h < level.orbit.size(); ++h) {
        int p = level.orbit[h];
        for (size_t gi = 0; gi < level.gens.size(); ++gi) {
          int q = level.gens[gi][p];
          if (!level.in_orbit[size_t(q)]) {
            level.in_orbit[size_t(q)] = 1;
            level.parent[size_t(q)] = p;
            level.via[size_t(q)] = int(gi);
            level.orbit.push_back(q);
          }
        }
      }
      order_ *= uint64_t(level.orbit.size());

      std::set<Permutation> next;
      for (int p : level.orbit) {
        Permutation up = transversal(level, p);
        for (const auto& s : level.gens) {
          Permutation uq = transversal(level, s[p]);
          Permutation schreier = compose(compose(up, s), uq.inverse());
          assert(schreier[level.base] == level.base);
          if (!schreier.is_identity()) next.insert(std::move(schreier));
        }
      }
      chain_.push_back(std::move(level));
      cur.assign(next.begin(), next.end());
      if (int(chain_.size()) > degree_)
        throw std::logic_error("stabilizer chain deeper than degree");
    }
  }

  Permutation transversal(const ChainLevel& level, int p) const {
    assert(level.in_orbit[size_t(p)]);
    std::vector<int> path;
    for (int q = p; q != level.base; q = level.parent[size_t(q)])
      path.push_back(level.via[size_t(q)]);
    Permutation u(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      u = compose(u, level.gens[size_t(*it)]);
    return u;
  }

  template <typename F>
  bool enumerate_level(int i, const Permutation& acc, uint64_t cap,
                       uint64_t& emitted, F& f) const {
    if (i < 0) {
      if (emitted >= cap) return false;
      ++emitted;
      f(acc);
      return true;
    }
    const ChainLevel& level = chain_[size_t(i)];
    for (int p : level.orbit)
      if (!enumerate_level(i - 1, compose(acc, transversal(level, p)), cap,
                           emitted, f))
        return false;
    return true;
  }

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<std::vector<int>> point_orbits_;
  std::vector<int> point_orbit_id_;
  std::vector<std::vector<std::pair<int, int>>> pair_orbits_;
  std::vector<int> pair_orbit_id_;
  std::vector<ChainLevel> chain_;
  uint64_t order_ = 1;
};

}  // namespace synckit
