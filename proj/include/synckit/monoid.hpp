#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synckit/errors.hpp"
#include "synckit/graph.hpp"
#include "synckit/perm_group.hpp"
#include "synckit/transform.hpp"
#include "synckit/word.hpp"

namespace synckit {

// Backward reachability on the n(n-1)/2 pair states of a transformation set:
// a pair {x,y} is collapsible iff some word w satisfies x.w = y.w, and the
// BFS tree yields a shortest collapsing word per pair.
class PairCollapse {
 public:
  explicit PairCollapse(const GeneratingSet& gens)
      : n_(gens.degree), gens_(&gens) {
    const int np = n_ * (n_ - 1) / 2;
    dist_.assign(size_t(np), -1);
    via_.assign(size_t(np), -1);
    succ_.assign(size_t(np), -1);

    // Reverse edges of the pair automaton, plus direct-collapse seeds.
    std::vector<std::vector<std::pair<int, int>>> rev(static_cast<size_t>(np));
    std::vector<int> queue;
    for (int idx = 0; idx < np; ++idx) {
      auto [x, y] = pair_of_index(n_, idx);
      for (size_t j = 0; j < gens.maps.size(); ++j) {
        int a = gens.maps[j][x], b = gens.maps[j][y];
        if (a == b) {
          if (dist_[size_t(idx)] < 0) {
            dist_[size_t(idx)] = 1;
            via_[size_t(idx)] = int(j);
            queue.push_back(idx);
          }
        } else {
          rev[size_t(pair_index(n_, a, b))].emplace_back(idx, int(j));
        }
      }
    }
    for (size_t h = 0; h < queue.size(); ++h) {
      int q = queue[h];
      for (auto [p, j] : rev[size_t(q)]) {
        if (dist_[size_t(p)] < 0) {
          dist_[size_t(p)] = dist_[size_t(q)] + 1;
          via_[size_t(p)] = j;
          succ_[size_t(p)] = q;
          queue.push_back(p);
        }
      }
    }
  }

  int degree() const { return n_; }
  const GeneratingSet& gens() const { return *gens_; }

  bool collapsible(int x, int y) const {
    return dist_[size_t(pair_index(n_, x, y))] >= 0;
  }

  // Shortest collapsing word length; -1 when the pair cannot be collapsed.
  int distance(int x, int y) const {
    return dist_[size_t(pair_index(n_, x, y))];
  }

  bool all_collapsible() const {
    for (int d : dist_)
      if (d < 0) return false;
    return true;
  }

  Word collapse_word(int x, int y) const {
    int idx = pair_index(n_, x, y);
    if (dist_[size_t(idx)] < 0)
      throw std::invalid_argument("pair is not collapsible");
    Word w;
    while (idx >= 0) {
      w.letters.push_back(via_[size_t(idx)]);
      idx = succ_[size_t(idx)];
    }
    return w;
  }

  std::vector<std::pair<int, int>> collapsible_pairs() const {
    return pairs_with(true);
  }
  std::vector<std::pair<int, int>> non_collapsible_pairs() const {
    return pairs_with(false);
  }

 private:
  std::vector<std::pair<int, int>> pairs_with(bool collapsible) const {
    std::vector<std::pair<int, int>> out;
    for (int idx = 0; idx < int(dist_.size()); ++idx)
      if ((dist_[size_t(idx)] >= 0) == collapsible)
        out.push_back(pair_of_index(n_, idx));
    return out;
  }

  int n_;
  const GeneratingSet* gens_;
  std::vector<int> dist_, via_, succ_;
};

// The set of 2-subsets {x,y} with x.w = y.w for some word w over gens.
inline std::vector<std::pair<int, int>> collapsible_pairs(
    const GeneratingSet& gens) {
  return PairCollapse(gens).collapsible_pairs();
}

// Named generators of <G, t>: g0..g{k-1} followed by t.
struct GroupMapSystem {
  GeneratingSet gens;
  int t_index = 0;

  static GroupMapSystem make(const PermGroup& g, const Transformation& t) {
    if (t.degree() != g.degree())
      throw std::invalid_argument("map degree does not match group degree");
    std::vector<Transformation> maps;
    std::vector<std::string> names;
    for (size_t i = 0; i < g.generators().size(); ++i) {
      maps.push_back(Transformation(g.generators()[i]));
      names.push_back("g" + std::to_string(i));
    }
    maps.push_back(t);
    names.push_back("t");
    GroupMapSystem sys;
    sys.gens = GeneratingSet(std::move(maps), std::move(names));
    sys.t_index = int(sys.gens.maps.size()) - 1;
    return sys;
  }
};

namespace detail {

// Greedy pair merging: repeatedly append the shortest collapsing word for an
// image pair (ties broken by lexicographic pair order) until no image pair
// is collapsible. The terminal image is pairwise non-collapsible, which pins
// the rank at the minimum over the generated monoid.
inline void greedy_merge(const PairCollapse& pc, const GeneratingSet& gens,
                         Transformation& f, Word& w) {
  for (;;) {
    auto image = f.image_set();
    int bx = -1, by = -1, bd = std::numeric_limits<int>::max();
    for (size_t i = 0; i < image.size(); ++i)
      for (size_t j = i + 1; j < image.size(); ++j) {
        int d = pc.distance(image[i], image[j]);
        if (d >= 0 && d < bd) {
          bd = d;
          bx = image[i];
          by = image[j];
        }
      }
    if (bx < 0) return;
    Word step = pc.collapse_word(bx, by);
    w.append(step);
    f = compose(f, evaluate(gens, step));
  }
}

}  // namespace detail

struct SynchronizesResult {
  bool synchronizes = false;
  Word witness;  // evaluates to a constant when synchronizes
  std::vector<std::pair<int, int>> blocking_pairs;  // non-collapsible pairs
};

// True iff <G, t> contains a constant map; witness word over g0..g{k-1}, t.
inline SynchronizesResult synchronizes(const PermGroup& g,
                                       const Transformation& t) {
  if (t.is_permutation())
    throw std::invalid_argument("synchronizes: t must not be a permutation");
  GroupMapSystem sys = GroupMapSystem::make(g, t);
  PairCollapse pc(sys.gens);
  SynchronizesResult r;
  if (!pc.all_collapsible()) {
    r.blocking_pairs = pc.non_collapsible_pairs();
    return r;
  }
  r.synchronizes = true;
  Transformation f(g.degree());
  detail::greedy_merge(pc, sys.gens, f, r.witness);
  assert(f.is_constant());
  return r;
}

struct MinRankResult {
  int k_u = 0;
  Word witness;  // evaluates to a transformation of rank k_u
};

// Smallest rank over <G, t> \ G.
inline MinRankResult min_rank(const PermGroup& g, const Transformation& t) {
  if (t.is_permutation())
    throw std::invalid_argument("min_rank: t must not be a permutation");
  GroupMapSystem sys = GroupMapSystem::make(g, t);
  PairCollapse pc(sys.gens);
  MinRankResult r;
  r.witness.letters.push_back(sys.t_index);
  Transformation f = t;
  detail::greedy_merge(pc, sys.gens, f, r.witness);
  r.k_u = rank(f);
  return r;
}

// Minimum rank over an arbitrary generated transformation monoid, by the
// same greedy merging started from a lowest-rank generator.
inline MinRankResult min_rank_of_monoid(const GeneratingSet& gens) {
  PairCollapse pc(gens);
  size_t start = 0;
  for (size_t i = 1; i < gens.maps.size(); ++i)
    if (rank(gens.maps[i]) < rank(gens.maps[start])) start = i;
  MinRankResult r;
  r.witness.letters.push_back(int(start));
  Transformation f = gens.maps[start];
  detail::greedy_merge(pc, gens, f, r.witness);
  r.k_u = rank(f);
  return r;
}

// Graph on {0..n-1} joining x,y iff no word over gens collapses them.
inline Graph gr_of_monoid(const GeneratingSet& gens) {
  PairCollapse pc(gens);
  Graph x(gens.degree);
  for (auto [u, v] : pc.non_collapsible_pairs()) x.add_edge(u, v);
  return x;
}

// Breadth-first closure of a transformation semigroup, with parent links for
// word replay. `complete` is false iff the cap stopped the closure.
struct MonoidClosure {
  std::vector<Transformation> elements;  // BFS order, deduplicated
  std::vector<int> parent;               // -1 for generators
  std::vector<int> letter;
  bool complete = true;

  Word word_of(int i) const {
    Word w;
    for (int j = i; j >= 0; j = parent[size_t(j)])
      w.letters.push_back(letter[size_t(j)]);
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
  }
};

inline MonoidClosure monoid_closure(const GeneratingSet& gens, uint64_t cap) {
  MonoidClosure c;
  std::map<Transformation, int> index;
  auto push = [&](Transformation t, int parent, int letter) {
    if (index.contains(t)) return true;
    if (uint64_t(c.elements.size()) >= cap) return false;
    index.emplace(t, int(c.elements.size()));
    c.elements.push_back(std::move(t));
    c.parent.push_back(parent);
    c.letter.push_back(letter);
    return true;
  };
  for (size_t j = 0; j < gens.maps.size(); ++j)
    if (!push(gens.maps[j], -1, int(j))) {
      c.complete = false;
      return c;
    }
  for (size_t h = 0; h < c.elements.size(); ++h)
    for (size_t j = 0; j < gens.maps.size(); ++j)
      if (!push(compose(c.elements[h], gens.maps[j]), int(h), int(j))) {
        c.complete = false;
        return c;
      }
  return c;
}

struct FindQCaps {
  uint64_t monoid = 1'000'000;  // closure elements
  uint64_t group = 1'000'000;   // group elements enumerated
};

// Analysis of a map q relative to <G, q>: the minimal rank k_U, the set
// Q_q = {g in G : rank(q g q) = k_U}, and the kernel shape of q (r singleton
// blocks, s blocks of size p_block; p_block = -1 when non-singleton sizes
// are mixed).
struct QAnalysis {
  Transformation q;
  Word q_word;
  int q_rank = 0;
  int k_u = 0;
  std::vector<Permutation> q_set;
  bool q_set_complete = true;     // group enumeration finished under cap
  bool closure_complete = true;   // find_q only: U was exhausted
  bool lemma3_contract_ok = true; // rank(qgq) in {rank q, k_U} for all tested g
  int r = 0;
  int s = 0;
  int p_block = 0;

  QAnalysis() : q(0) {}
};

namespace detail {

inline void fill_q_analysis(const PermGroup& g, QAnalysis& a,
                            const FindQCaps& caps) {
  a.q_rank = rank(a.q);
  a.q_set.clear();
  a.lemma3_contract_ok = true;
  a.q_set_complete = g.for_each_element(caps.group, [&](const Permutation& h) {
    Transformation qhq = compose(compose(a.q, Transformation(h)), a.q);
    int rk = rank(qhq);
    if (rk == a.k_u) a.q_set.push_back(h);
    if (rk != a.q_rank && rk != a.k_u) a.lemma3_contract_ok = false;
  });
  Partition k = kernel(a.q);
  a.r = 0;
  a.s = 0;
  a.p_block = 0;
  for (const auto& b : k.blocks()) {
    if (b.size() == 1) {
      ++a.r;
    } else {
      ++a.s;
      if (a.p_block == 0)
        a.p_block = int(b.size());
      else if (a.p_block != int(b.size()))
        a.p_block = -1;  // mixed non-singleton sizes
    }
  }
}

}  // namespace detail

// Analysis of a given (non-invertible) map q; k_U is the minimal rank in
// <G, q>.
inline QAnalysis q_analysis_of(const PermGroup& g, const Transformation& q,
                               const FindQCaps& caps = {}) {
  QAnalysis a;
  a.q = q;
  GroupMapSystem sys = GroupMapSystem::make(g, q);
  a.q_word.letters = {sys.t_index};
  a.k_u = min_rank(g, q).k_u;
  detail::fill_q_analysis(g, a, caps);
  return a;
}

// Searches M = {a in <G,t> : rank(a) > k_U and rank(a h a) = k_U for some
// h in G} for a member of minimal rank, following the existence proof:
// enumerate <G,t> breadth-first (capped) and test candidates rank-ascending.
// Throws no_q_exists when the closure is exhausted with M empty, and
// cap_exceeded when a cap stops the search first.
inline QAnalysis find_q(const PermGroup& g, const Transformation& t,
                        const FindQCaps& caps = {}) {
  MinRankResult mr = min_rank(g, t);
  if (mr.k_u <= 1)
    throw std::invalid_argument("find_q: k_U = 1, no q is sought");
  GroupMapSystem sys = GroupMapSystem::make(g, t);
  MonoidClosure closure = monoid_closure(sys.gens, caps.monoid);

  std::vector<int> candidates;
  for (size_t i = 0; i < closure.elements.size(); ++i) {
    const Transformation& a = closure.elements[i];
    // Permutations never qualify: a h a is then a permutation of full rank.
    if (!a.is_permutation() && rank(a) > mr.k_u) candidates.push_back(int(i));
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](int x, int y) {
    return rank(closure.elements[size_t(x)]) <
           rank(closure.elements[size_t(y)]);
  });

  bool group_complete = true;
  for (int ci : candidates) {
    const Transformation& a = closure.elements[size_t(ci)];
    bool found = false;
    group_complete = g.for_each_element(caps.group, [&](const Permutation& h) {
      if (!found &&
          rank(compose(compose(a, Transformation(h)), a)) == mr.k_u)
        found = true;
    });
    if (found) {
      QAnalysis out;
      out.q = a;
      out.q_word = closure.word_of(ci);
      out.k_u = mr.k_u;
      out.closure_complete = closure.complete;
      detail::fill_q_analysis(g, out, caps);
      return out;
    }
  }
  if (closure.complete && group_complete)
    throw no_q_exists("M is empty: closure of <G,t> exhausted (" +
                      std::to_string(closure.elements.size()) +
                      " elements) with no admissible q");
  throw cap_exceeded("no member of M found before a search cap was hit");
}

// Structure checks from the kernel lemmas: every block of K_g is either a
// block of K or a union of K-singletons, and the (r,s,p) arithmetic
// r >= 1, s >= 1, p | r, r < s p. The arithmetic applies only to
// non-uniform q (r, s >= 1 with equal non-singleton sizes); outside that
// shape it is reported as inapplicable rather than violated.
struct BlockStructureReport {
  bool lemma4_ok = true;
  std::vector<std::vector<int>> lemma4_offenders;
  bool qgq_kernel_uniform = false;
  int r = 0;
  int s = 0;
  int p_block = 0;
  bool kernel_mixed = false;
  bool lemma5_applicable = false;
  bool r_ge_1 = false;
  bool s_ge_1 = false;
  bool r_multiple_of_p = false;
  bool r_lt_sp = false;
  bool lemma5_ok = false;
};

inline BlockStructureReport check_block_structure(const QAnalysis& analysis,
                                                  const Permutation& g) {
  if (analysis.k_u <= 1)
    throw std::invalid_argument("check_block_structure: requires k_U > 1");
  if (g.degree() != analysis.q.degree())
    throw std::invalid_argument("check_block_structure: degree mismatch");
  Transformation qgq =
      compose(compose(analysis.q, Transformation(g)), analysis.q);
  if (rank(qgq) != analysis.k_u)
    throw std::invalid_argument("check_block_structure: g is not in Q_q");

  BlockStructureReport rep;
  Partition k = kernel(analysis.q);
  Partition kg = kernel(qgq);
  rep.qgq_kernel_uniform = kg.is_uniform();

  for (const auto& block : kg.blocks()) {
    bool is_k_block =
        std::find(k.blocks().begin(), k.blocks().end(), block) !=
        k.blocks().end();
    if (is_k_block) continue;
    bool all_singletons = true;
    for (int x : block)
      if (k.blocks()[size_t(k.block_index_of(x))].size() != 1)
        all_singletons = false;
    if (!all_singletons) {
      rep.lemma4_ok = false;
      rep.lemma4_offenders.push_back(block);
    }
  }

  rep.r = analysis.r;
  rep.s = analysis.s;
  rep.p_block = analysis.p_block;
  rep.kernel_mixed = analysis.p_block < 0;
  rep.r_ge_1 = rep.r >= 1;
  rep.s_ge_1 = rep.s >= 1;
  rep.lemma5_applicable = rep.r_ge_1 && rep.s_ge_1 && !rep.kernel_mixed;
  if (rep.s >= 1 && rep.p_block > 0) {
    rep.r_multiple_of_p = rep.r % rep.p_block == 0;
    rep.r_lt_sp = rep.r < rep.s * rep.p_block;
  }
  rep.lemma5_ok = rep.lemma5_applicable && rep.r_multiple_of_p && rep.r_lt_sp;
  return rep;
}

}  // namespace synckit
