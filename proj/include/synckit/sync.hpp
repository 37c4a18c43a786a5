#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "synckit/clique.hpp"
#include "synckit/coloring.hpp"
#include "synckit/errors.hpp"
#include "synckit/endo.hpp"
#include "synckit/exact_cover.hpp"
#include "synckit/graph.hpp"
#include "synckit/monoid.hpp"
#include "synckit/perm_group.hpp"
#include "synckit/rng.hpp"
#include "synckit/transform.hpp"

namespace synckit {

// Exact rational, normalized with positive denominator.
struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction of(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Fraction{n / g, d / g};
  }

  double value() const { return double(num) / double(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Fraction& a, const Fraction& b) {
    return a == b || a < b;
  }
};

// Graph on X with x ~ y iff some g in G maps both into S; computed as the
// pair-orbit closure of the 2-subsets of S.
inline Graph gamma_s(const PermGroup& g, const std::vector<int>& s) {
  const int n = g.degree();
  if (int(s.size()) <= 1 || int(s.size()) >= n)
    throw std::invalid_argument("gamma_s: need 1 < |S| < n");
  std::set<int> touched;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      touched.insert(g.pair_orbit_id(s[i], s[j]));
  Graph x(n);
  for (int id : touched)
    for (auto [u, v] : g.pair_orbits()[size_t(id)]) x.add_edge(u, v);
  return x;
}

// True iff the intersection of the closed neighbourhoods of T in gbar equals
// exactly T.
inline bool closed_neighbourhood_intersection_is(const Graph& gbar,
                                                 const std::vector<int>& t) {
  Bitset inter(gbar.size());
  for (int v = 0; v < gbar.size(); ++v) inter.set(v);
  for (int x : t) {
    Bitset closed = gbar.neighbors(x);
    closed.set(x);
    inter &= closed;
  }
  Bitset expect(gbar.size());
  for (int x : t) expect.set(x);
  return inter == expect;
}

// m(S,T): one more than the maximum number of neighbours in T of any point
// outside T, in the complement of Gamma_S. Validates the Lemma-1 hypotheses
// (T a clique of the complement with |S||T| = n) and its conclusion first.
inline int m_s_t(const PermGroup& g, const std::vector<int>& s,
                 const std::vector<int>& t) {
  const int n = g.degree();
  if (int(s.size()) * int(t.size()) != n)
    throw std::invalid_argument("m_s_t: |S|.|T| != n");
  Graph gbar = complement(gamma_s(g, s));
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j)
      if (!gbar.adjacent(t[i], t[j]))
        throw std::invalid_argument(
            "m_s_t: T is not a clique in the complement of Gamma_S");
  if (!closed_neighbourhood_intersection_is(gbar, t))
    throw std::invalid_argument(
        "m_s_t: closed neighbourhoods of T do not intersect to T");
  Bitset in_t(n);
  for (int x : t) in_t.set(x);
  int worst = 0;
  for (int y = 0; y < n; ++y) {
    if (in_t.test(y)) continue;
    worst = std::max(worst, (gbar.neighbors(y) & in_t).count());
  }
  return worst + 1;
}

inline bool is_section_of(const std::vector<int>& s, const Partition& p) {
  std::vector<int> hits(size_t(p.block_count()), 0);
  for (int x : s) {
    if (x < 0 || x >= p.degree()) return false;
    ++hits[size_t(p.block_index_of(x))];
  }
  for (int h : hits)
    if (h != 1) return false;
  return int(s.size()) == p.block_count();
}

// Definitional G-regularity: every set in the orbit of S under the
// generators is again a section of P. Orbit closure covers full group
// elements, not just the generators.
inline bool section_is_g_regular(const PermGroup& g, const std::vector<int>& s,
                                 const Partition& p,
                                 uint64_t cap_orbit = 100'000) {
  if (!is_section_of(s, p)) return false;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  std::vector<int> start = s;
  std::sort(start.begin(), start.end());
  seen.insert(start);
  queue.push_back(start);
  for (size_t h = 0; h < queue.size(); ++h) {
    for (const auto& gen : g.generators()) {
      std::vector<int> img;
      img.reserve(queue[h].size());
      for (int x : queue[h]) img.push_back(gen[x]);
      std::sort(img.begin(), img.end());
      if (!is_section_of(img, p)) return false;
      if (seen.insert(img).second) {
        if (seen.size() > cap_orbit)
          throw cap_exceeded("section orbit enumeration cap exceeded");
        queue.push_back(img);
      }
    }
  }
  return true;
}

// Uniform partition with G-regular sections, together with the invariant
// graph whose colouring produced it.
struct NonSyncWitness {
  Partition partition;
  std::vector<std::vector<int>> sections;
  Graph source_graph;
  uint32_t source_mask = 0;
  std::vector<uint32_t> masks;  // every orbital mask that emitted it

  NonSyncWitness() : partition(Partition::of_kernel(Transformation(1))) {}
};

struct SyncCaps {
  uint64_t solver_nodes = 10'000'000;
  uint64_t cover_nodes = 10'000'000;
  uint64_t sections = 100'000;
};

// All non-synchronizing partitions of a transitive group, via the invariant
// graphs: for every nontrivial union X of orbital graphs with
// omega(X) = chi(X) = c and c | n, every partition of the vertices into c
// independent sets of size n/c is non-synchronizing and every maximum clique
// of X is a G-regular section. Both facts are re-verified definitionally
// before emission. Partitions found from several graphs are merged.
inline std::vector<NonSyncWitness> find_nonsync_partitions(
    const PermGroup& g, const SyncCaps& caps = {}) {
  if (!g.is_transitive())
    throw std::invalid_argument(
        "find_nonsync_partitions: group must be transitive");
  const int n = g.degree();
  const int r = g.pair_orbit_count();
  if (r > 20) throw cap_exceeded("too many pair orbits (2^r graphs)");

  struct Accum {
    std::set<std::vector<int>> sections;
    std::vector<uint32_t> masks;
  };
  std::map<Partition, Accum> accum;
  std::map<uint32_t, Graph> graph_of_mask;

  const uint32_t top = r >= 1 ? (uint32_t(1) << r) - 1 : 0;
  for (uint32_t mask = 1; top > 0 && mask < top; ++mask) {
    Graph x = invariant_graph_for_mask(g, mask);
    CliqueResult cr = clique_number(x);
    const int c = cr.omega;
    if (c <= 1 || n % c != 0) continue;
    if (!k_colorable(x, c, nullptr, caps.solver_nodes)) continue;

    // Candidate parts: independent sets of size n/c.
    auto parts = cliques_of_size(complement(x), n / c, caps.cover_nodes);
    if (parts.empty()) continue;
    ExactCover cover(n);
    for (size_t i = 0; i < parts.size(); ++i)
      cover.add_option(parts[i], int(i));
    std::vector<Partition> found;
    cover.solve(
        [&](const std::vector<int>& tags) {
          std::vector<std::vector<int>> blocks;
          for (int tag : tags) blocks.push_back(parts[size_t(tag)]);
          found.push_back(Partition::from_blocks(n, std::move(blocks)));
          return true;
        },
        caps.cover_nodes);
    if (found.empty()) continue;

    auto sections = cliques_of_size(x, c, caps.cover_nodes);
    graph_of_mask.emplace(mask, std::move(x));
    for (auto& p : found) {
      if (!p.is_uniform())
        throw std::logic_error("emitted partition is not uniform");
      Accum& a = accum[p];
      for (const auto& sec : sections) {
        if (!is_section_of(sec, p))
          throw std::logic_error("maximum clique fails to be a section");
        if (!section_is_g_regular(g, sec, p, caps.sections))
          throw std::logic_error("section fails G-regularity recheck");
        a.sections.insert(sec);
      }
      if (a.masks.empty() || a.masks.back() != mask) a.masks.push_back(mask);
    }
  }

  std::vector<NonSyncWitness> out;
  for (auto& [p, a] : accum) {
    NonSyncWitness w;
    w.partition = p;
    w.sections.assign(a.sections.begin(), a.sections.end());
    w.masks = a.masks;
    w.source_mask = a.masks.front();
    w.source_graph = graph_of_mask.at(w.source_mask);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(),
            [](const NonSyncWitness& a, const NonSyncWitness& b) {
              if (a.source_mask != b.source_mask)
                return a.source_mask < b.source_mask;
              return a.partition < b.partition;
            });
  return out;
}

struct GraphFact {
  uint32_t mask = 0;
  int omega = 0;
  int chi = -1;           // -1 when withheld by a cap
  bool omega_eq_chi = false;
  bool decided = true;    // false when a cap blocked the omega = chi test
};

struct SyncDecision {
  enum class Verdict { synchronizing, non_synchronizing, withheld };
  Verdict verdict = Verdict::synchronizing;
  std::optional<uint32_t> witness_mask;
  std::vector<GraphFact> graphs;
  std::vector<uint32_t> caps_hit;

  bool synchronizing() const { return verdict == Verdict::synchronizing; }
};

// Decision procedure: construct all nontrivial G-invariant graphs and test
// omega(X) = chi(X) on each. Non-synchronizing iff some graph passes.
inline SyncDecision is_synchronizing_group(const PermGroup& g,
                                           const SyncCaps& caps = {}) {
  if (!g.is_transitive())
    throw std::invalid_argument(
        "is_synchronizing_group: group must be transitive");
  const int r = g.pair_orbit_count();
  if (r > 20) throw cap_exceeded("too many pair orbits (2^r graphs)");
  SyncDecision d;
  const uint32_t top = r >= 1 ? (uint32_t(1) << r) - 1 : 0;
  for (uint32_t mask = 1; top > 0 && mask < top; ++mask) {
    Graph x = invariant_graph_for_mask(g, mask);
    GraphFact fact;
    fact.mask = mask;
    fact.omega = clique_number(x).omega;
    try {
      fact.omega_eq_chi = k_colorable(x, fact.omega, nullptr, caps.solver_nodes);
      if (fact.omega_eq_chi) {
        fact.chi = fact.omega;
      } else {
        try {
          fact.chi = chromatic_number(x, caps.solver_nodes).chi;
        } catch (const cap_exceeded&) {
          fact.chi = -1;  // value withheld; inequality already decided
        }
      }
    } catch (const cap_exceeded&) {
      fact.decided = false;
      d.caps_hit.push_back(mask);
    }
    if (fact.decided && fact.omega_eq_chi && !d.witness_mask)
      d.witness_mask = mask;
    d.graphs.push_back(fact);
  }
  if (d.witness_mask) {
    d.verdict = SyncDecision::Verdict::non_synchronizing;
  } else if (!d.caps_hit.empty()) {
    d.verdict = SyncDecision::Verdict::withheld;
  } else {
    d.verdict = SyncDecision::Verdict::synchronizing;
  }
  return d;
}

struct MTableEntry {
  int partition = 0;  // index into the witness list
  int section = 0;    // index into that witness's section list
  int m = 0;
};

struct SyncParams {
  int m_g = 0;
  Fraction big_m;
  bool big_m_vacuous = false;  // no two distinct partitions share a rank
  std::vector<MTableEntry> table;
};

// m(G) = max m(S,T) over all (section, part) pairs of the witnesses;
// M(G) = max |P^P'|/k over distinct partition pairs of equal rank k, and 0
// (flagged vacuous) when no two partitions share a rank.
inline SyncParams sync_params(const PermGroup& g,
                              const std::vector<NonSyncWitness>& witnesses) {
  if (witnesses.empty())
    throw std::invalid_argument(
        "sync_params: m(G) is not defined for a synchronizing group");
  SyncParams out;
  for (size_t wi = 0; wi < witnesses.size(); ++wi) {
    const auto& w = witnesses[wi];
    for (size_t si = 0; si < w.sections.size(); ++si) {
      int worst = 0;
      for (const auto& t : w.partition.blocks())
        worst = std::max(worst, m_s_t(g, w.sections[si], t));
      out.table.push_back(MTableEntry{int(wi), int(si), worst});
      out.m_g = std::max(out.m_g, worst);
    }
  }
  out.big_m_vacuous = true;
  out.big_m = Fraction::of(0, 1);
  for (size_t i = 0; i < witnesses.size(); ++i)
    for (size_t j = i + 1; j < witnesses.size(); ++j) {
      const auto& p = witnesses[i].partition;
      const auto& q = witnesses[j].partition;
      if (p.block_count() != q.block_count()) continue;
      out.big_m_vacuous = false;
      int common = 0;
      for (const auto& b : p.blocks())
        if (std::find(q.blocks().begin(), q.blocks().end(), b) !=
            q.blocks().end())
          ++common;
      Fraction f = Fraction::of(common, p.block_count());
      if (out.big_m < f) out.big_m = f;
    }
  return out;
}

// Theorem gate: non-synchronizing with m(G) = 2 and M(G) <= 1/2, the
// hypotheses under which every non-uniform map is synchronized.
inline bool theorem6_gate(const PermGroup& g, const SyncCaps& caps = {}) {
  auto witnesses = find_nonsync_partitions(g, caps);
  if (witnesses.empty()) return false;
  SyncParams p = sync_params(g, witnesses);
  return p.m_g == 2 && p.big_m <= Fraction::of(1, 2);
}

// Every vertex of X must have a neighbourhood containing a connected
// component that is a complete graph; when X is edge-transitive the whole
// neighbourhood must be a disjoint union of complete graphs.
inline bool neighborhood_structure_check(const Graph& x,
                                         bool edge_transitive) {
  for (int v = 0; v < x.size(); ++v) {
    auto nb = x.neighbors(v).to_points();
    if (nb.empty()) continue;
    Graph h = induced(x, nb);
    // Connected components of h.
    std::vector<int> comp(nb.size(), -1);
    int ncomp = 0;
    for (int s = 0; s < h.size(); ++s) {
      if (comp[size_t(s)] >= 0) continue;
      std::vector<int> stack{s};
      comp[size_t(s)] = ncomp;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        h.neighbors(u).for_each([&](int w) {
          if (comp[size_t(w)] < 0) {
            comp[size_t(w)] = ncomp;
            stack.push_back(w);
          }
        });
      }
      ++ncomp;
    }
    auto component_complete = [&](int c) {
      std::vector<int> members;
      for (size_t i = 0; i < comp.size(); ++i)
        if (comp[i] == c) members.push_back(int(i));
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          if (!h.adjacent(members[i], members[j])) return false;
      return true;
    };
    bool any_complete = false;
    bool all_complete = true;
    for (int c = 0; c < ncomp; ++c) {
      if (component_complete(c))
        any_complete = true;
      else
        all_complete = false;
    }
    if (!any_complete) return false;
    if (edge_transitive && !all_complete) return false;
  }
  return true;
}

struct SampleFailure {
  Transformation map;
  bool forced = false;
  std::vector<std::pair<int, int>> blocking_pairs;
  int gr_omega = 0;
  int gr_chi = 0;
  bool generators_in_end = false;

  SampleFailure() : map(0) {}
};

struct SampleReport {
  int trials = 0;
  uint64_t seed = 0;
  int rejected_uniform = 0;
  bool group_transitive = true;
  bool group_primitive = true;
  int failures = 0;
  std::vector<SampleFailure> cases;
};

// Draws `trials` maps with non-uniform kernel uniformly at random (rejection
// sampling on kernels) and runs synchronizes on each; `forced` maps are
// checked first. Failures carry the graph evidence: the monoid's graph
// Gr(<G,t>) with its clique and chromatic numbers and the endomorphism check
// on the generators.
inline SampleReport almost_sync_sample(
    const PermGroup& g, int trials, uint64_t seed,
    const std::vector<Transformation>& forced = {}) {
  SampleReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.group_transitive = g.is_transitive();
  rep.group_primitive = rep.group_transitive && g.is_primitive();

  auto run_one = [&](const Transformation& t, bool was_forced) {
    SynchronizesResult sr = synchronizes(g, t);
    if (sr.synchronizes) return;
    SampleFailure f;
    f.map = t;
    f.forced = was_forced;
    f.blocking_pairs = sr.blocking_pairs;
    GroupMapSystem sys = GroupMapSystem::make(g, t);
    Graph gr = gr_of_monoid(sys.gens);
    f.gr_omega = clique_number(gr).omega;
    f.gr_chi = chromatic_number(gr).chi;
    f.generators_in_end = true;
    for (const auto& m : sys.gens.maps)
      if (!is_endomorphism(gr, m.images())) f.generators_in_end = false;
    rep.cases.push_back(std::move(f));
    ++rep.failures;
  };

  for (const auto& t : forced) run_one(t, true);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i)
    run_one(random_nonuniform_transformation(rng, g.degree(),
                                             &rep.rejected_uniform),
            false);
  return rep;
}

// Any two parts of two partitions sharing a common G-regular section either
// meet in at most one point or coincide.
inline bool verify_2intersect(const std::vector<NonSyncWitness>& witnesses) {
  for (size_t i = 0; i < witnesses.size(); ++i)
    for (size_t j = i + 1; j < witnesses.size(); ++j) {
      const auto& a = witnesses[i];
      const auto& b = witnesses[j];
      bool share = false;
      for (const auto& s : a.sections)
        if (std::find(b.sections.begin(), b.sections.end(), s) !=
            b.sections.end()) {
          share = true;
          break;
        }
      if (!share) continue;
      for (const auto& pa : a.partition.blocks())
        for (const auto& pb : b.partition.blocks()) {
          std::vector<int> inter;
          std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(),
                                std::back_inserter(inter));
          if (inter.size() >= 2 && pa != pb) return false;
        }
    }
  return true;
}

}  // namespace synckit
