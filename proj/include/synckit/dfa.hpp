#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "synckit/errors.hpp"
#include "synckit/monoid.hpp"
#include "synckit/transform.hpp"
#include "synckit/word.hpp"

namespace synckit {

// Complete deterministic automaton: every letter acts as a total map on the
// states.
struct Dfa {
  int states = 0;
  std::vector<std::string> letters;
  std::vector<Transformation> delta;  // one transformation per letter

  Dfa() = default;
  Dfa(int n, std::vector<std::string> names, std::vector<Transformation> maps)
      : states(n), letters(std::move(names)), delta(std::move(maps)) {
    if (letters.empty() || letters.size() != delta.size())
      throw std::invalid_argument("one transition map per letter required");
    for (const auto& t : delta)
      if (t.degree() != states)
        throw std::invalid_argument("transition table degree mismatch");
  }

  GeneratingSet letter_set() const {
    return GeneratingSet(delta, letters);
  }

  int letter_index(const std::string& name) const {
    for (size_t i = 0; i < letters.size(); ++i)
      if (letters[i] == name) return int(i);
    throw std::invalid_argument("unknown letter: " + name);
  }
};

inline int run_word(const Dfa& a, int state, const Word& w) {
  for (int letter : w.letters) state = a.delta[size_t(letter)][state];
  return state;
}

// The single state every start reaches under w, if w is a reset word.
inline std::optional<int> reset_target(const Dfa& a, const Word& w) {
  if (a.states == 0) return std::nullopt;
  int target = run_word(a, 0, w);
  for (int s = 1; s < a.states; ++s)
    if (run_word(a, s, w) != target) return std::nullopt;
  return target;
}

// Classic pair criterion: a reset word exists iff every state pair is
// collapsible.
inline bool is_synchronizing_dfa(const Dfa& a) {
  if (a.states <= 1) return true;
  return PairCollapse(a.letter_set()).all_collapsible();
}

// Greedy pair-merging reset word. Length is far below the asserted n^3
// safety bound.
inline Word reset_word(const Dfa& a) {
  Word w;
  if (a.states <= 1) return w;
  GeneratingSet gens = a.letter_set();
  PairCollapse pc(gens);
  if (!pc.all_collapsible())
    throw std::invalid_argument("automaton is not synchronizing");
  Transformation f(a.states);
  detail::greedy_merge(pc, gens, f, w);
  assert(f.is_constant());
  assert(int64_t(w.length()) <=
         int64_t(a.states) * a.states * a.states);
  return w;
}

// Minimum-length reset word by breadth-first search on state subsets.
// Requires n <= 20.
inline Word shortest_reset_word(const Dfa& a, uint64_t cap = uint64_t(1) << 21) {
  if (a.states > 20)
    throw std::invalid_argument("subset BFS is limited to 20 states");
  Word w;
  if (a.states <= 1) return w;
  const uint32_t full = (uint32_t(1) << a.states) - 1;
  const size_t space = size_t(1) << a.states;
  std::vector<int32_t> parent(space, -1);
  std::vector<int8_t> via(space, -1);
  std::vector<char> seen(space, 0);

  // Letter action on subsets.
  auto apply = [&](uint32_t mask, int letter) {
    uint32_t out = 0;
    const Transformation& t = a.delta[size_t(letter)];
    for (int s = 0; s < a.states; ++s)
      if (mask & (uint32_t(1) << s)) out |= uint32_t(1) << t[s];
    return out;
  };

  std::vector<uint32_t> queue{full};
  seen[full] = 1;
  uint64_t explored = 0;
  for (size_t h = 0; h < queue.size(); ++h) {
    uint32_t cur = queue[h];
    if ((cur & (cur - 1)) == 0) {
      // Singleton reached: walk the tree back to the full set.
      for (uint32_t m = cur; m != full; m = uint32_t(parent[m]))
        w.letters.push_back(via[m]);
      std::reverse(w.letters.begin(), w.letters.end());
      return w;
    }
    for (size_t j = 0; j < a.delta.size(); ++j) {
      if (++explored > cap) throw cap_exceeded("subset BFS cap exceeded");
      uint32_t next = apply(cur, int(j));
      if (!seen[next]) {
        seen[next] = 1;
        parent[next] = int32_t(cur);
        via[next] = int8_t(j);
        queue.push_back(next);
      }
    }
  }
  throw std::invalid_argument("automaton is not synchronizing");
}

}  // namespace synckit
