#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "synckit/transform.hpp"

namespace synckit {

// Word over a named generating set; letters are indices into the set, so
// reports replay exactly.
struct Word {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  size_t length() const { return letters.size(); }

  void append(const Word& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  }

  friend bool operator==(const Word&, const Word&) = default;
};

struct GeneratingSet {
  int degree = 0;
  std::vector<Transformation> maps;
  std::vector<std::string> names;

  GeneratingSet() = default;
  GeneratingSet(std::vector<Transformation> m, std::vector<std::string> n)
      : maps(std::move(m)), names(std::move(n)) {
    if (maps.empty()) throw std::invalid_argument("empty generating set");
    if (names.size() != maps.size())
      throw std::invalid_argument("one name per generator required");
    degree = maps[0].degree();
    for (const auto& t : maps)
      if (t.degree() != degree)
        throw std::invalid_argument("generators have mixed degrees");
  }
};

// Empty word evaluates to the identity.
inline Transformation evaluate(const GeneratingSet& gens, const Word& w) {
  Transformation t(gens.degree);
  for (int letter : w.letters) {
    if (letter < 0 || letter >= int(gens.maps.size()))
      throw std::invalid_argument("word letter out of range");
    t = compose(t, gens.maps[size_t(letter)]);
  }
  return t;
}

inline std::string format_word(const GeneratingSet& gens, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += gens.names[size_t(w.letters[i])];
  }
  return s;
}

}  // namespace synckit
