#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "synckit/dfa.hpp"
#include "synckit/errors.hpp"
#include "synckit/graph.hpp"
#include "synckit/perm.hpp"
#include "synckit/perm_group.hpp"
#include "synckit/transform.hpp"

// File formats use 1-based points; everything in memory is 0-based.

namespace synckit {
namespace io {

namespace detail {

inline std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Reads logical lines: trimmed, comments (#...) and blanks dropped, with the
// 1-based source line retained.
inline std::vector<std::pair<int, std::string>> logical_lines(
    std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (!line.empty()) out.emplace_back(no, line);
  }
  return out;
}

inline std::vector<int> parse_int_list(const std::string& body, int line_no) {
  std::string s = body;
  for (char& c : s)
    if (c == ',') c = ' ';
  std::istringstream iss(s);
  std::vector<int> vals;
  int v;
  while (iss >> v) vals.push_back(v);
  std::string rest;
  if (iss.clear(), iss >> rest)
    throw parse_error("unexpected token '" + rest + "'", line_no);
  return vals;
}

}  // namespace detail

// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; commas allowed.
inline Permutation parse_cycles(const std::string& text, int degree,
                                int line_no) {
  std::vector<int> img(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i) img[size_t(i)] = i;
  size_t pos = 0;
  bool saw_cycle = false;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t') {
      ++pos;
      continue;
    }
    if (c != '(') throw parse_error("expected '(' in cycle notation", line_no);
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw parse_error("unbalanced '(' in cycle notation", line_no);
    auto pts =
        detail::parse_int_list(text.substr(pos + 1, close - pos - 1), line_no);
    for (size_t i = 0; i < pts.size(); ++i) {
      int x = pts[i];
      if (x < 1 || x > degree)
        throw parse_error("point " + std::to_string(x) + " out of range",
                          line_no);
      int y = pts[(i + 1) % pts.size()];
      if (img[size_t(x - 1)] != x - 1)
        throw parse_error("point " + std::to_string(x) + " repeated",
                          line_no);
      img[size_t(x - 1)] = y - 1;
    }
    saw_cycle = true;
    pos = close + 1;
  }
  if (!saw_cycle) throw parse_error("empty permutation line", line_no);
  try {
    return Permutation(std::move(img));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), line_no);
  }
}

// Image-list form "[2,3,1]" with 1-based images.
inline std::vector<int> parse_image_list(const std::string& text,
                                         int line_no) {
  std::string s = detail::strip(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw parse_error("expected [..] image list", line_no);
  auto vals = detail::parse_int_list(s.substr(1, s.size() - 2), line_no);
  for (int& v : vals) {
    if (v < 1 || v > int(vals.size()))
      throw parse_error("image " + std::to_string(v) + " out of range",
                        line_no);
    --v;
  }
  return vals;
}

// Group file: header "degree n", then one permutation per line in cycle
// notation or image-list form.
inline PermGroup read_group(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.empty()) throw parse_error("empty group file", 1);
  auto [hline, header] = lines[0];
  std::istringstream hs(header);
  std::string kw;
  int degree = 0;
  if (!(hs >> kw >> degree) || kw != "degree" || degree <= 0)
    throw parse_error("expected header 'degree n'", hline);
  std::vector<Permutation> gens;
  for (size_t i = 1; i < lines.size(); ++i) {
    auto [no, text] = lines[i];
    if (text.front() == '[') {
      auto img = parse_image_list(text, no);
      if (int(img.size()) != degree)
        throw parse_error("image list length != degree", no);
      try {
        gens.push_back(Permutation(std::move(img)));
      } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), no);
      }
    } else {
      gens.push_back(parse_cycles(text, degree, no));
    }
  }
  if (gens.empty()) throw parse_error("group file has no generators", hline);
  return PermGroup(degree, std::move(gens));
}

// Transformation file: one image list "[1,1,2,3]"; degree is its length.
inline Transformation read_transformation(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.size() != 1)
    throw parse_error("expected exactly one image list",
                      lines.empty() ? 1 : lines[1].first);
  auto [no, text] = lines[0];
  return Transformation(parse_image_list(text, no));
}

// Graph file: header "vertices n", then one "u v" edge per line.
inline Graph read_graph(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.empty()) throw parse_error("empty graph file", 1);
  auto [hline, header] = lines[0];
  std::istringstream hs(header);
  std::string kw;
  int n = 0;
  if (!(hs >> kw >> n) || kw != "vertices" || n <= 0)
    throw parse_error("expected header 'vertices n'", hline);
  Graph g(n);
  for (size_t i = 1; i < lines.size(); ++i) {
    auto [no, text] = lines[i];
    auto vals = detail::parse_int_list(text, no);
    if (vals.size() != 2) throw parse_error("expected 'u v'", no);
    int u = vals[0], v = vals[1];
    if (u < 1 || v < 1 || u > n || v > n || u == v)
      throw parse_error("bad edge", no);
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

// DFA file: "states n", "letters A B ...", then one "<letter> i1 .. in" row
// per letter.
inline Dfa read_dfa(std::istream& in) {
  auto lines = detail::logical_lines(in);
  if (lines.size() < 2) throw parse_error("truncated dfa file", 1);
  auto [l0, h0] = lines[0];
  std::istringstream s0(h0);
  std::string kw;
  int n = 0;
  if (!(s0 >> kw >> n) || kw != "states" || n <= 0)
    throw parse_error("expected header 'states n'", l0);
  auto [l1, h1] = lines[1];
  std::istringstream s1(h1);
  if (!(s1 >> kw) || kw != "letters")
    throw parse_error("expected 'letters ...'", l1);
  std::vector<std::string> letters;
  std::string name;
  while (s1 >> name) letters.push_back(name);
  if (letters.empty()) throw parse_error("no letters declared", l1);

  std::vector<Transformation> delta(letters.size(), Transformation(n));
  std::vector<char> seen(letters.size(), 0);
  for (size_t i = 2; i < lines.size(); ++i) {
    auto [no, text] = lines[i];
    std::istringstream row(text);
    row >> name;
    int li = -1;
    for (size_t j = 0; j < letters.size(); ++j)
      if (letters[j] == name) li = int(j);
    if (li < 0) throw parse_error("unknown letter '" + name + "'", no);
    if (seen[size_t(li)])
      throw parse_error("duplicate row for letter '" + name + "'", no);
    std::vector<int> img;
    int v;
    while (row >> v) {
      if (v < 1 || v > n)
        throw parse_error("state " + std::to_string(v) + " out of range", no);
      img.push_back(v - 1);
    }
    if (int(img.size()) != n)
      throw parse_error("row needs exactly n images", no);
    delta[size_t(li)] = Transformation(std::move(img));
    seen[size_t(li)] = 1;
  }
  for (size_t j = 0; j < letters.size(); ++j)
    if (!seen[j])
      throw parse_error("missing row for letter '" + letters[j] + "'",
                        int(lines.size()));
  return Dfa(n, std::move(letters), std::move(delta));
}

// --- Writers (1-based) ---

inline std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> done(size_t(p.degree()), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (done[size_t(start)] || p[start] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    while (!done[size_t(x)]) {
      done[size_t(x)] = 1;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

inline std::string format_image_list(const std::vector<int>& images) {
  std::string out = "[";
  for (size_t i = 0; i < images.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images[i] + 1);
  }
  return out + "]";
}

inline void write_group(std::ostream& os, const PermGroup& g) {
  os << "degree " << g.degree() << "\n";
  for (const auto& p : g.generators()) os << format_cycles(p) << "\n";
}

inline void write_graph(std::ostream& os, const Graph& g) {
  os << "vertices " << g.size() << "\n";
  for (auto [u, v] : g.edges()) os << u + 1 << " " << v + 1 << "\n";
}

inline void write_dfa(std::ostream& os, const Dfa& a) {
  os << "states " << a.states << "\n";
  os << "letters";
  for (const auto& l : a.letters) os << " " << l;
  os << "\n";
  for (size_t j = 0; j < a.letters.size(); ++j) {
    os << a.letters[j];
    for (int s = 0; s < a.states; ++s) os << " " << a.delta[j][s] + 1;
    os << "\n";
  }
}

inline void write_transformation(std::ostream& os, const Transformation& t) {
  os << format_image_list(t.images()) << "\n";
}

}  // namespace io
}  // namespace synckit
