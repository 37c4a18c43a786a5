#pragma once

#include <stdexcept>
#include <string>

namespace synckit {

// A configured search or enumeration cap was hit before the computation
// finished. Never a silent wrong answer: callers either raise the cap or
// report the result as withheld.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The set M of Lemma-3 candidates is empty and the monoid closure was
// exhausted, so no map q exists at all (as opposed to not found under a cap).
struct no_q_exists : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; line is 1-based.
struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
  int line;
};

}  // namespace synckit
