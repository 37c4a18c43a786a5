#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "synckit/errors.hpp"

namespace synckit {

// Exact cover by dancing links (Algorithm X). Items are 0..m-1, all primary;
// options carry an integer tag returned in solutions. Enumeration order is
// deterministic: the column with fewest options is chosen, ties to the
// leftmost item.
class ExactCover {
 public:
  explicit ExactCover(int items) : items_(items) {
    // Node 0..items-1 are column heads; node items is the root.
    const int head = items;
    l_.resize(size_t(items) + 1);
    r_.resize(size_t(items) + 1);
    u_.resize(size_t(items) + 1);
    d_.resize(size_t(items) + 1);
    col_.resize(size_t(items) + 1);
    len_.assign(size_t(items), 0);
    for (int c = 0; c <= items; ++c) {
      l_[size_t(c)] = c == 0 ? head : c - 1;
      r_[size_t(c)] = c == items ? 0 : c + 1;
      u_[size_t(c)] = c;
      d_[size_t(c)] = c;
      col_[size_t(c)] = c;
    }
    if (items == 0) {
      l_[size_t(head)] = head;
      r_[size_t(head)] = head;
    }
  }

  void add_option(const std::vector<int>& option_items, int tag) {
    if (option_items.empty())
      throw std::invalid_argument("empty exact-cover option");
    int first = -1;
    for (int item : option_items) {
      if (item < 0 || item >= items_)
        throw std::invalid_argument("exact-cover item out of range");
      int node = int(l_.size());
      l_.push_back(node);
      r_.push_back(node);
      u_.push_back(u_[size_t(item)]);
      d_.push_back(item);
      col_.push_back(item);
      d_[size_t(u_[size_t(item)])] = node;
      u_[size_t(item)] = node;
      ++len_[size_t(item)];
      if (first < 0) {
        first = node;
        row_of_.push_back(tag);
      } else {
        l_[size_t(node)] = l_[size_t(first)];
        r_[size_t(node)] = first;
        r_[size_t(l_[size_t(first)])] = node;
        l_[size_t(first)] = node;
      }
      node_row_.push_back(int(row_of_.size()) - 1);
    }
  }

  // Calls f with the sorted tag list of every exact cover. f returns false
  // to stop the enumeration.
  template <typename F>
  void solve(F f, uint64_t cap_nodes = 100'000'000) {
    uint64_t nodes = 0;
    std::vector<int> chosen;
    bool stop = false;
    search(f, chosen, cap_nodes, nodes, stop);
  }

  uint64_t solution_count(uint64_t cap_nodes = 100'000'000) {
    uint64_t count = 0;
    solve(
        [&](const std::vector<int>&) {
          ++count;
          return true;
        },
        cap_nodes);
    return count;
  }

 private:
  template <typename F>
  void search(F& f, std::vector<int>& chosen, uint64_t cap, uint64_t& nodes,
              bool& stop) {
    if (stop) return;
    const int head = items_;
    if (r_[size_t(head)] == head) {
      std::vector<int> tags;
      tags.reserve(chosen.size());
      for (int row : chosen) tags.push_back(row_of_[size_t(row)]);
      std::sort(tags.begin(), tags.end());
      if (!f(tags)) stop = true;
      return;
    }
    int best = -1, best_len = -1;
    for (int c = r_[size_t(head)]; c != head; c = r_[size_t(c)])
      if (best < 0 || len_[size_t(c)] < best_len) {
        best = c;
        best_len = len_[size_t(c)];
      }
    if (best_len == 0) return;
    cover(best);
    for (int node = d_[size_t(best)]; node != best; node = d_[size_t(node)]) {
      if (++nodes > cap) {
        uncover(best);
        throw cap_exceeded("exact-cover search cap exceeded");
      }
      chosen.push_back(node_row_[size_t(node) - size_t(items_) - 1]);
      for (int j = r_[size_t(node)]; j != node; j = r_[size_t(j)])
        cover(col_[size_t(j)]);
      search(f, chosen, cap, nodes, stop);
      for (int j = l_[size_t(node)]; j != node; j = l_[size_t(j)])
        uncover(col_[size_t(j)]);
      chosen.pop_back();
      if (stop) break;
    }
    uncover(best);
  }

  void cover(int c) {
    r_[size_t(l_[size_t(c)])] = r_[size_t(c)];
    l_[size_t(r_[size_t(c)])] = l_[size_t(c)];
    for (int i = d_[size_t(c)]; i != c; i = d_[size_t(i)])
      for (int j = r_[size_t(i)]; j != i; j = r_[size_t(j)]) {
        u_[size_t(d_[size_t(j)])] = u_[size_t(j)];
        d_[size_t(u_[size_t(j)])] = d_[size_t(j)];
        --len_[size_t(col_[size_t(j)])];
      }
  }

  void uncover(int c) {
    for (int i = u_[size_t(c)]; i != c; i = u_[size_t(i)])
      for (int j = l_[size_t(i)]; j != i; j = l_[size_t(j)]) {
        ++len_[size_t(col_[size_t(j)])];
        u_[size_t(d_[size_t(j)])] = j;
        d_[size_t(u_[size_t(j)])] = j;
      }
    r_[size_t(l_[size_t(c)])] = c;
    l_[size_t(r_[size_t(c)])] = c;
  }

  int items_;
  std::vector<int> l_, r_, u_, d_, col_;
  std::vector<int> len_;
  std::vector<int> row_of_;   // tag per row
  std::vector<int> node_row_;  // row index per non-head node
};

}  // namespace synckit
