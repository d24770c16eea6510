#include "rmatch/free_trees.hpp"

#include <algorithm>

#include "rmatch/canonical.hpp"

namespace rmatch {

namespace {

// Beyer-Hedetniemi successor in the descending canonical order of rooted
// level sequences. p < 0 means "locate the last entry above 1". Returns
// false when s is the last sequence (the star).
bool next_rooted(std::vector<int>& s, int p) {
  if (p < 0) {
    p = static_cast<int>(s.size()) - 1;
    while (p > 0 && s[p] == 1) --p;
  }
  if (p <= 0) return false;
  int q = p - 1;
  while (s[q] != s[p] - 1) --q;
  for (std::size_t i = p; i < s.size(); ++i) s[i] = s[i - p + q];
  return true;
}

// Splits a rooted sequence into the root's first subtree (levels shifted to
// start at 0) and the remainder with the root kept.
void split_tree(const std::vector<int>& s, std::vector<int>& left,
                std::vector<int>& rest) {
  std::size_t m = s.size();
  bool one_seen = false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == 1) {
      if (one_seen) {
        m = i;
        break;
      }
      one_seen = true;
    }
  left.assign(s.begin() + 1, s.begin() + m);
  for (int& x : left) --x;
  rest.clear();
  rest.push_back(0);
  rest.insert(rest.end(), s.begin() + m, s.end());
}

// A rooted sequence represents its free tree canonically iff the first
// subtree is no higher than the rest, with size then lexicographic
// comparison breaking height ties.
bool is_free_canonical(const std::vector<int>& s, std::vector<int>& left,
                       std::vector<int>& rest) {
  split_tree(s, left, rest);
  int left_h = *std::max_element(left.begin(), left.end());
  int rest_h = *std::max_element(rest.begin(), rest.end());
  if (rest_h < left_h) return false;
  if (rest_h == left_h) {
    if (left.size() > rest.size()) return false;
    if (left.size() == rest.size() && left > rest) return false;
  }
  return true;
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n, int enum_limit)
    : FreeTreeStream(n, 0, 1, enum_limit) {}

FreeTreeStream::FreeTreeStream(int n, int offset, int stride, int enum_limit)
    : n_(n), offset_(offset), stride_(stride) {
  if (n < 1) throw InputError("free-tree enumeration needs n >= 1");
  if (n > enum_limit)
    throw InputError("n = " + std::to_string(n) +
                     " above enumeration limit " + std::to_string(enum_limit));
  if (offset < 0 || stride < 1) throw InputError("bad sub-stream parameters");
  reset();
}

void FreeTreeStream::reset() {
  // Start at the path rooted at its center, the first sequence in order.
  state_.clear();
  for (int i = 0; i <= n_ / 2; ++i) state_.push_back(i);
  for (int i = 1; i < (n_ + 1) / 2; ++i) state_.push_back(i);
  skipped_offset_ = false;
}

bool FreeTreeStream::advance_raw(std::vector<int>& out) {
  if (state_.empty()) return false;
  if (n_ == 1) {
    out = {0};
    state_.clear();
    return true;
  }
  std::vector<int> left, rest;
  while (!is_free_canonical(state_, left, rest)) {
    // WROM jump: skip the rooted sequences sharing this non-canonical first
    // subtree, patching the tail back to the path shape when the first
    // subtree was deeper than a single chain step.
    int p = static_cast<int>(left.size());
    bool deep = state_[p] > 2;
    next_rooted(state_, p);
    if (deep) {
      split_tree(state_, left, rest);
      int h = *std::max_element(left.begin(), left.end());
      int k = h + 2;  // overwrite the last h+1 entries with 1..h+1
      for (int i = 1; i < k; ++i)
        state_[state_.size() - (k - 1) + (i - 1)] = i;
    }
  }
  out = state_;
  if (!next_rooted(state_, -1)) state_.clear();
  return true;
}

bool FreeTreeStream::next_levels(std::vector<int>& out) {
  if (!skipped_offset_) {
    for (int i = 0; i < offset_; ++i)
      if (!advance_raw(out)) return false;
    skipped_offset_ = true;
    return advance_raw(out);
  }
  for (int i = 1; i < stride_; ++i)
    if (!advance_raw(out)) return false;
  return advance_raw(out);
}

bool FreeTreeStream::next(Tree& out) {
  std::vector<int> levels;
  if (!next_levels(levels)) return false;
  out = tree_from_levels(levels);
  return true;
}

std::uint64_t count_free_trees(int n, int enum_limit) {
  FreeTreeStream stream(n, enum_limit);
  std::uint64_t count = 0;
  std::vector<int> levels;
  while (stream.next_levels(levels)) ++count;
  return count;
}

}  // namespace rmatch
