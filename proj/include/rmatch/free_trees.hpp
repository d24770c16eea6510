#pragma once

#include <cstdint>
#include <vector>

#include "rmatch/tree.hpp"

namespace rmatch {

inline constexpr int kDefaultEnumLimit = 18;

// Enumerates exactly one representative per isomorphism class of free trees
// on n vertices, in a fixed order, via the level-sequence successor scheme of
// Wright, Richmond, Odlyzko and McKay (constant amortized work per tree).
//
// A stream is single-consumer. Disjoint sub-streams for parallel consumption
// come from the (offset, stride) constructor: sub-stream k of T yields items
// k, k+T, k+2T, ... of the full order, so {0..T-1} partition it.
class FreeTreeStream {
 public:
  explicit FreeTreeStream(int n, int enum_limit = kDefaultEnumLimit);
  FreeTreeStream(int n, int offset, int stride,
                 int enum_limit = kDefaultEnumLimit);

  // Next representative, as a tree or as its raw level sequence (root level
  // 0, preorder). Returns false when the stream is exhausted.
  bool next(Tree& out);
  bool next_levels(std::vector<int>& out);

  void reset();
  int n() const { return n_; }

 private:
  bool advance_raw(std::vector<int>& out);

  int n_;
  int offset_;
  int stride_;
  std::vector<int> state_;  // next rooted candidate; empty once exhausted
  bool skipped_offset_ = false;
};

std::uint64_t count_free_trees(int n, int enum_limit = kDefaultEnumLimit);

template <class F>
void for_each_free_tree(int n, F&& f, int enum_limit = kDefaultEnumLimit) {
  FreeTreeStream stream(n, enum_limit);
  Tree t = path(1);
  while (stream.next(t)) f(t);
}

}  // namespace rmatch
