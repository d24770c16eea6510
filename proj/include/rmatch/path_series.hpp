#pragma once

#include <iosfwd>
#include <vector>

#include "rmatch/bigcount.hpp"

namespace rmatch {

// Exact r-matching counts of paths: values[n] is the count for the n-vertex
// path, with values[0] = 1 by convention so the recurrence
// values[n] = values[n-1] + values[n-r-1] needs no special cases.
struct PathSeries {
  int r = 0;
  std::vector<BigCount> values;

  int n_max() const { return static_cast<int>(values.size()) - 1; }
  const BigCount& at(int n) const;
};

PathSeries path_count_series(int r, int n_max);

// Checks the split-at-the-middle identity
//   s(2n) = s(n-r) s(n) + sum_{i=0..r} s(n-2r+i) s(n-i)
// exactly in BigCount arithmetic. Requires n >= 2r.
bool verify_doubling(int r, int n);

// Columns n, s_r(P_n), exact decimal.
void write_csv(std::ostream& out, const PathSeries& series);

}  // namespace rmatch
