#include "rmatch/path_series.hpp"

#include <ostream>

#include "rmatch/tree.hpp"

namespace rmatch {

const BigCount& PathSeries::at(int n) const {
  if (n < 0 || n > n_max())
    throw InputError("path series index " + std::to_string(n) +
                     " out of range");
  return values[n];
}

PathSeries path_count_series(int r, int n_max) {
  if (r < 1) throw InputError("r must be >= 1");
  if (n_max < 0) throw InputError("n_max must be >= 0");
  PathSeries s;
  s.r = r;
  s.values.reserve(n_max + 1);
  s.values.emplace_back(1);
  for (int n = 1; n <= n_max; ++n) {
    if (n <= r)
      s.values.emplace_back(static_cast<std::uint64_t>(n));
    else
      s.values.push_back(s.values[n - 1] + s.values[n - r - 1]);
  }
  return s;
}

bool verify_doubling(int r, int n) {
  if (r < 1) throw InputError("r must be >= 1");
  if (n < 2 * r)
    throw InputError("doubling identity needs n >= 2r");
  PathSeries s = path_count_series(r, 2 * n);
  BigCount rhs = s.at(n - r) * s.at(n);
  for (int i = 0; i <= r; ++i) rhs += s.at(n - 2 * r + i) * s.at(n - i);
  return s.at(2 * n) == rhs;
}

void write_csv(std::ostream& out, const PathSeries& series) {
  out << "n,s_" << series.r << "\n";
  for (int n = 0; n <= series.n_max(); ++n)
    out << n << "," << series.values[n].str() << "\n";
}

}  // namespace rmatch
