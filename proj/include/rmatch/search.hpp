#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rmatch/bigcount.hpp"
#include "rmatch/canonical.hpp"
#include "rmatch/free_trees.hpp"
#include "rmatch/tree.hpp"

namespace rmatch {

struct SearchOptions {
  int threads = 0;  // 0 = all available
  int enum_limit = kDefaultEnumLimit;
};

// Exact extrema of the r-matching count over all isomorphism classes of
// n-vertex trees, with every attaining class listed by canonical code.
struct SearchReport {
  int n = 0;
  int r = 0;
  BigCount max_count, min_count;
  std::vector<CanonicalCode> argmax_codes, argmin_codes;  // sorted ascending
  BigCount path_count;
  bool path_is_max = false;
  std::uint64_t trees_examined = 0;
};

// OpenMP kernel: the enumeration stream is split into disjoint sub-streams,
// per-thread partial reports are merged with an associative reducer, and the
// attaining-code lists are sorted, so the report is identical for any thread
// count and equal to the serial one.
SearchReport search_extremal(int r, int n, const SearchOptions& opts = {});

// Serial reference implementation, kept as the baseline the parallel kernel
// is tested and benchmarked against.
SearchReport search_extremal_serial(int r, int n,
                                    int enum_limit = kDefaultEnumLimit);

// Evidence scan for the open maximality question at r in {3,4,5,7,9}: one
// report per n <= n_max, no expected outcome asserted.
std::vector<SearchReport> probe_problem_4_4(int r, int n_max,
                                            const SearchOptions& opts = {});

struct SpiderWitness {
  int b = 0;
  BigCount spider_count, path_count;
};

// Smallest b <= b_max with s_r(T_{a,b}) > s_r(P_{ab+1}), exact comparison.
std::optional<SpiderWitness> spider_vs_path(int r, int a, int b_max);

// s_r(T_{a,b})^(1/(ab)); approaches (a - ceil(r/2) + 1)^(1/a) for large b.
double spider_growth_estimate(int r, int a, int b);

enum class TransformStatus {
  Applied,
  InputIsPath,
  LongLegCase,        // some pendant path already has >= r+1 edges
  SeparatedLegsCase,  // every pair of pendant paths sums to > r+1
};

struct TransformOutcome {
  CanonicalCode input_code, output_code;
  BigCount input_count, output_count;
  bool strict = false;  // exactly three leaves and n >= r+3
  Tree output;
};

struct TransformResult {
  TransformStatus status = TransformStatus::InputIsPath;
  std::optional<TransformOutcome> outcome;  // engaged iff Applied
};

// Leaf-reduction rewiring: at a leaf v of the minimal subtree spanning all
// branch vertices, when no pendant path is long (case "LongLeg") and some
// pair of pendant paths has combined length <= r+1, the two shortest legs
// are concatenated into one. The result never has fewer r-matchings and has
// one leaf less. Lowest-labeled qualifying leaf wins.
TransformResult transform_leaf_reduction(const Tree& t, int r);

}  // namespace rmatch
