#pragma once

#include <vector>

#include "rmatch/bigcount.hpp"
#include "rmatch/tree.hpp"

namespace rmatch {

// Per-vertex DP state vector, indexed by the saturated distance d in 0..r
// from the subtree root to the nearest endpoint of a selected edge; d = r
// means "no selected edge, or nearest endpoint at distance >= r". Entry d
// counts the partial selections of the processed subtree that end in state d.
using DpProfile = std::vector<BigCount>;

// Number of edge subsets (including the empty one) in which every pair of
// edges is at tree distance >= r. Deterministic and independent of root
// choice and edge order; O(n*r) BigCount multiplications.
BigCount count_r_matchings(const Tree& t, int r);

// Same count evaluated from an explicit root; exposed so tests can assert
// root independence.
BigCount count_r_matchings_rooted(const Tree& t, int r, int root);

// Final profile at the root; its entries sum to the count.
DpProfile rooted_profile(const Tree& t, int r, int root);

inline constexpr int kBruteForceMaxVertices = 26;

// Exhaustive 2^(n-1) subset scan with pairwise edge-distance checks. The
// test oracle for count_r_matchings; n <= kBruteForceMaxVertices.
BigCount brute_force_count(const Tree& t, int r);

}  // namespace rmatch
