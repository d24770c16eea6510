#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rmatch/tree.hpp"

namespace rmatch {

// Canonical level sequence: equal codes iff the trees are isomorphic.
// Root level is 0; serialized as comma-joined decimals, e.g. "0,1,2,2,1".
struct CanonicalCode {
  std::vector<int> levels;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.levels <=> b.levels;
  }

  std::string str() const;
  static CanonicalCode parse(const std::string& s);
};

// The one or two vertices minimizing the largest component of T - v.
std::vector<int> centroids(const Tree& t);

// Centroid-rooted canonical form: subtrees ordered by descending level
// sequence; bicentroidal trees take the lexicographically larger rooting.
CanonicalCode canonical_code(const Tree& t);

// Decodes a level sequence (canonical or not) back into a tree: vertex i's
// parent is the nearest j < i with levels[j] == levels[i] - 1.
Tree tree_from_levels(const std::vector<int>& levels);

}  // namespace rmatch
