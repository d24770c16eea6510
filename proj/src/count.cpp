#include "rmatch/count.hpp"

#include <algorithm>
#include <queue>

namespace rmatch {

namespace {

void check_r(int r) {
  if (r < 1) throw InputError("r must be >= 1");
}

// Folds one child profile into the accumulator profile of its parent.
//
// Merging with the connecting edge unselected: a pair (a, d) is feasible iff
// a + d + 1 >= r under saturation, and lands in state min(a, d+1). Selecting
// the connecting edge needs both sides clear (a = d = r) and lands in state
// 0. Suffix sums keep this at O(r) BigCount multiplications per child.
DpProfile merge_child(const DpProfile& acc, const DpProfile& child, int r) {
  std::vector<BigCount> acc_suffix(r + 2), child_suffix(r + 2);
  for (int i = r; i >= 0; --i) {
    acc_suffix[i] = acc_suffix[i + 1] + acc[i];
    child_suffix[i] = child_suffix[i + 1] + child[i];
  }

  DpProfile out(r + 1);
  // Unselected, accumulator side stays nearest: child states d with
  // d+1 >= a and a+d+1 >= r.
  for (int a = 0; a <= r; ++a) {
    if (acc[a].is_zero()) continue;
    int lb = std::max({0, a - 1, r - 1 - a});
    out[a] += acc[a] * child_suffix[lb];
  }
  // Unselected, child side becomes nearest: accumulator states a > d+1
  // with a+d+1 >= r.
  for (int d = 0; d + 2 <= r; ++d) {
    if (child[d].is_zero()) continue;
    int lb = std::max(d + 2, r - 1 - d);
    out[d + 1] += child[d] * acc_suffix[lb];
  }
  out[0] += acc[r] * child[r];
  return out;
}

}  // namespace

DpProfile rooted_profile(const Tree& t, int r, int root) {
  check_r(r);
  int n = t.vertex_count();
  if (root < 0 || root >= n) throw InputError("root out of range");

  std::vector<int> order, parent(n, -1);
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : t.neighbors(order[i]))
      if (parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }

  std::vector<DpProfile> profile(n);
  for (std::size_t i = order.size(); i-- > 0;) {
    int v = order[i];
    DpProfile acc(r + 1);
    acc[r] = BigCount(1);
    for (int w : t.neighbors(v))
      if (w != parent[v]) {
        acc = merge_child(acc, profile[w], r);
        profile[w].clear();
      }
    profile[v] = std::move(acc);
  }
  return profile[root];
}

BigCount count_r_matchings_rooted(const Tree& t, int r, int root) {
  DpProfile p = rooted_profile(t, r, root);
  BigCount total;
  for (const BigCount& c : p) total += c;
  return total;
}

BigCount count_r_matchings(const Tree& t, int r) {
  return count_r_matchings_rooted(t, r, 0);
}

BigCount brute_force_count(const Tree& t, int r) {
  check_r(r);
  int n = t.vertex_count();
  if (n > kBruteForceMaxVertices)
    throw InputError("brute force capped at " +
                     std::to_string(kBruteForceMaxVertices) + " vertices");
  int m = t.edge_count();
  if (m == 0) return BigCount(1);

  // All-pairs vertex distances, then the edge distance matrix.
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : t.neighbors(v))
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push(w);
        }
    }
  }
  std::vector<std::vector<int>> edist(m, std::vector<int>(m, 0));
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      auto [a, b] = t.edges()[e];
      auto [c, d] = t.edges()[f];
      int x = std::min(std::min(dist[a][c], dist[a][d]),
                       std::min(dist[b][c], dist[b][d]));
      edist[e][f] = edist[f][e] = x;
    }

  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
    bool ok = true;
    for (int e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      for (int f = e + 1; f < m && ok; ++f)
        if ((mask >> f & 1) && edist[e][f] < r) ok = false;
    }
    if (ok) ++count;
  }
  return BigCount(count);
}

}  // namespace rmatch
