#include "rmatch/canonical.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rmatch {

std::string CanonicalCode::str() const {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(levels[i]);
  }
  return out;
}

CanonicalCode CanonicalCode::parse(const std::string& s) {
  CanonicalCode code;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    code.levels.push_back(std::stoi(item));
  return code;
}

std::vector<int> centroids(const Tree& t) {
  int n = t.vertex_count();
  if (n == 1) return {0};
  // Reverse-BFS subtree sizes rooted at 0, then the usual max-component scan.
  std::vector<int> order, parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : t.neighbors(order[i]))
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<int> size(n, 1);
  for (std::size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];

  std::vector<int> best;
  int best_weight = n + 1;
  for (int v = 0; v < n; ++v) {
    int weight = n - size[v];
    for (int w : t.neighbors(v))
      if (w != parent[v]) weight = std::max(weight, size[w]);
    if (weight < best_weight) {
      best_weight = weight;
      best = {v};
    } else if (weight == best_weight) {
      best.push_back(v);
    }
  }
  return best;
}

namespace {

std::vector<int> rooted_code(const Tree& t, int root) {
  int n = t.vertex_count();
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

  // Bottom-up: each vertex's sequence is 0 followed by its children's
  // sequences, largest first, shifted one level down.
  std::vector<std::vector<int>> seq(n);
  for (std::size_t i = order.size(); i-- > 0;) {
    int v = order[i];
    std::vector<std::vector<int>> kids;
    for (int w : t.neighbors(v))
      if (w != parent[v]) kids.push_back(std::move(seq[w]));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::vector<int> s;
    s.reserve(1 + (kids.empty() ? 0 : order.size()));
    s.push_back(0);
    for (const auto& k : kids)
      for (int x : k) s.push_back(x + 1);
    seq[v] = std::move(s);
  }
  return seq[root];
}

}  // namespace

CanonicalCode canonical_code(const Tree& t) {
  std::vector<int> cand = centroids(t);
  CanonicalCode best;
  for (int c : cand) {
    CanonicalCode code{rooted_code(t, c)};
    if (best.levels.empty() || code > best) best = std::move(code);
  }
  return best;
}

Tree tree_from_levels(const std::vector<int>& levels) {
  int n = static_cast<int>(levels.size());
  if (n < 1 || levels[0] != 0) throw InputError("level sequence must start at 0");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  std::vector<int> last_at_level(n, -1);
  last_at_level[0] = 0;
  for (int i = 1; i < n; ++i) {
    int lv = levels[i];
    if (lv < 1 || lv >= n || last_at_level[lv - 1] < 0)
      throw InputError("malformed level sequence at position " +
                       std::to_string(i));
    edges.emplace_back(last_at_level[lv - 1], i);
    last_at_level[lv] = i;
  }
  return Tree::build(n, std::move(edges));
}

}  // namespace rmatch
