#include "rmatch/tree.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace rmatch {

Tree Tree::build(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw InputError("vertex count must be >= 1");
  if (static_cast<int>(edges.size()) != n - 1)
    throw TreeError(TreeError::Code::EdgeCount,
                    "expected " + std::to_string(n - 1) + " edges, got " +
                        std::to_string(edges.size()));
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw TreeError(TreeError::Code::LabelRange,
                      "edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") outside vertex range 0.." + std::to_string(n - 1));
    if (u == v)
      throw TreeError(TreeError::Code::Cycle,
                      "self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw TreeError(TreeError::Code::DuplicateEdge,
                      "duplicate edge (" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ")");
  }

  Tree t;
  t.n_ = n;
  t.edges_ = std::move(edges);
  t.off_.assign(n + 1, 0);
  for (auto [u, v] : t.edges_) {
    ++t.off_[u + 1];
    ++t.off_[v + 1];
  }
  for (int i = 0; i < n; ++i) t.off_[i + 1] += t.off_[i];
  t.adj_.resize(2 * (n - 1));
  std::vector<int> fill(t.off_.begin(), t.off_.end() - 1);
  for (auto [u, v] : t.edges_) {
    t.adj_[fill[u]++] = v;
    t.adj_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(t.adj_.begin() + t.off_[v], t.adj_.begin() + t.off_[v + 1]);

  // n-1 loop-free distinct edges: connected from vertex 0 iff acyclic. Report
  // a cycle when BFS from 0 re-enters its own component, otherwise the
  // unreached vertices are a separate component.
  std::vector<int> parent(n, -2);
  std::queue<int> q;
  q.push(0);
  parent[0] = -1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    bool parent_skipped = false;
    for (int w : t.neighbors(v)) {
      if (w == parent[v] && !parent_skipped) {
        parent_skipped = true;  // parallel edges were rejected above
        continue;
      }
      if (parent[w] != -2)
        throw TreeError(TreeError::Code::Cycle,
                        "cycle through vertex " + std::to_string(w));
      parent[w] = v;
      ++reached;
      q.push(w);
    }
  }
  if (reached != n)
    throw TreeError(TreeError::Code::Disconnected,
                    std::to_string(n - reached) +
                        " vertices unreachable from vertex 0");
  return t;
}

std::pair<int, int> Tree::edge(EdgeId e) const {
  if (e.index < 0 || e.index >= edge_count())
    throw InputError("edge index " + std::to_string(e.index) +
                     " out of range");
  return edges_[e.index];
}

int Tree::leaf_count() const {
  if (n_ == 1) return 1;
  int k = 0;
  for (int v = 0; v < n_; ++v)
    if (degree(v) == 1) ++k;
  return k;
}

Tree path(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  e.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree::build(n, std::move(e));
}

Tree star(int n) {
  if (n < 1) throw InputError("star needs n >= 1");
  std::vector<std::pair<int, int>> e;
  e.reserve(n - 1);
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Tree::build(n, std::move(e));
}

Tree spider(int a, int b) {
  if (a < 1 || b < 1) throw InputError("spider needs a >= 1 and b >= 1");
  std::vector<std::pair<int, int>> e;
  e.reserve(a * b);
  for (int j = 0; j < b; ++j) {
    int prev = 0;
    for (int k = 1; k <= a; ++k) {
      int v = j * a + k;
      e.emplace_back(prev, v);
      prev = v;
    }
  }
  return Tree::build(a * b + 1, std::move(e));
}

int edge_distance(const Tree& t, EdgeId e, EdgeId f) {
  auto [eu, ev] = t.edge(e);
  auto [fu, fv] = t.edge(f);
  if (e.index == f.index) throw InputError("edge_distance needs two distinct edges");
  // Multi-source BFS from e's endpoints until either endpoint of f appears.
  std::vector<int> dist(t.vertex_count(), -1);
  std::queue<int> q;
  dist[eu] = dist[ev] = 0;
  q.push(eu);
  q.push(ev);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == fu || v == fv) return dist[v];
    for (int w : t.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return -1;  // unreachable in a tree
}

namespace {

std::pair<int, int> farthest_from(const Tree& t, int src) {
  std::vector<int> dist(t.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  int best = src;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (dist[v] > dist[best]) best = v;
    for (int w : t.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return {best, dist[best]};
}

}  // namespace

int diameter(const Tree& t) {
  auto [far1, d1] = farthest_from(t, 0);
  auto [far2, d2] = farthest_from(t, far1);
  return d2;
}

Tree read_tree(std::istream& in) {
  std::vector<long long> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    long long x;
    while (ls >> x) tokens.push_back(x);
    if (!ls.eof())
      throw InputError("malformed tree file: non-numeric data in \"" + line +
                       "\"");
  }
  if (tokens.empty()) throw InputError("malformed tree file: no vertex count");
  long long n = tokens[0];
  if (n < 1 || n > 10'000'000)
    throw InputError("malformed tree file: bad vertex count " +
                     std::to_string(n));
  if (static_cast<long long>(tokens.size()) != 1 + 2 * (n - 1))
    throw InputError("malformed tree file: expected " +
                     std::to_string(2 * (n - 1)) + " endpoint values, got " +
                     std::to_string(tokens.size() - 1));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (long long i = 0; i + 1 < n; ++i)
    edges.emplace_back(static_cast<int>(tokens[1 + 2 * i]),
                       static_cast<int>(tokens[2 + 2 * i]));
  return Tree::build(static_cast<int>(n), std::move(edges));
}

Tree read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open tree file " + path);
  return read_tree(in);
}

void write_tree(std::ostream& out, const Tree& t) {
  out << t.vertex_count() << "\n";
  for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
}

}  // namespace rmatch
