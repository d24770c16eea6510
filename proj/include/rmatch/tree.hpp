#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rmatch {

// Anything the caller did wrong: bad parameters, malformed files, limits.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tree construction failure, one code per condition.
class TreeError : public InputError {
 public:
  enum class Code {
    EdgeCount,      // |edges| != n-1
    LabelRange,     // endpoint outside 0..n-1
    DuplicateEdge,  // same unordered pair twice
    Cycle,          // cycle reachable from vertex 0 (includes self-loops)
    Disconnected,   // some vertex unreachable from vertex 0
  };
  TreeError(Code code, const std::string& msg) : InputError(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Positional handle for an edge: index into Tree::edges().
struct EdgeId {
  int index = 0;
};

// Immutable labeled tree on vertices 0..n-1. Edge identity is positional in
// the edge list; generators document their edge order.
class Tree {
 public:
  // Validates and builds; throws TreeError, preserving the given edge order.
  static Tree build(int n, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return n_ - 1; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(EdgeId e) const;

  // Neighbors in ascending label order.
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  int degree(int v) const { return off_[v + 1] - off_[v]; }
  int leaf_count() const;

 private:
  Tree() = default;
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_;  // CSR neighbor storage
  std::vector<int> off_;  // n+1 offsets into adj_
};

// Generators. Edge orders:
//   path(n):      (0,1), (1,2), ..., (n-2,n-1)
//   star(n):      (0,1), (0,2), ..., (0,n-1); vertex 0 is the center
//   spider(a,b):  leg j (0-based) is the chain 0, ja+1, ja+2, ..., ja+a,
//                 emitted leg by leg; vertex 0 is the center
Tree path(int n);
Tree star(int n);
Tree spider(int a, int b);

// Minimum tree distance between an endpoint of e and an endpoint of f.
// Incident edges have distance 0. Requires e != f.
int edge_distance(const Tree& t, EdgeId e, EdgeId f);

// Length in edges of a longest path; 0 for the single vertex.
int diameter(const Tree& t);

// Text format: optional '#' comments, first value n, then n-1 lines "u v".
Tree read_tree(std::istream& in);
Tree read_tree_file(const std::string& path);
void write_tree(std::ostream& out, const Tree& t);

}  // namespace rmatch
