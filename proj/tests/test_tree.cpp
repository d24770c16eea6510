#include <doctest.h>

#include <sstream>

#include "rmatch/free_trees.hpp"
#include "rmatch/tree.hpp"

using namespace rmatch;

TEST_CASE("build_tree accepts valid trees") {
  Tree p1 = Tree::build(1, {});
  CHECK(p1.vertex_count() == 1);
  CHECK(p1.edge_count() == 0);

  Tree p4 = Tree::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.degree(1) == 2);
  CHECK(p4.leaf_count() == 2);
}

TEST_CASE("build_tree rejects each malformed input with its own error") {
  auto code_of = [](int n, std::vector<std::pair<int, int>> edges) {
    try {
      Tree::build(n, std::move(edges));
    } catch (const TreeError& e) {
      return e.code();
    }
    FAIL("expected a TreeError");
    return TreeError::Code::EdgeCount;
  };
  CHECK(code_of(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}) ==
        TreeError::Code::EdgeCount);
  CHECK(code_of(4, {{0, 1}, {1, 2}}) == TreeError::Code::EdgeCount);
  CHECK(code_of(4, {{0, 1}, {1, 2}, {1, 4}}) == TreeError::Code::LabelRange);
  CHECK(code_of(4, {{0, 1}, {1, 2}, {2, 1}}) == TreeError::Code::DuplicateEdge);
  CHECK(code_of(4, {{0, 1}, {1, 2}, {2, 2}}) == TreeError::Code::Cycle);
  CHECK(code_of(4, {{0, 1}, {1, 2}, {0, 2}}) == TreeError::Code::Cycle);
  CHECK(code_of(4, {{0, 1}, {2, 3}, {3, 2}}) == TreeError::Code::DuplicateEdge);
  // a triangle away from vertex 0 surfaces as unreachable vertices
  CHECK(code_of(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}}) ==
        TreeError::Code::Disconnected);
  // a cycle through vertex 0's own component is reported as such
  CHECK(code_of(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}}) == TreeError::Code::Cycle);
}

TEST_CASE("generators have the documented shapes") {
  CHECK(spider(3, 2).vertex_count() == 7);
  CHECK(spider(3, 3).vertex_count() == 10);
  CHECK(spider(3, 3).degree(0) == 3);
  CHECK(spider(1, 3).degree(0) == 3);   // K_{1,3}
  CHECK(star(6).degree(0) == 5);
  CHECK(path(1).vertex_count() == 1);
  CHECK_THROWS_AS(spider(0, 2), InputError);
  CHECK_THROWS_AS(path(0), InputError);
}

TEST_CASE("edge_distance on the named examples") {
  Tree p4 = path(4);
  CHECK(edge_distance(p4, {0}, {1}) == 0);  // incident edges
  CHECK(edge_distance(p4, {0}, {2}) == 1);
  Tree p7 = path(7);
  CHECK(edge_distance(p7, {0}, {5}) == 4);
  CHECK_THROWS_AS(edge_distance(p4, {0}, {7}), InputError);
  CHECK_THROWS_AS(edge_distance(p4, {1}, {1}), InputError);
}

TEST_CASE("edge_distance is symmetric and nearly triangular on all small trees") {
  for (int n = 2; n <= 8; ++n) {
    for_each_free_tree(n, [&](const Tree& t) {
      int m = t.edge_count();
      for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
          int d = edge_distance(t, {e}, {f});
          CHECK(d == edge_distance(t, {f}, {e}));
          for (int g = 0; g < m; ++g) {
            if (g == e || g == f) continue;
            CHECK(d <= edge_distance(t, {e}, {g}) +
                           edge_distance(t, {g}, {f}) + 2);
          }
        }
    });
  }
}

TEST_CASE("diameter of the named families") {
  for (int n = 1; n <= 9; ++n) CHECK(diameter(path(n)) == n - 1);
  CHECK(diameter(star(6)) == 2);  // K_{1,5}
  CHECK(diameter(spider(4, 3)) == 8);
  for (int a = 1; a <= 4; ++a) {
    CHECK(diameter(spider(a, 1)) == a);
    for (int b = 2; b <= 4; ++b) CHECK(diameter(spider(a, b)) == 2 * a);
  }
}

TEST_CASE("tree text format round trip and comments") {
  Tree t = spider(2, 3);
  std::ostringstream out;
  write_tree(out, t);
  std::istringstream in(out.str());
  Tree back = read_tree(in);
  CHECK(back.edges() == t.edges());

  std::istringstream commented("# spider\n3 # n\n0 1\n# middle\n1 2\n");
  CHECK(read_tree(commented).vertex_count() == 3);

  std::istringstream garbage("3\n0 1\n");
  CHECK_THROWS_AS(read_tree(garbage), InputError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_tree(empty), InputError);
}
