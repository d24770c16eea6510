#include <doctest.h>

#include "rmatch/count.hpp"
#include "rmatch/free_trees.hpp"
#include "rmatch/path_series.hpp"

using namespace rmatch;

TEST_CASE("counts on the named examples") {
  CHECK(count_r_matchings(path(5), 2) == BigCount(6));
  CHECK(count_r_matchings(star(10), 5) == BigCount(10));  // K_{1,9}, diam 2
  CHECK(count_r_matchings(spider(3, 2), 2) == BigCount(13));  // T_{3,2} = P_7
  CHECK(count_r_matchings(path(1), 3) == BigCount(1));
  CHECK(count_r_matchings(path(1), 1) == BigCount(1));
}

TEST_CASE("brute force on the named examples") {
  CHECK(brute_force_count(path(4), 2) == BigCount(4));
  CHECK(brute_force_count(spider(3, 3), 2) == BigCount(39));
  CHECK(brute_force_count(spider(1, 3), 1) == BigCount(4));  // K_{1,3}
  CHECK_THROWS_AS(brute_force_count(path(27), 2), InputError);
}

TEST_CASE("r = 0 is rejected everywhere") {
  CHECK_THROWS_AS(count_r_matchings(path(4), 0), InputError);
  CHECK_THROWS_AS(brute_force_count(path(4), 0), InputError);
  CHECK_THROWS_AS(path_count_series(0, 5), InputError);
}

TEST_CASE("dp equals the subset oracle on every small class") {
  for (int n = 1; n <= 8; ++n)
    for_each_free_tree(n, [&](const Tree& t) {
      for (int r = 1; r <= 8; ++r)
        CHECK(count_r_matchings(t, r) == brute_force_count(t, r));
    });
}

TEST_CASE("count is independent of the root") {
  for (int n : {7, 9}) {
    for_each_free_tree(n, [&](const Tree& t) {
      BigCount base = count_r_matchings(t, 2);
      for (int root = 1; root < n; root += 3)
        CHECK(count_r_matchings_rooted(t, 2, root) == base);
    });
  }
}

TEST_CASE("root profile sums to the count and has length r+1") {
  Tree t = spider(3, 3);
  for (int r : {1, 2, 5}) {
    DpProfile profile = rooted_profile(t, r, 0);
    CHECK(profile.size() == static_cast<std::size_t>(r + 1));
    BigCount total;
    for (const BigCount& c : profile) total += c;
    CHECK(total == count_r_matchings(t, r));
  }
}

TEST_CASE("count never increases with r and never below n") {
  for (int n = 2; n <= 9; ++n)
    for_each_free_tree(n, [&](const Tree& t) {
      BigCount prev = count_r_matchings(t, 1);
      CHECK(prev >= BigCount(static_cast<std::uint64_t>(n)));
      for (int r = 2; r <= 6; ++r) {
        BigCount cur = count_r_matchings(t, r);
        CHECK(cur <= prev);
        CHECK(cur >= BigCount(static_cast<std::uint64_t>(n)));
        prev = cur;
      }
    });
}

TEST_CASE("removing a leaf never increases the count") {
  for (int n = 3; n <= 9; ++n)
    for_each_free_tree(n, [&](const Tree& t) {
      // Delete the highest-labeled leaf; relabel is unnecessary because the
      // stream's trees always carry a leaf at label n-1 (last in preorder).
      int leaf = -1;
      for (int v = n - 1; v >= 0; --v)
        if (t.degree(v) == 1) {
          leaf = v;
          break;
        }
      REQUIRE(leaf == n - 1);
      std::vector<std::pair<int, int>> edges;
      for (auto [u, v] : t.edges())
        if (u != leaf && v != leaf) edges.emplace_back(u, v);
      Tree smaller = Tree::build(n - 1, std::move(edges));
      for (int r : {1, 2, 3})
        CHECK(count_r_matchings(smaller, r) <= count_r_matchings(t, r));
    });
}

TEST_CASE("path counts reproduce the series, r = 1 gives Fibonacci") {
  for (int r = 1; r <= 12; ++r) {
    PathSeries series = path_count_series(r, 200);
    for (int n = 1; n <= 200; ++n)
      CHECK(count_r_matchings(path(n), r) == series.at(n));
  }
  PathSeries fib = path_count_series(1, 10);
  std::uint64_t expect[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
  for (int n = 0; n <= 10; ++n) CHECK(fib.at(n) == BigCount(expect[n]));
}

TEST_CASE("large instance stays exact and fast") {
  // n = 2000, r = 50: the count has several hundred digits.
  BigCount c = count_r_matchings(path(2000), 50);
  CHECK(c == path_count_series(50, 2000).at(2000));
  CHECK(c.bit_width() > 100);
}
