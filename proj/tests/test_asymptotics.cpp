#include <doctest.h>

#include <cmath>

#include "rmatch/asymptotics.hpp"
#include "rmatch/path_series.hpp"
#include "rmatch/tree.hpp"

using namespace rmatch;

TEST_CASE("beta on the printed rows") {
  CHECK(beta_root(2) == doctest::Approx(1.4655712319).epsilon(1e-9));
  CHECK(beta_root(6) == doctest::Approx(1.2554).epsilon(1e-4));
  CHECK(beta_root(11) == doctest::Approx(1.1729).epsilon(1e-4));
}

TEST_CASE("beta residual and monotonicity over a wide range") {
  double prev = 2.0;
  for (int r = 1; r <= 200; ++r) {
    double b = beta_root(r);
    CHECK(b > 1.0);
    CHECK(b < 2.0);
    CHECK(b < prev);
    if (r <= 60) {
      double residual = std::pow(b, r + 1) - std::pow(b, r) - 1.0;
      CHECK(std::fabs(residual) < 1e-10);
    } else {
      double residual = r * std::log(b) + std::log(b - 1.0);
      CHECK(std::fabs(residual) < 1e-10);
    }
    prev = b;
  }
}

TEST_CASE("solve_s on the printed rows, with residual") {
  CHECK(solve_s(2) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
  CHECK(solve_s(3) == doctest::Approx(2.1809).epsilon(1e-4));
  CHECK(solve_s(11) == doctest::Approx(4.8592).epsilon(1e-4));
  for (int r = 2; r <= 60; ++r) {
    double s = solve_s(r);
    CHECK(std::fabs((s + 1) * std::log(s + 1) - s - 0.5 * r) < 1e-11);
    CHECK(s < r);
    CHECK(s > 0);
  }
}

TEST_CASE("the two alpha expressions agree") {
  for (int r = 2; r <= 60; ++r) {
    double s = solve_s(r);
    double via_exp = std::exp(1.0 / (s + 1.0));
    double via_power = std::pow(s + 1.0, 1.0 / (0.5 * r + s));
    CHECK(std::fabs(via_exp - via_power) < 1e-10);
    CHECK(alpha(r) == doctest::Approx(via_exp).epsilon(1e-13));
  }
  CHECK(alpha(2) == doctest::Approx(1.4446).epsilon(1e-4));
  CHECK(alpha(8) == doctest::Approx(1.2228).epsilon(1e-4));
  CHECK(alpha(10) == doctest::Approx(1.1965).epsilon(1e-4));
}

TEST_CASE("growth constant: empirical ratio and both closed forms") {
  GrowthConstant g = growth_constant(2, 200);
  CHECK(g.empirical == doctest::Approx(1.3134).epsilon(2e-4));
  CHECK(g.closed_paper == doctest::Approx(0.8962).epsilon(2e-4));
  CHECK(g.closed_alt == doctest::Approx(beta_root(2) * g.closed_paper).epsilon(1e-12));
  // The ratio the series actually converges to is the alt form.
  CHECK(std::fabs(g.empirical - g.closed_alt) < 1e-6);
  CHECK(std::fabs(g.empirical - g.closed_paper) > 1e-1);
}

TEST_CASE("empirical ratios are Cauchy by n = 300 for r <= 6") {
  for (int r = 1; r <= 6; ++r) {
    PathSeries s = path_count_series(r, 300);
    double log_b = std::log(beta_root(r));
    double prev = std::exp(s.at(299).log() - 298 * log_b);
    double cur = std::exp(s.at(300).log() - 299 * log_b);
    CHECK(std::fabs(cur - prev) < 1e-8);
  }
}

TEST_CASE("extremal bounds on the worked examples") {
  CHECK(upper_bound(2, 1) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  // independent evaluation of (s+1)(e^(1/2) alpha)^3
  double s = solve_s(2);
  double direct = (s + 1) * std::pow(std::exp(0.5) * alpha(2), 3.0);
  CHECK(upper_bound(2, 4) == doctest::Approx(direct).epsilon(1e-12));
  CHECK(upper_bound(2, 4) == doctest::Approx(36.7316).epsilon(1e-4));

  CHECK(lower_bound(5, 1) == doctest::Approx(1.0).epsilon(1e-12));
  double direct_lo = std::pow(std::exp(-1.5) * alpha(2), 9.0);
  CHECK(lower_bound(2, 10) == doctest::Approx(direct_lo).epsilon(1e-12));
  // vacuous at small r: far below the count floor n
  CHECK(lower_bound(2, 10) < 1e-4);

  // r=11, n=100: finite in the exp domain and above the exact path count
  double ub = upper_bound(11, 100);
  CHECK(std::isfinite(ub));
  CHECK(path_count_series(11, 100).at(100).to_double() < ub);
}

TEST_CASE("best leg length on the printed rows") {
  CHECK(best_leg_length(2) == 3);
  CHECK(best_leg_length(7) == 8);
  CHECK(best_leg_length(11) == 11);
  int expect_a[] = {3, 5, 5, 6, 6, 8, 8, 10, 10, 11};  // r = 2..11
  for (int r = 2; r <= 11; ++r) CHECK(best_leg_length(r) == expect_a[r - 2]);
}

TEST_CASE("beta vs per-leg spider growth: the exceptional set is exact") {
  for (int r = 2; r <= 30; ++r) {
    ConstantsRecord rec = table_row(r, 60);
    bool path_side = r == 2 || r == 3 || r == 4 || r == 5 || r == 7 || r == 9;
    if (path_side)
      CHECK(rec.beta > rec.spider_growth);
    else
      CHECK(rec.beta < rec.spider_growth);
  }
}

TEST_CASE("auxiliary inequalities behind the upper bound hold numerically") {
  // (e^(1/r) alpha)^(r/2+s/2+1) >= (e^(1/r) alpha)^(r/2+s/2) + 1, and
  // (e^(1/r) alpha)^(r+w+1) >= (e^(1/r) alpha)^(r+w) + w for 0 <= w <= s.
  for (int r : {10, 100}) {
    double s = solve_s(r);
    double base = std::exp(1.0 / r) * alpha(r);
    double half = 0.5 * r + 0.5 * s;
    CHECK(std::pow(base, half + 1.0) >= std::pow(base, half) + 1.0);
    for (double w : {0.0, std::floor(s)})
      CHECK(std::pow(base, r + w + 1.0) >= std::pow(base, r + w) + w);
  }
}

TEST_CASE("parameter domains") {
  CHECK_THROWS_AS(beta_root(0), InputError);
  CHECK_THROWS_AS(beta_root(2, -1.0), InputError);
  CHECK_THROWS_AS(solve_s(1), InputError);
  CHECK_THROWS_AS(growth_constant(2, 10), InputError);
  CHECK_THROWS_AS(constants_table(1, 5), InputError);
  CHECK_THROWS_AS(constants_table(5, 3), InputError);
}
