#include "rmatch/asymptotics.hpp"

#include <cmath>

#include "rmatch/path_series.hpp"
#include "rmatch/tree.hpp"

namespace rmatch {

namespace {

// x^(r+1) - x^r - 1, safe only while x^(r+1) stays well inside double range
// (x <= 2, r <= 60 keeps it below 2^61).
double char_poly(int r, double x) {
  return std::pow(x, r + 1) - std::pow(x, r) - 1.0;
}

}  // namespace

bool char_poly_positive(int r, double x) {
  if (x <= 1.0) return false;
  if (r <= 60) return char_poly(r, x) > 0.0;
  // x^r (x-1) > 1  <=>  r log x + log(x-1) > 0; immune to overflow and to
  // the x^(r+1) - x^r cancellation.
  return r * std::log(x) + std::log(x - 1.0) > 0.0;
}

double beta_root(int r, double tol) {
  if (r < 1) throw InputError("r must be >= 1");
  if (!(tol > 0)) throw InputError("tol must be > 0");
  double lo = 1.0, hi = 2.0;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (char_poly_positive(r, mid))
      hi = mid;
    else
      lo = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int step = 0; step < 2; ++step) {
    double next;
    if (r <= 60) {
      double dp = std::pow(x, r - 1) * ((r + 1) * x - r);
      next = x - char_poly(r, x) / dp;
    } else {
      // Newton on f(x) = r log x + log(x-1), which shares the root.
      double f = r * std::log(x) + std::log(x - 1.0);
      double df = r / x + 1.0 / (x - 1.0);
      next = x - f / df;
    }
    if (next > lo && next < hi) x = next;
  }
  return x;
}

double solve_s(int r, double tol) {
  if (r < 2) throw InputError("s is defined for r >= 2");
  if (!(tol > 0)) throw InputError("tol must be > 0");
  // g(s) = (s+1) log(s+1) - s - r/2 is strictly increasing (g' = log(s+1)),
  // negative at 0, positive at r.
  auto g = [r](double s) {
    return (s + 1.0) * std::log(s + 1.0) - s - 0.5 * r;
  };
  double lo = 0.0, hi = static_cast<double>(r);
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int step = 0; step < 2; ++step) {
    double next = s - g(s) / std::log(s + 1.0);
    if (next > 0.0) s = next;
  }
  return s;
}

double alpha(int r) { return std::exp(1.0 / (solve_s(r) + 1.0)); }

GrowthConstant growth_constant(int r, int n_probe) {
  if (r < 1) throw InputError("r must be >= 1");
  if (n_probe < 50) throw InputError("n_probe must be >= 50");
  PathSeries series = path_count_series(r, n_probe);
  double b = beta_root(r);
  GrowthConstant out;
  out.empirical =
      std::exp(series.at(n_probe).log() - (n_probe - 1) * std::log(b));
  double br = std::exp(r * std::log(b));
  out.closed_paper = br * br / (br + r + 1);
  out.closed_alt = out.closed_paper * b;
  return out;
}

double upper_bound_log(int r, int n) {
  if (n < 1) throw InputError("n must be >= 1");
  double s = solve_s(r);
  return std::log(s + 1.0) + (n - 1) * (1.0 / r + 1.0 / (s + 1.0));
}

double upper_bound(int r, int n) { return std::exp(upper_bound_log(r, n)); }

double lower_bound_log(int r, int n) {
  if (n < 1) throw InputError("n must be >= 1");
  double s = solve_s(r);
  return (n - 1) * (1.0 / (s + 1.0) - 6.0 / (static_cast<double>(r) * r));
}

double lower_bound(int r, int n) { return std::exp(lower_bound_log(r, n)); }

int best_leg_length(int r) {
  if (r < 2) throw InputError("best_leg_length needs r >= 2");
  int h = (r + 1) / 2;  // ceil(r/2)
  // log((a-h+1))/a rises to a single maximum and then decays like log(a)/a;
  // a scan past several multiples of the optimum is more than enough.
  int best = h;
  double best_log = std::log(1.0) / h;
  for (int a = h; a <= 6 * (h + 2) + 60; ++a) {
    double cur = std::log(static_cast<double>(a - h + 1)) / a;
    if (cur > best_log) {
      best_log = cur;
      best = a;
    }
  }
  return best;
}

ConstantsRecord table_row(int r, int n_probe, double tol) {
  ConstantsRecord rec;
  rec.r = r;
  rec.s = solve_s(r, tol);
  rec.alpha = std::exp(1.0 / (rec.s + 1.0));
  rec.beta = beta_root(r, tol);
  rec.best_a = best_leg_length(r);
  int h = (r + 1) / 2;
  rec.spider_growth =
      std::exp(std::log(static_cast<double>(rec.best_a - h + 1)) / rec.best_a);
  GrowthConstant g = growth_constant(r, n_probe);
  rec.c_empirical = g.empirical;
  rec.c_paper = g.closed_paper;
  rec.c_alt = g.closed_alt;
  return rec;
}

std::vector<ConstantsRecord> constants_table(int r_min, int r_max, int n_probe,
                                             double tol) {
  if (r_min < 2 || r_min > r_max)
    throw InputError("need 2 <= r_min <= r_max");
  std::vector<ConstantsRecord> rows;
  rows.reserve(r_max - r_min + 1);
  for (int r = r_min; r <= r_max; ++r)
    rows.push_back(table_row(r, n_probe, tol));
  return rows;
}

}  // namespace rmatch
