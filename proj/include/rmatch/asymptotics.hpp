#pragma once

#include <vector>

namespace rmatch {

// Unique root in (1,2) of x^(r+1) - x^r - 1, the per-vertex growth rate of
// path counts. Bisection to the given bracket width, then two Newton steps;
// sign evaluations switch to log form above r = 60.
double beta_root(int r, double tol = 1e-13);

// Sign of x^(r+1) - x^r - 1 for x > 1, stable for arbitrary r.
bool char_poly_positive(int r, double x);

// The unique s > 0 with r/2 + s = (s+1) log(s+1). Requires r >= 2.
double solve_s(int r, double tol = 1e-13);

// alpha_r = e^(1/(s+1)), the growth base of the extremal bounds.
double alpha(int r);

struct GrowthConstant {
  double empirical;      // s_r(P_n) / beta^(n-1) at n = n_probe
  double closed_paper;   // beta^(2r) / (beta^r + r + 1)
  double closed_alt;     // beta^(2r+1) / (beta^r + r + 1)
};

// Evaluates the limit ratio empirically from the exact series (log-domain
// division, so large n cannot overflow) next to both closed-form candidates.
// Reports all three; callers decide which candidate matches.
GrowthConstant growth_constant(int r, int n_probe);

// (s+1) (e^(1/r) alpha_r)^(n-1): upper bound on the r-matching count of any
// n-vertex tree. Requires r >= 2.
double upper_bound(int r, int n);
double upper_bound_log(int r, int n);  // natural log of the same

// (e^(-6/r^2) alpha_r)^(n-1): the spider-construction lower bound on the
// maximum. Requires r >= 2.
double lower_bound(int r, int n);
double lower_bound_log(int r, int n);

// Argmax over a >= ceil(r/2) of (a - ceil(r/2) + 1)^(1/a), ties toward
// smaller a: the leg length maximizing per-edge spider growth.
int best_leg_length(int r);

struct ConstantsRecord {
  int r = 0;
  double s = 0;
  double alpha = 0;
  double beta = 0;
  int best_a = 0;
  double spider_growth = 0;  // (best_a - ceil(r/2) + 1)^(1/best_a)
  double c_empirical = 0;
  double c_paper = 0;
  double c_alt = 0;
};

ConstantsRecord table_row(int r, int n_probe = 300, double tol = 1e-13);
std::vector<ConstantsRecord> constants_table(int r_min, int r_max,
                                             int n_probe = 300,
                                             double tol = 1e-13);

}  // namespace rmatch
