#include "rmatch/search.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rmatch/count.hpp"
#include "rmatch/path_series.hpp"

namespace rmatch {

namespace {

struct Partial {
  BigCount max_count, min_count;
  std::vector<CanonicalCode> argmax, argmin;
  std::uint64_t examined = 0;

  void add(const Tree& t, const BigCount& c) {
    if (examined == 0 || c > max_count) {
      max_count = c;
      argmax = {canonical_code(t)};
    } else if (c == max_count) {
      argmax.push_back(canonical_code(t));
    }
    if (examined == 0 || c < min_count) {
      min_count = c;
      argmin = {canonical_code(t)};
    } else if (c == min_count) {
      argmin.push_back(canonical_code(t));
    }
    ++examined;
  }

  void merge(Partial&& o) {
    if (o.examined == 0) return;
    if (examined == 0) {
      *this = std::move(o);
      return;
    }
    if (o.max_count > max_count) {
      max_count = std::move(o.max_count);
      argmax = std::move(o.argmax);
    } else if (o.max_count == max_count) {
      argmax.insert(argmax.end(), o.argmax.begin(), o.argmax.end());
    }
    if (o.min_count < min_count) {
      min_count = std::move(o.min_count);
      argmin = std::move(o.argmin);
    } else if (o.min_count == min_count) {
      argmin.insert(argmin.end(), o.argmin.begin(), o.argmin.end());
    }
    examined += o.examined;
  }
};

SearchReport finish_report(int r, int n, Partial&& part) {
  SearchReport rep;
  rep.n = n;
  rep.r = r;
  rep.max_count = std::move(part.max_count);
  rep.min_count = std::move(part.min_count);
  rep.argmax_codes = std::move(part.argmax);
  rep.argmin_codes = std::move(part.argmin);
  std::sort(rep.argmax_codes.begin(), rep.argmax_codes.end());
  std::sort(rep.argmin_codes.begin(), rep.argmin_codes.end());
  rep.trees_examined = part.examined;
  rep.path_count = path_count_series(r, n).at(n);
  rep.path_is_max = rep.path_count == rep.max_count;
  return rep;
}

void check_search_args(int r, int n, int enum_limit) {
  if (r < 1) throw InputError("r must be >= 1");
  if (n < 1) throw InputError("n must be >= 1");
  if (n > enum_limit)
    throw InputError("n = " + std::to_string(n) +
                     " above enumeration limit " + std::to_string(enum_limit));
}

}  // namespace

SearchReport search_extremal_serial(int r, int n, int enum_limit) {
  check_search_args(r, n, enum_limit);
  Partial part;
  FreeTreeStream stream(n, enum_limit);
  Tree t = path(1);
  while (stream.next(t)) part.add(t, count_r_matchings(t, r));
  return finish_report(r, n, std::move(part));
}

SearchReport search_extremal(int r, int n, const SearchOptions& opts) {
  check_search_args(r, n, opts.enum_limit);
#ifdef _OPENMP
  int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  if (threads > 1) {
    std::vector<Partial> parts(threads);
#pragma omp parallel num_threads(threads)
    {
      int id = omp_get_thread_num();
      FreeTreeStream stream(n, id, threads, opts.enum_limit);
      Tree t = path(1);
      while (stream.next(t)) parts[id].add(t, count_r_matchings(t, r));
    }
    Partial total;
    for (Partial& p : parts) total.merge(std::move(p));
    return finish_report(r, n, std::move(total));
  }
#else
  (void)opts;
#endif
  return search_extremal_serial(r, n, opts.enum_limit);
}

std::vector<SearchReport> probe_problem_4_4(int r, int n_max,
                                            const SearchOptions& opts) {
  if (r != 3 && r != 4 && r != 5 && r != 7 && r != 9)
    throw InputError("probe is defined for r in {3,4,5,7,9}");
  if (n_max < 1 || n_max > opts.enum_limit)
    throw InputError("n_max outside 1..enum_limit");
  std::vector<SearchReport> reports;
  reports.reserve(n_max);
  for (int n = 1; n <= n_max; ++n)
    reports.push_back(search_extremal(r, n, opts));
  return reports;
}

std::optional<SpiderWitness> spider_vs_path(int r, int a, int b_max) {
  if (r < 1 || a < 1 || b_max < 1)
    throw InputError("spider_vs_path needs r, a, b_max >= 1");
  PathSeries series = path_count_series(r, a * b_max + 1);
  for (int b = 1; b <= b_max; ++b) {
    BigCount sc = count_r_matchings(spider(a, b), r);
    const BigCount& pc = series.at(a * b + 1);
    if (sc > pc) return SpiderWitness{b, std::move(sc), pc};
  }
  return std::nullopt;
}

double spider_growth_estimate(int r, int a, int b) {
  if (r < 1 || a < 1 || b < 1)
    throw InputError("spider_growth_estimate needs r, a, b >= 1");
  BigCount c = count_r_matchings(spider(a, b), r);
  return std::exp(c.log() / (static_cast<double>(a) * b));
}

namespace {

// Minimal subtree spanning all vertices of degree >= 3: union of the paths
// from one branch vertex to every other.
std::vector<char> branch_subtree(const Tree& t) {
  int n = t.vertex_count();
  std::vector<int> branch;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) >= 3) branch.push_back(v);
  std::vector<char> in(n, 0);
  if (branch.empty()) return in;
  int root = branch[0];
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : t.neighbors(order[i]))
      if (parent[w] < 0) {
        parent[w] = order[i];
        order.push_back(w);
      }
  in[root] = 1;
  for (int b : branch)
    for (int v = b; !in[v]; v = parent[v]) in[v] = 1;
  return in;
}

struct Leg {
  int first = 0;  // neighbor of v the leg hangs from
  int last = 0;   // far endpoint (a leaf of the tree)
  int length = 0; // edges from v to last; equals the component vertex count
};

// The pendant-path components at v: every neighbor direction that contains
// no branch vertex. Walks from the neighbor away from v.
std::vector<Leg> pendant_legs(const Tree& t, int v) {
  std::vector<Leg> legs;
  for (int w : t.neighbors(v)) {
    Leg leg;
    leg.first = w;
    int prev = v, cur = w, len = 1;
    bool is_path = true;
    while (true) {
      if (t.degree(cur) >= 3) {
        is_path = false;
        break;
      }
      int next = -1;
      for (int x : t.neighbors(cur))
        if (x != prev) next = x;
      if (next < 0) break;  // reached a leaf
      prev = cur;
      cur = next;
      ++len;
    }
    if (!is_path) continue;
    leg.last = cur;
    leg.length = len;
    legs.push_back(leg);
  }
  return legs;
}

}  // namespace

TransformResult transform_leaf_reduction(const Tree& t, int r) {
  if (r < 1) throw InputError("r must be >= 1");
  int n = t.vertex_count();
  std::vector<char> in_t0 = branch_subtree(t);
  bool has_branch = false;
  for (char c : in_t0) has_branch |= (c != 0);
  if (!has_branch) return {TransformStatus::InputIsPath, std::nullopt};

  // Leaves of the spanning branch subtree, lowest label first. A one-vertex
  // subtree (a lone branch vertex) counts as its own leaf.
  TransformStatus blocked = TransformStatus::InputIsPath;
  bool saw_candidate = false;
  for (int v = 0; v < n; ++v) {
    if (!in_t0[v]) continue;
    int t0_degree = 0;
    for (int w : t.neighbors(v)) t0_degree += in_t0[w];
    if (t0_degree > 1) continue;

    std::vector<Leg> legs = pendant_legs(t, v);
    std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) {
      return a.length != b.length ? a.length < b.length
                                  : a.first < b.first;
    });
    TransformStatus status;
    if (legs.back().length >= r + 1)
      status = TransformStatus::LongLegCase;
    else if (legs[0].length + legs[1].length > r + 1)
      status = TransformStatus::SeparatedLegsCase;
    else
      status = TransformStatus::Applied;
    if (!saw_candidate) {
      blocked = status;
      saw_candidate = true;
    }
    if (status != TransformStatus::Applied) continue;

    // Concatenate the two shortest legs: re-hang the shorter one from the
    // far end of the other.
    const Leg& keep = legs[1];
    const Leg& move = legs[0];
    std::vector<std::pair<int, int>> edges = t.edges();
    for (auto& [a, b] : edges) {
      bool hit = (a == v && b == move.first) || (a == move.first && b == v);
      if (hit) {
        a = keep.last;
        b = move.first;
        break;
      }
    }
    Tree rewired = Tree::build(n, std::move(edges));

    TransformOutcome out{canonical_code(t), canonical_code(rewired),
                         count_r_matchings(t, r),
                         count_r_matchings(rewired, r),
                         t.leaf_count() == 3 && n >= r + 3, rewired};
    return {TransformStatus::Applied, std::move(out)};
  }
  return {blocked, std::nullopt};
}

}  // namespace rmatch
