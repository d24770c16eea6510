// Command-line front end for the r-matching toolkit: exact counts, path
// series, growth constants, extremal search, and the verification suites.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rmatch/asymptotics.hpp"
#include "rmatch/count.hpp"
#include "rmatch/path_series.hpp"
#include "rmatch/report_json.hpp"
#include "rmatch/search.hpp"
#include "rmatch/tree.hpp"
#include "rmatch/verify.hpp"

namespace {

using rmatch::InputError;

int default_threads() {
  if (const char* env = std::getenv("RMATCH_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 0;  // library default: all available
}

struct TreeSource {
  std::string file;
  int path_n = 0;
  std::vector<int> spider_ab;

  void add_options(CLI::App* sc) {
    sc->add_option("--tree", file, "tree file (first line n, then n-1 lines \"u v\")");
    sc->add_option("--path", path_n, "use the n-vertex path");
    sc->add_option("--spider", spider_ab, "use the spider with legs of A edges, B legs")
        ->expected(2);
  }

  rmatch::Tree load() const {
    int given = (!file.empty()) + (path_n > 0) + (!spider_ab.empty());
    if (given != 1)
      throw InputError("give exactly one of --tree, --path, --spider");
    if (!file.empty()) return rmatch::read_tree_file(file);
    if (path_n > 0) return rmatch::path(path_n);
    return rmatch::spider(spider_ab[0], spider_ab[1]);
  }
};

void emit(const rmatch::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// Table comparison mode truncates (never rounds) to 4 decimals.
std::string trunc4(double x) {
  double t = std::floor(x * 10000.0 + 1e-9) / 10000.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", t);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{"exact distance-r matching counts and extremal search on trees"};
  app.require_subcommand(1);
  std::string format = "text";

  int r = 0, n = 0, n_max = 0, a = 0, b = 0, b_max = 0, n_probe = 300;
  int r_min = 2, r_max = 11;
  int threads = default_threads();
  int enum_limit = rmatch::kDefaultEnumLimit;
  double tol = 1e-13;
  TreeSource source;
  std::string suite;

  auto add_format = [&](CLI::App* sc, bool with_csv = true) {
    std::vector<std::string> allowed = {"text", "json"};
    if (with_csv) allowed.push_back("csv");
    sc->add_option("--format", format, "output format")
        ->check(CLI::IsMember(allowed));
  };

  auto* sc_count = app.add_subcommand("count", "count r-matchings of one tree");
  sc_count->add_option("--r", r, "minimum pairwise edge distance")->required();
  source.add_options(sc_count);
  add_format(sc_count, false);

  auto* sc_series = app.add_subcommand("path-series", "exact counts for paths P_0..P_n");
  sc_series->add_option("--r", r)->required();
  sc_series->add_option("--n-max", n_max)->required();
  add_format(sc_series);

  auto* sc_constants = app.add_subcommand("constants", "s, alpha, beta and growth constants for one r");
  sc_constants->add_option("--r", r)->required();
  sc_constants->add_option("--n-probe", n_probe);
  sc_constants->add_option("--tol", tol);
  add_format(sc_constants, false);

  auto* sc_table = app.add_subcommand("table", "constants for a range of r");
  sc_table->add_option("--r-min", r_min);
  sc_table->add_option("--r-max", r_max);
  sc_table->add_option("--n-probe", n_probe);
  add_format(sc_table);

  auto* sc_spider = app.add_subcommand("spider", "spider growth estimate or spider-vs-path witness search");
  sc_spider->add_option("--r", r)->required();
  sc_spider->add_option("--a", a, "leg length in edges")->required();
  sc_spider->add_option("--b", b, "leg count: report s_r(T_{a,b})^(1/(ab))");
  sc_spider->add_option("--b-max", b_max, "search the first b with the spider beating P_{ab+1}");
  add_format(sc_spider, false);

  auto* sc_search = app.add_subcommand("search", "exact extrema over all n-vertex trees");
  sc_search->add_option("--r", r)->required();
  sc_search->add_option("--n", n)->required();
  sc_search->add_option("--threads", threads);
  sc_search->add_option("--limit", enum_limit, "enumeration limit");
  add_format(sc_search);

  auto* sc_probe = app.add_subcommand("probe-4-4", "evidence reports for the open maximality question");
  sc_probe->add_option("--r", r, "one of 3,4,5,7,9")->required();
  sc_probe->add_option("--n-max", n_max)->required();
  sc_probe->add_option("--threads", threads);
  sc_probe->add_option("--limit", enum_limit);
  add_format(sc_probe);

  auto* sc_bounds = app.add_subcommand("bounds", "extremal upper/lower bounds at (r, n)");
  sc_bounds->add_option("--r", r)->required();
  sc_bounds->add_option("--n", n)->required();
  add_format(sc_bounds, false);

  auto* sc_transform = app.add_subcommand("transform", "leaf-reduction rewiring that cannot lose r-matchings");
  sc_transform->add_option("--r", r)->required();
  source.add_options(sc_transform);
  add_format(sc_transform, false);

  auto* sc_verify = app.add_subcommand("verify", "run a named invariant suite");
  sc_verify->add_option("suite", suite, "one of: oracle, observation-1-1, theorem-3-3, doubling, table, bounds, growth-constant")
      ->required();
  sc_verify->add_option("--threads", threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // malformed flags are an input error
  }

  rmatch::SearchOptions opts{threads, enum_limit};
  std::cout.precision(10);

  if (*sc_count) {
    rmatch::Tree t = source.load();
    rmatch::BigCount c = rmatch::count_r_matchings(t, r);
    if (format == "json")
      emit(rmatch::count_json(r, t.vertex_count(), c));
    else
      std::cout << c.str() << "\n";
  } else if (*sc_series) {
    rmatch::PathSeries s = rmatch::path_count_series(r, n_max);
    if (format == "json")
      emit(rmatch::series_json(s));
    else
      rmatch::write_csv(std::cout, s);  // text and csv coincide here
  } else if (*sc_constants) {
    rmatch::ConstantsRecord rec = rmatch::table_row(r, n_probe, tol);
    if (format == "json") {
      emit(rmatch::to_json(rec));
    } else {
      std::cout << "r = " << rec.r << "\n"
                << "s       = " << rmatch::round_sig10(rec.s) << "\n"
                << "alpha   = " << rmatch::round_sig10(rec.alpha) << "\n"
                << "beta    = " << rmatch::round_sig10(rec.beta) << "\n"
                << "a       = " << rec.best_a << "\n"
                << "growth  = " << rmatch::round_sig10(rec.spider_growth) << "\n"
                << "C empirical = " << rmatch::round_sig10(rec.c_empirical)
                << "  (beta^(2r)/(beta^r+r+1) = "
                << rmatch::round_sig10(rec.c_paper)
                << ", beta^(2r+1)/(beta^r+r+1) = "
                << rmatch::round_sig10(rec.c_alt) << ")\n";
    }
  } else if (*sc_table) {
    auto rows = rmatch::constants_table(r_min, r_max, n_probe);
    if (format == "json") {
      rmatch::ordered_json arr = rmatch::ordered_json::array();
      for (const auto& rec : rows) arr.push_back(rmatch::to_json(rec));
      emit(arr);
    } else if (format == "csv") {
      std::cout << rmatch::constants_csv_header() << "\n";
      for (const auto& rec : rows)
        std::cout << rmatch::constants_csv_line(rec) << "\n";
    } else {
      std::cout << "r\ts\talpha\tbeta\ta\tleg_growth\n";
      for (const auto& rec : rows)
        std::cout << rec.r << "\t" << trunc4(rec.s) << "\t"
                  << trunc4(rec.alpha) << "\t" << trunc4(rec.beta) << "\t"
                  << rec.best_a << "\t" << trunc4(rec.spider_growth) << "\n";
    }
  } else if (*sc_spider) {
    if ((b > 0) == (b_max > 0))
      throw InputError("give exactly one of --b, --b-max");
    if (b > 0) {
      double growth = rmatch::spider_growth_estimate(r, a, b);
      rmatch::BigCount c = rmatch::count_r_matchings(rmatch::spider(a, b), r);
      if (format == "json") {
        emit(rmatch::spider_growth_json(r, a, b, c, growth));
      } else {
        std::cout << "s_" << r << "(T_{" << a << "," << b << "}) = " << c.str()
                  << ", per-edge growth " << rmatch::round_sig10(growth)
                  << "\n";
      }
    } else {
      auto w = rmatch::spider_vs_path(r, a, b_max);
      if (format == "json") {
        emit(rmatch::spider_witness_json(r, a, b_max, w));
      } else if (w) {
        std::cout << "b = " << w->b << ": s_" << r << "(T_{" << a << ","
                  << w->b << "}) = " << w->spider_count.str() << " > s_" << r
                  << "(P_" << a * w->b + 1 << ") = " << w->path_count.str()
                  << "\n";
      } else {
        std::cout << "none: the path is never beaten for b <= " << b_max
                  << "\n";
      }
    }
  } else if (*sc_search) {
    auto start = std::chrono::steady_clock::now();
    rmatch::SearchReport rep = rmatch::search_extremal(r, n, opts);
    auto elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (format == "json") {
      emit(rmatch::to_json(rep));
    } else if (format == "csv") {
      std::cout << rmatch::search_csv_header() << "\n"
                << rmatch::search_csv_line(rep) << "\n";
    } else {
      std::cout << "n=" << rep.n << " r=" << rep.r
                << " classes=" << rep.trees_examined
                << " max=" << rep.max_count.str()
                << " min=" << rep.min_count.str()
                << " path=" << rep.path_count.str()
                << " path_is_max=" << (rep.path_is_max ? "yes" : "no") << " ("
                << elapsed << "s)\n";
      std::cout << "argmax:";
      for (const auto& c : rep.argmax_codes) std::cout << " [" << c.str() << "]";
      std::cout << "\nargmin:";
      for (const auto& c : rep.argmin_codes) std::cout << " [" << c.str() << "]";
      std::cout << "\n";
    }
  } else if (*sc_probe) {
    auto reports = rmatch::probe_problem_4_4(r, n_max, opts);
    if (format == "json") {
      emit(rmatch::probe_json(r, n_max, reports));
    } else if (format == "csv") {
      std::cout << rmatch::search_csv_header() << "\n";
      for (const auto& rep : reports)
        std::cout << rmatch::search_csv_line(rep) << "\n";
    } else {
      for (const auto& rep : reports)
        std::cout << "n=" << rep.n << ": max=" << rep.max_count.str()
                  << " path=" << rep.path_count.str() << " path_is_max="
                  << (rep.path_is_max ? "yes" : "no") << "\n";
    }
  } else if (*sc_bounds) {
    double up = rmatch::upper_bound(r, n), lo = rmatch::lower_bound(r, n);
    if (format == "json") {
      emit(rmatch::bounds_json(r, n));
    } else {
      std::cout << "upper (s+1)(e^(1/r) alpha)^(n-1) = "
                << rmatch::round_sig10(up) << "\n"
                << "lower (e^(-6/r^2) alpha)^(n-1)   = "
                << rmatch::round_sig10(lo) << "\n";
    }
  } else if (*sc_transform) {
    rmatch::Tree t = source.load();
    rmatch::TransformResult result = rmatch::transform_leaf_reduction(t, r);
    if (format == "json") {
      emit(rmatch::to_json(result));
    } else if (result.outcome) {
      const auto& out = *result.outcome;
      std::cout << "applied: [" << out.input_code.str() << "] count "
                << out.input_count.str() << " -> [" << out.output_code.str()
                << "] count " << out.output_count.str()
                << (out.strict ? " (strict)" : "") << "\n";
    } else {
      std::cout << "not applicable: "
                << rmatch::to_json(result)["reason"].get<std::string>()
                << "\n";
    }
  } else if (*sc_verify) {
    auto results = rmatch::run_verify_suite(suite, opts);
    bool all = true;
    for (const auto& cr : results) {
      all = all && cr.pass;
      std::cout << (cr.pass ? "ok   " : "FAIL ") << cr.name << " — "
                << cr.detail << "\n";
    }
    if (!all) return 2;  // a failed suite is a broken invariant, not bad input
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
