#pragma once

#include <json.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "rmatch/asymptotics.hpp"
#include "rmatch/path_series.hpp"
#include "rmatch/search.hpp"

namespace rmatch {

using ordered_json = nlohmann::ordered_json;

// Reals are emitted with 10 significant digits; exact counts stay decimal
// strings so nothing ever rounds.
inline double round_sig10(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return std::strtod(buf, nullptr);
}

inline ordered_json to_json(const SearchReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["max_count"] = rep.max_count.str();
  j["min_count"] = rep.min_count.str();
  ordered_json amax = ordered_json::array(), amin = ordered_json::array();
  for (const auto& c : rep.argmax_codes) amax.push_back(c.str());
  for (const auto& c : rep.argmin_codes) amin.push_back(c.str());
  j["argmax_codes"] = std::move(amax);
  j["argmin_codes"] = std::move(amin);
  j["path_count"] = rep.path_count.str();
  j["path_is_max"] = rep.path_is_max;
  j["trees_examined"] = rep.trees_examined;
  return j;
}

inline std::string search_csv_header() {
  return "n,r,max,min,path_count,path_is_max,trees_examined";
}

inline std::string search_csv_line(const SearchReport& rep) {
  return std::to_string(rep.n) + "," + std::to_string(rep.r) + "," +
         rep.max_count.str() + "," + rep.min_count.str() + "," +
         rep.path_count.str() + "," + (rep.path_is_max ? "true" : "false") +
         "," + std::to_string(rep.trees_examined);
}

inline ordered_json to_json(const ConstantsRecord& rec) {
  ordered_json j;
  j["r"] = rec.r;
  j["s"] = round_sig10(rec.s);
  j["alpha"] = round_sig10(rec.alpha);
  j["beta"] = round_sig10(rec.beta);
  j["a"] = rec.best_a;
  j["spider_growth"] = round_sig10(rec.spider_growth);
  j["c_empirical"] = round_sig10(rec.c_empirical);
  j["c_paper"] = round_sig10(rec.c_paper);
  j["c_alt"] = round_sig10(rec.c_alt);
  return j;
}

inline std::string constants_csv_header() {
  return "r,s,alpha,beta,a,spider_growth,c_empirical,c_paper,c_alt";
}

inline std::string constants_csv_line(const ConstantsRecord& rec) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%d,%.10g,%.10g,%.10g,%d,%.10g,%.10g,%.10g,%.10g", rec.r,
                rec.s, rec.alpha, rec.beta, rec.best_a, rec.spider_growth,
                rec.c_empirical, rec.c_paper, rec.c_alt);
  return buf;
}

inline ordered_json count_json(int r, int n, const BigCount& c) {
  ordered_json j;
  j["r"] = r;
  j["n"] = n;
  j["count"] = c.str();
  return j;
}

inline ordered_json series_json(const PathSeries& s) {
  ordered_json j;
  j["r"] = s.r;
  j["n_max"] = s.n_max();
  ordered_json vals = ordered_json::array();
  for (const auto& v : s.values) vals.push_back(v.str());
  j["values"] = std::move(vals);
  return j;
}

inline ordered_json bounds_json(int r, int n) {
  ordered_json j;
  j["r"] = r;
  j["n"] = n;
  j["upper"] = round_sig10(upper_bound(r, n));
  j["lower"] = round_sig10(lower_bound(r, n));
  j["log_upper"] = round_sig10(upper_bound_log(r, n));
  j["log_lower"] = round_sig10(lower_bound_log(r, n));
  return j;
}

inline ordered_json spider_growth_json(int r, int a, int b, const BigCount& c,
                                       double growth) {
  ordered_json j;
  j["r"] = r;
  j["a"] = a;
  j["b"] = b;
  j["count"] = c.str();
  j["growth"] = round_sig10(growth);
  return j;
}

inline ordered_json spider_witness_json(int r, int a, int b_max,
                                        const std::optional<SpiderWitness>& w) {
  ordered_json j;
  j["r"] = r;
  j["a"] = a;
  j["b_max"] = b_max;
  j["found"] = w.has_value();
  if (w) {
    ordered_json wj;
    wj["b"] = w->b;
    wj["spider_count"] = w->spider_count.str();
    wj["path_count"] = w->path_count.str();
    j["witness"] = std::move(wj);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline ordered_json probe_json(int r, int n_max,
                               const std::vector<SearchReport>& reports) {
  ordered_json j;
  j["r"] = r;
  j["n_max"] = n_max;
  ordered_json arr = ordered_json::array();
  for (const auto& rep : reports) arr.push_back(to_json(rep));
  j["reports"] = std::move(arr);
  return j;
}

inline ordered_json to_json(const TransformResult& result) {
  ordered_json j;
  switch (result.status) {
    case TransformStatus::Applied:
      j["status"] = "applied";
      break;
    case TransformStatus::InputIsPath:
      j["status"] = "not-applicable";
      j["reason"] = "input is a path";
      break;
    case TransformStatus::LongLegCase:
      j["status"] = "not-applicable";
      j["reason"] = "a pendant path already has at least r+1 edges";
      break;
    case TransformStatus::SeparatedLegsCase:
      j["status"] = "not-applicable";
      j["reason"] = "every pair of pendant paths has combined length above r+1";
      break;
  }
  if (result.outcome) {
    const TransformOutcome& out = *result.outcome;
    j["input_code"] = out.input_code.str();
    j["output_code"] = out.output_code.str();
    j["input_count"] = out.input_count.str();
    j["output_count"] = out.output_count.str();
    j["strict"] = out.strict;
  }
  return j;
}

}  // namespace rmatch
