#pragma once

#include <string>
#include <vector>

#include "rmatch/search.hpp"

namespace rmatch {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Known free-tree class counts for n = 1..18, used as a cross-check wherever
// a full enumeration pass happens.
std::uint64_t expected_free_tree_count(int n);

// The desk-scale checks. Each pins its tolerances internally.
CheckResult check_oracle_equivalence();                          // n<=10, r<=8
CheckResult check_observation_1_1();                             // n<=12, r<=6
CheckResult check_theorem_3_3(const SearchOptions& opts = {});   // r=2, n<=16
CheckResult check_table_reproduction();                          // r=2..11
CheckResult check_doubling();                                    // r<=10, n<=100
CheckResult check_growth_constant();                             // r=2 adjudication
CheckResult check_upper_bound_sandwich();                        // r=2..8, n<=14
CheckResult check_spider_construction();                         // r=20,40,60
CheckResult check_spider_beats_path();                           // r=6, a=6
CheckResult check_beta_window();                                 // r=100, 1000
CheckResult check_probe_reports(const SearchOptions& opts = {}); // r in {3,4,5,7,9}

std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                          const SearchOptions& opts = {});

}  // namespace rmatch
