#pragma once

#include <string>
#include <vector>

#include "osprings/combinat.hpp"
#include "osprings/qpoly.hpp"

namespace osprings {

struct CheckRecord {
  std::string suite;
  int n = 0;
  Partition la;
  int s = 0;
  std::string extra;  // e.g. "j=2" or "mu=3,1"
  bool pass = false;
  std::string detail;
};

// basis osp equidistribution skewing exact-sequence monotonicity oracle rank
// hl-expansion llt ungraded specializations
std::vector<std::string> suite_names();
bool is_experimental_suite(const std::string& name);

// "all" runs every non-experimental suite. Unknown names throw invalid_argument.
std::vector<CheckRecord> run_suite(const std::string& name, int max_n, int max_s, int threads);

// q-Stirling numbers of the second kind, Stir(n,k) = Stir(n-1,k-1) + [k]_q Stir(n-1,k)
QPoly q_stirling2(int n, int k);

std::string partition_str(const Partition& la);

}  // namespace osprings
