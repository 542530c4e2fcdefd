#pragma once

#include <map>

#include "osprings/combinat.hpp"
#include "osprings/qpoly.hpp"
#include "osprings/symfunc.hpp"

namespace osprings {

enum class Statistic { Inv, Dinv };

struct GradedModuleSeries {
  int n = 0;
  SchurExpansion schur;
  FundExpansion fund;
  QPoly hilbert;
};

// sum over SECI_{n,la,s} of q^stat F_{iDes(rw)}; zero when |la| > n
FundExpansion frob_fund(int n, const Partition& la, int s, Statistic st);
// memoized, computed with the thread budget
GradedModuleSeries frob(int n, const Partition& la, int s, Statistic st = Statistic::Inv);
QPoly hilb(int n, const Partition& la, int s, Statistic method);

std::map<Partition, mpz_class> ungraded_frob_h(int n, const Partition& la, int s);
SchurExpansion ungraded_frob(int n, const Partition& la, int s);
SchurExpansion at_q_one(const SchurExpansion& f);

bool skew_recursion_check(int n, const Partition& la, int s, int j);
bool exact_sequence_check(int n, const Partition& la, int s);
bool removing_zeros_check(int n, const Partition& la, int s);
bool monotonicity_check(int n, const Partition& la, const Partition& mu, int s);

// the stable s used for degree d of the rank-variety ring
int rank_stable_s(const Partition& la, int d);
QPoly rank_hilb(int n, const Partition& la, int max_degree);
GradedModuleSeries rank_frob(int n, const Partition& la, int max_degree);

SchurExpansion hl_expansion(int n, const Partition& la, int s);
bool hl_expansion_check(int n, const Partition& la, int s);

// for each basement distribution beta, the q^dinv x^phi tally of ECI fillings
// equals q^m times the LLT tally of the matching row tuple, m = number of
// empty-first diagonal pairs in the basement
bool llt_summand_check(int n, const Partition& la, int s);
int basement_gap_pairs(const Composition& beta);

void clear_frob_cache();

}  // namespace osprings
