#pragma once

#include <vector>

namespace osprings {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
// Nonnegative parts, explicit length.
using Composition = std::vector<int>;

int size_of(const std::vector<int>& v);
bool is_partition(const std::vector<int>& v);
Partition sorted_partition(std::vector<int> v);  // sort decreasing, drop zeros

Composition conjugate(const Partition& la, int pad_to = 0);
int p_stat(int n, int m, const Partition& la);
bool dominance_leq(const Partition& la, const Partition& mu);
bool contained_in(const Partition& la, const Partition& mu);  // la ⊆ mu as diagrams
Partition reduction(const Partition& la, int i);
Partition multi_reduction(const Partition& la, const std::vector<int>& I, int s);
std::vector<std::vector<int>> increasing_sequences(int s, int j);

std::vector<Partition> partitions_of(int n, int max_parts = -1);
// every partition with |la| <= n and at most max_parts parts, ordered by size then reverse lex
std::vector<Partition> partitions_up_to(int n, int max_parts);
std::vector<Composition> weak_compositions(int total, int parts);
std::vector<Composition> strong_compositions(int total);
Partition concat_ones(const Partition& la, int m);

bool in_staircase_set(const Composition& a, int n, const Partition& la, int s);
std::vector<Composition> enumerate_staircase_set(int n, const Partition& la, int s);
// slow reference: shuffle all columns with the s-1 singletons and compare entrywise
bool in_staircase_set_by_shuffles(const Composition& a, int n, const Partition& la, int s);

// membership in the s -> infinity staircase set, via the stable s = max(|a|+1, l(la))
bool in_rank_staircase_set(const Composition& a, int n, const Partition& la);

long long binomial(int a, int b);

}  // namespace osprings
