#pragma once

#include <gmpxx.h>

#include <vector>

#include "osprings/combinat.hpp"

namespace osprings {

// Exactly s blocks, each a sorted list; empty blocks are kept in place.
using OrderedSetPartition = std::vector<std::vector<int>>;

struct ExtendedFilling;

std::vector<OrderedSetPartition> enumerate_osp(int n, const Partition& la, int s);
mpz_class count_osp(int n, const Partition& la, int s);
// relabel each element e as sigma[e-1]; sigma is a permutation of 1..n in one-line form
OrderedSetPartition permute_osp(const std::vector<int>& sigma, const OrderedSetPartition& osp);
ExtendedFilling osp_to_seci(const OrderedSetPartition& osp, const Partition& la, int s);
OrderedSetPartition seci_to_osp(const ExtendedFilling& phi);

}  // namespace osprings
