#pragma once

#include <map>
#include <utility>

#include "treebij/bigint.hpp"
#include "treebij/partition.hpp"

namespace treebij {

// (n-1)!^2 / (e_0! * prod_i e_i! (i!)^e_i) with e_0 = n - length(type):
// the number of trees on [n] with the given indegree type. Requires
// weight(type) == n-1.
BigInt count_trees_by_type(int n, const Partition& type);

// (n-1)! / prod_i e_i! (i!)^e_i: set partitions of an (n-1)-element set with
// block-size type `type`.
BigInt count_set_partitions_by_type(int n, const Partition& type);

// (n-1)!/(n-k)!: sequences of k distinct elements of [n] with a fixed last
// entry. Requires 1 <= k <= n.
BigInt count_k_permutations(int n, int k);

enum class CensusVariant { local_unrooted, global_rooted };

struct Census {
  int n = 0;
  CensusVariant variant = CensusVariant::local_unrooted;
  int root = 0;  // meaningful for global_rooted only
  std::map<Partition, BigInt, PartitionDescLex> counts;
  BigInt total;
};

// Tabulate indegree types over the exhaustive tree stream: local types of
// unrooted trees, or global types of every tree hung at `root`.
Census census(int n, CensusVariant variant, int root = 1);

// Identity sums; each returns (lhs, rhs) so callers can report mismatches.

// lhs: sum over types of n-1, weighted by (n-1)!/(e_0!e_1!...) times
// sum_i e_i * C(i+1, 2). rhs: C(2n-1, n-2).
std::pair<BigInt, BigInt> check_identity_second(int n);

// lhs: sum over partitions of m-1 with at most n parts, weighted by
// n!/(e_0!e_1!...) times sum_i e_i * C(i+p-l, p). rhs: n*C(n+m-2+p-l, n-1+p).
std::pair<BigInt, BigInt> check_identity_general(int m, int n, int p, int l);

}  // namespace treebij
