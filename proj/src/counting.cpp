#include "treebij/counting.hpp"

#include "treebij/enumeration.hpp"
#include "treebij/errors.hpp"

namespace treebij {

namespace {

void require_type_of(int n, const Partition& type) {
  if (type.weight() != n - 1)
    throw InputError("indegree type must be a partition of n-1");
}

// prod_i e_i! (i!)^e_i over the positive parts.
BigInt block_symmetry_factor(const Partition& type) {
  BigInt denom = 1;
  for (int i = 1; i <= type.max_part(); ++i) {
    int e = type.multiplicity(i);
    if (e == 0) continue;
    denom *= factorial(e);
    BigInt part_fact = factorial(i);
    for (int j = 0; j < e; ++j) denom *= part_fact;
  }
  return denom;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den) {
  if (num % den != 0) throw InvariantViolation("count formula did not divide exactly");
  return num / den;
}

}  // namespace

BigInt count_trees_by_type(int n, const Partition& type) {
  require_type_of(n, type);
  int e0 = n - type.length();  // >= 1 whenever weight == n-1
  BigInt num = factorial(n - 1);
  num *= num;
  return exact_quotient(num, factorial(e0) * block_symmetry_factor(type));
}

BigInt count_set_partitions_by_type(int n, const Partition& type) {
  require_type_of(n, type);
  return exact_quotient(factorial(n - 1), block_symmetry_factor(type));
}

BigInt count_k_permutations(int n, int k) {
  if (k < 1 || k > n) throw InputError("k out of range");
  BigInt r = 1;
  for (int j = n - 1; j >= n - k + 1; --j) r *= j;
  return r;
}

Census census(int n, CensusVariant variant, int root) {
  if (variant == CensusVariant::global_rooted && (root < 1 || root > n))
    throw InputError("root out of range");
  Census result;
  result.n = n;
  result.variant = variant;
  result.root = variant == CensusVariant::global_rooted ? root : 0;
  result.total = 0;
  for_each_tree(n, [&](const LabeledTree& t) {
    Partition type =
        variant == CensusVariant::local_unrooted ? local_type(t) : global_type(hang_up(t, root));
    ++result.counts[type];
    ++result.total;
  });
  return result;
}

std::pair<BigInt, BigInt> check_identity_second(int n) {
  if (n < 1) throw InputError("n must be positive");
  BigInt lhs = 0;
  for (const Partition& lambda : partitions_of(n - 1)) {
    int e0 = n - lambda.length();
    BigInt denom = factorial(e0);
    BigInt inner = 0;
    for (int i = 1; i <= lambda.max_part(); ++i) {
      denom *= factorial(lambda.multiplicity(i));
      inner += BigInt(lambda.multiplicity(i)) * binomial(i + 1, 2);
    }
    lhs += exact_quotient(factorial(n - 1), denom) * inner;
  }
  return {lhs, binomial(2 * n - 1, n - 2)};
}

std::pair<BigInt, BigInt> check_identity_general(int m, int n, int p, int l) {
  if (m < 1 || n < 1 || p < 0 || l < 0) throw InputError("bad identity parameters");
  BigInt lhs = 0;
  for_each_partition(m - 1, m - 1, n, [&](const Partition& lambda) {
    int e0 = n - lambda.length();
    std::vector<int> parts{e0};
    BigInt inner = e0 * binomial(p - l, p);  // the indegree-0 term
    for (int i = 1; i <= lambda.max_part(); ++i) {
      parts.push_back(lambda.multiplicity(i));
      inner += BigInt(lambda.multiplicity(i)) * binomial(i + p - l, p);
    }
    lhs += multinomial(n, parts) * inner;
  });
  return {lhs, BigInt(n) * binomial(n + m - 2 + p - l, n - 1 + p)};
}

}  // namespace treebij
