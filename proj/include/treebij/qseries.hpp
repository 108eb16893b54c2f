#pragma once

#include <vector>

#include "treebij/partition.hpp"
#include "treebij/qpoly.hpp"

namespace treebij {

QPolynomial q_int(int n);        // 1 + q + ... + q^(n-1); zero for n <= 0
QPolynomial q_factorial(int n);  // product of q_int(1..n)

// Gaussian binomial via the Pascal-type recurrence, memoized per thread.
// Zero unless 0 <= k <= n; at q = 1 it equals binomial(n, k).
QPolynomial q_binomial(int n, int k);

// (q;q)_n / prod (q;q)_{e_i}; requires nonnegative e summing to n.
QPolynomial q_multinomial(int n, const std::vector<int>& e);

struct QCheckResult {
  QPolynomial lhs;
  QPolynomial rhs;
  bool equal() const { return lhs == rhs; }
};

// Multiplicity sequence of `lambda` padded with e_0 = n - length(lambda), as
// used by the q-multinomials below. Requires length(lambda) <= n.
std::vector<int> multiplicities_with_e0(const Partition& lambda, int n);

// One term of the multisum side of the main identity: for a partition lambda
// of m-1 with at most n parts and e_i >= 1,
//   q^((p+1)(m-i-1) + 2 n(lambda) - 2 sum_{k<=i}(lambda'_k - 1))
//     * qbin(p+i-l, p) * qmulti(n-1; e_0,...,e_i - 1,...).
// Zero when e_i = 0.
QPolynomial multisum_term(const Partition& lambda, int i, int m, int n, int p, int l);

// Multisum of the terms above over all (i, lambda) against
// qbin(n+m-2+p-l, n-1+p).
QCheckResult thm4_check(int m, int n, int p, int l);

// qbin(n+k-1, k) against sum over partitions of k with at most n parts of
// q^(2 n(lambda)) qmulti(n; e_0, e_1, ...).
QCheckResult eq_lemma_check(int n, int k);

// sum_t qbin(p+t-l, p) qbin(n+m-3-t, n-2) q^((p+1)(m-1-t)) against
// qbin(n+p+m-2-l, m-1-l). Requires n >= 2.
QCheckResult eq_simple_check(int n, int m, int p, int l);

// qmulti(n; e) * [e_i]_q against [n]_q * qmulti(n-1; ..., e_i - 1, ...).
QCheckResult bridge_check(int n, const std::vector<int>& e, int i);

// Partition constrained to fit in a box: at most max_parts parts, each at
// most max_size. Construction validates the bounds.
struct BoxedPartition {
  Partition partition;
  int max_parts = 0;
  int max_size = 0;

  static BoxedPartition in_box(Partition partition, int max_parts, int max_size);
};

// Decomposition of a partition in the (m-1-l) x (n-1+p) box:
//   index     = m - (number of parts > p) - 1,
//   squares   = successive Durfee square sides of the parts > p reduced by p,
//   low_tail  = the parts <= p,
//   remainders[j] = the partition to the right of square j.
// The weight inventory
//   |lambda| = p*(m-index-1) + sum squares^2 + |low_tail| + sum |remainders|
// always holds, and the decomposition is invertible.
struct DurfeeDecomposition {
  int index = 0;
  std::vector<int> squares;  // weakly decreasing, sum = m - index - 1
  Partition low_tail;
  std::vector<Partition> remainders;

  friend bool operator==(const DurfeeDecomposition&, const DurfeeDecomposition&) = default;
};

DurfeeDecomposition durfee_decompose(const BoxedPartition& boxed, int m, int n, int p, int l);
Partition durfee_recompose(const DurfeeDecomposition& d, int m, int n, int p, int l);

// Generating polynomial of the group with a given (index, squares):
//   q^(p(m-index-1) + sum squares^2) * qbin(p+index-l, p)
//     * qbin(n-1, s_1) * qbin(s_1, s_2) * ...
QPolynomial durfee_group_polynomial(int index, const std::vector<int>& squares,
                                    int m, int n, int p, int l);

}  // namespace treebij
