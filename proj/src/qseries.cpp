#include "treebij/qseries.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "treebij/errors.hpp"

namespace treebij {

QPolynomial q_int(int n) {
  if (n <= 0) return {};
  return QPolynomial(std::vector<BigInt>(n, 1));
}

QPolynomial q_factorial(int n) {
  QPolynomial r(1);
  for (int i = 2; i <= n; ++i) r *= q_int(i);
  return r;
}

QPolynomial q_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  k = std::min(k, n - k);
  if (k == 0) return QPolynomial(1);
  thread_local std::map<std::pair<int, int>, QPolynomial> memo;
  auto key = std::pair(n, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  QPolynomial value = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shifted(k);
  memo.emplace(key, value);
  return value;
}

QPolynomial q_multinomial(int n, const std::vector<int>& e) {
  long long sum = std::accumulate(e.begin(), e.end(), 0LL);
  for (int v : e)
    if (v < 0) throw InputError("negative multinomial part");
  if (sum != n) throw InputError("multinomial parts do not sum to n");
  QPolynomial r(1);
  int rest = n;
  for (int v : e) {
    r *= q_binomial(rest, v);
    rest -= v;
  }
  return r;
}

std::vector<int> multiplicities_with_e0(const Partition& lambda, int n) {
  if (lambda.length() > n) throw InputError("partition has more than n parts");
  std::vector<int> e{n - lambda.length()};
  for (int i = 1; i <= lambda.max_part(); ++i) e.push_back(lambda.multiplicity(i));
  return e;
}

QPolynomial multisum_term(const Partition& lambda, int i, int m, int n, int p, int l) {
  if (lambda.weight() != m - 1) throw InputError("partition weight must be m-1");
  std::vector<int> e = multiplicities_with_e0(lambda, n);
  if (i < 0 || i >= static_cast<int>(e.size()) || e[i] == 0) return {};
  QPolynomial binom = q_binomial(p + i - l, p);
  if (binom.is_zero()) return {};
  auto conj = lambda.conjugate_parts();
  long long exponent = static_cast<long long>(p + 1) * (m - i - 1) + 2 * lambda.n_lambda();
  for (int k = 1; k <= i; ++k) exponent -= 2 * (conj[k - 1] - 1);
  if (exponent < 0) throw InvariantViolation("negative exponent in multisum term");
  --e[i];
  return (binom * q_multinomial(n - 1, e)).shifted(static_cast<int>(exponent));
}

QCheckResult thm4_check(int m, int n, int p, int l) {
  if (m < 1 || n < 1 || p < 0 || l < 0) throw InputError("bad identity parameters");
  QPolynomial lhs;
  for_each_partition(m - 1, m - 1, n, [&](const Partition& lambda) {
    for (int i = 0; i <= lambda.max_part(); ++i) lhs += multisum_term(lambda, i, m, n, p, l);
  });
  return {lhs, q_binomial(n + m - 2 + p - l, n - 1 + p)};
}

QCheckResult eq_lemma_check(int n, int k) {
  if (n < 1 || k < 0) throw InputError("bad identity parameters");
  QPolynomial rhs;
  for_each_partition(k, k, n, [&](const Partition& lambda) {
    rhs += q_multinomial(n, multiplicities_with_e0(lambda, n))
               .shifted(static_cast<int>(2 * lambda.n_lambda()));
  });
  return {q_binomial(n + k - 1, k), rhs};
}

QCheckResult eq_simple_check(int n, int m, int p, int l) {
  if (n < 2 || m < 1 || p < 0 || l < 0) throw InputError("bad identity parameters");
  QPolynomial lhs;
  for (int t = 0; t <= m - 1; ++t) {
    QPolynomial term = q_binomial(p + t - l, p) * q_binomial(n + m - 3 - t, n - 2);
    lhs += term.shifted((p + 1) * (m - 1 - t));
  }
  return {lhs, q_binomial(n + p + m - 2 - l, m - 1 - l)};
}

QCheckResult bridge_check(int n, const std::vector<int>& e, int i) {
  if (i < 0 || i >= static_cast<int>(e.size()) || e[i] < 1)
    throw InputError("bridge check needs e_i >= 1");
  std::vector<int> reduced = e;
  --reduced[i];
  return {q_multinomial(n, e) * q_int(e[i]), q_int(n) * q_multinomial(n - 1, reduced)};
}

BoxedPartition BoxedPartition::in_box(Partition partition, int max_parts, int max_size) {
  if (max_parts < 0 || max_size < 0) throw InputError("negative box bounds");
  if (partition.length() > max_parts || partition.max_part() > max_size)
    throw InputError("partition does not fit in the box");
  return {std::move(partition), max_parts, max_size};
}

DurfeeDecomposition durfee_decompose(const BoxedPartition& boxed, int m, int n, int p, int l) {
  if (boxed.max_parts != m - 1 - l || boxed.max_size != n - 1 + p)
    throw InputError("box bounds do not match the identity parameters");
  const auto parts = boxed.partition.parts();
  int tall = 0;  // number of parts exceeding p
  while (tall < static_cast<int>(parts.size()) && parts[tall] > p) ++tall;

  DurfeeDecomposition d;
  d.index = m - tall - 1;
  d.low_tail = Partition::from_parts({parts.begin() + tall, parts.end()});

  // parts > p reduced by p, consumed by successive Durfee squares
  std::vector<int> rows(parts.begin(), parts.begin() + tall);
  for (int& row : rows) row -= p;
  std::size_t at = 0;
  while (at < rows.size()) {
    int side = 0;
    while (at + side < rows.size() && rows[at + side] >= side + 1) ++side;
    std::vector<int> remainder;
    for (int t = 0; t < side; ++t)
      if (rows[at + t] - side > 0) remainder.push_back(rows[at + t] - side);
    d.squares.push_back(side);
    d.remainders.push_back(Partition::from_parts(std::move(remainder)));
    at += side;
  }

  // weight inventory
  long long weight = static_cast<long long>(p) * (m - d.index - 1) + d.low_tail.weight();
  for (int s : d.squares) weight += static_cast<long long>(s) * s;
  for (const auto& r : d.remainders) weight += r.weight();
  if (weight != boxed.partition.weight())
    throw InvariantViolation("Durfee decomposition lost weight");
  return d;
}

Partition durfee_recompose(const DurfeeDecomposition& d, int m, int n, int p, int l) {
  if (d.squares.size() != d.remainders.size())
    throw InputError("decomposition needs one remainder per square");
  std::vector<int> parts;
  for (std::size_t j = 0; j < d.squares.size(); ++j) {
    int side = d.squares[j];
    auto rem = d.remainders[j].parts();
    if (static_cast<int>(rem.size()) > side) throw InputError("remainder has too many parts");
    for (int t = 0; t < side; ++t)
      parts.push_back(side + (t < static_cast<int>(rem.size()) ? rem[t] : 0) + p);
  }
  for (int part : d.low_tail.parts()) parts.push_back(part);
  if (!std::is_sorted(parts.rbegin(), parts.rend()))
    throw InputError("decomposition does not stack into a partition");
  Partition lambda = Partition::from_parts(std::move(parts));
  BoxedPartition::in_box(lambda, m - 1 - l, n - 1 + p);  // bounds check
  return lambda;
}

QPolynomial durfee_group_polynomial(int index, const std::vector<int>& squares, int m, int n,
                                    int p, int l) {
  long long exponent = static_cast<long long>(p) * (m - index - 1);
  for (int s : squares) exponent += static_cast<long long>(s) * s;
  QPolynomial out = q_binomial(p + index - l, p);
  int width = n - 1;
  for (int s : squares) {
    out *= q_binomial(width, s);
    width = s;
  }
  return out.shifted(static_cast<int>(exponent));
}

}  // namespace treebij
