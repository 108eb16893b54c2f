#pragma once

#include <map>
#include <vector>

#include "treebij/bigint.hpp"
#include "treebij/partition.hpp"

namespace treebij {

// Multivariate polynomial in x_1..x_n; terms map a dense exponent vector
// (size n) to a nonzero coefficient, keyed in ascending lexicographic order.
struct MultiPoly {
  int n = 0;
  std::map<std::vector<int>, BigInt> terms;

  void add_term(const std::vector<int>& exponents, const BigInt& coeff);
  BigInt total_mass() const;  // value with every variable set to 1

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;
};

// The type of a monomial: multiplicities of its nonzero exponents.
Partition monomial_type(const std::vector<int>& exponents);

// x_n * prod_{i=2}^{n-1} (i*x_i + x_{i+1} + ... + x_n), expanded exactly.
// Requires n >= 2.
MultiPoly expand_product(int n);

// Sum over all trees on [n] of x^(local indegree vector); equals
// expand_product(n).
MultiPoly genfun_from_enumeration(int n);

// Sum of the coefficients of the monomials of the given type in
// expand_product(n). Requires weight(type) == n-1.
BigInt type_coefficient_sum(int n, const Partition& type);

}  // namespace treebij
