#include "treebij/genfun.hpp"

#include "treebij/enumeration.hpp"
#include "treebij/errors.hpp"
#include "treebij/tree.hpp"

namespace treebij {

void MultiPoly::add_term(const std::vector<int>& exponents, const BigInt& coeff) {
  if (static_cast<int>(exponents.size()) != n) throw InputError("exponent vector has wrong size");
  if (coeff == 0) return;
  auto it = terms.find(exponents);
  if (it == terms.end()) {
    terms.emplace(exponents, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

BigInt MultiPoly::total_mass() const {
  BigInt sum = 0;
  for (const auto& [exp, coeff] : terms) sum += coeff;
  return sum;
}

Partition monomial_type(const std::vector<int>& exponents) {
  std::vector<int> parts;
  for (int e : exponents) {
    if (e < 0) throw InputError("negative exponent");
    if (e > 0) parts.push_back(e);
  }
  return Partition::from_parts(std::move(parts));
}

MultiPoly expand_product(int n) {
  if (n < 2) throw InputError("product expansion needs n >= 2");
  MultiPoly poly;
  poly.n = n;
  std::vector<int> xn(n, 0);
  xn[n - 1] = 1;
  poly.terms.emplace(xn, 1);
  for (int i = 2; i <= n - 1; ++i) {
    // multiply by (i*x_i + x_{i+1} + ... + x_n)
    MultiPoly next;
    next.n = n;
    for (const auto& [exp, coeff] : poly.terms) {
      std::vector<int> bumped = exp;
      for (int j = i; j <= n; ++j) {
        ++bumped[j - 1];
        next.add_term(bumped, j == i ? coeff * i : coeff);
        --bumped[j - 1];
      }
    }
    poly = std::move(next);
  }
  return poly;
}

MultiPoly genfun_from_enumeration(int n) {
  if (n < 2) throw InputError("generating function needs n >= 2");
  MultiPoly poly;
  poly.n = n;
  for_each_tree(n, [&](const LabeledTree& t) {
    auto indeg = local_indegrees(t);
    poly.add_term({indeg.begin() + 1, indeg.end()}, 1);
  });
  return poly;
}

BigInt type_coefficient_sum(int n, const Partition& type) {
  if (type.weight() != n - 1) throw InputError("type must be a partition of n-1");
  BigInt sum = 0;
  for (const auto& [exp, coeff] : expand_product(n).terms)
    if (monomial_type(exp) == type) sum += coeff;
  return sum;
}

}  // namespace treebij
