#pragma once

#include <string>
#include <vector>

#include "treebij/bigint.hpp"

namespace treebij {

// Polynomial in q with exact integer coefficients, dense, trailing zeros
// trimmed. Equality is coefficientwise.
class QPolynomial {
 public:
  QPolynomial() = default;
  QPolynomial(int constant);                 // NOLINT: implicit by design
  QPolynomial(BigInt constant);              // NOLINT
  explicit QPolynomial(std::vector<BigInt> coeffs);

  static QPolynomial monomial(BigInt coeff, int exponent);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 if zero
  BigInt coeff(int exponent) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt eval_at_one() const;

  QPolynomial shifted(int exponent) const;  // multiply by q^exponent

  QPolynomial& operator+=(const QPolynomial& rhs);
  QPolynomial& operator-=(const QPolynomial& rhs);
  QPolynomial& operator*=(const QPolynomial& rhs);

  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator-(QPolynomial lhs, const QPolynomial& rhs) { return lhs -= rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Exact division; throws InvariantViolation on a nonzero remainder.
  static QPolynomial div_exact(const QPolynomial& num, const QPolynomial& den);

  std::string to_string() const;  // "1 + q + 2*q^2"

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace treebij
