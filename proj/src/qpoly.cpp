#include "treebij/qpoly.hpp"

#include <sstream>

#include "treebij/errors.hpp"

namespace treebij {

QPolynomial::QPolynomial(int constant) : QPolynomial(BigInt(constant)) {}

QPolynomial::QPolynomial(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::monomial(BigInt coeff, int exponent) {
  if (exponent < 0) throw InputError("negative exponent");
  QPolynomial p;
  if (coeff != 0) {
    p.coeffs_.assign(exponent + 1, 0);
    p.coeffs_[exponent] = std::move(coeff);
  }
  return p;
}

BigInt QPolynomial::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[exponent];
}

BigInt QPolynomial::eval_at_one() const {
  BigInt sum = 0;
  for (const BigInt& c : coeffs_) sum += c;
  return sum;
}

QPolynomial QPolynomial::shifted(int exponent) const {
  if (exponent < 0) throw InputError("negative exponent");
  if (is_zero()) return {};
  QPolynomial p;
  p.coeffs_.assign(coeffs_.size() + exponent, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) p.coeffs_[i + exponent] = coeffs_[i];
  return p;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  QPolynomial out;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  out.trim();
  return out;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) { return *this = *this * rhs; }

QPolynomial QPolynomial::div_exact(const QPolynomial& num, const QPolynomial& den) {
  if (den.is_zero()) throw InputError("division by the zero polynomial");
  if (num.is_zero()) return {};
  if (num.degree() < den.degree())
    throw InvariantViolation("polynomial division left a remainder");
  std::vector<BigInt> rem = num.coeffs_;
  std::vector<BigInt> quot(num.degree() - den.degree() + 1, 0);
  const BigInt& lead = den.coeffs_.back();
  for (int d = static_cast<int>(quot.size()) - 1; d >= 0; --d) {
    BigInt c = rem[d + den.degree()];
    if (c == 0) continue;
    if (c % lead != 0) throw InvariantViolation("polynomial division left a remainder");
    quot[d] = c / lead;
    for (int j = 0; j <= den.degree(); ++j) rem[d + j] -= quot[d] * den.coeffs_[j];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw InvariantViolation("polynomial division left a remainder");
  return QPolynomial(std::move(quot));
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    BigInt c = coeffs_[i];
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    BigInt a = abs(c);
    if (i == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << '*';
      out << 'q';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  return out.str();
}

}  // namespace treebij
