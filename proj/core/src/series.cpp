#include "noc/series.hpp"

#include <algorithm>

namespace noc {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, unsigned power) {
  std::vector<BigInt> c(power + 1, BigInt(0));
  c[power] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] += other.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), other.coeffs_.size()), BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) c[i] -= other.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const BigInt& scalar) const {
  std::vector<BigInt> c = coeffs_;
  for (BigInt& x : c) x *= scalar;
  return IntPolynomial(std::move(c));
}

RationalSeries::RationalSeries(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.coeff(0) == 0)
    throw std::invalid_argument("series denominator must have nonzero constant term");
}

std::vector<BigInt> RationalSeries::coefficients(unsigned upto) const {
  // den_0*c_n = num_n - sum_{j>=1} den_j*c_{n-j}
  const BigInt d0 = den_.coeff(0);
  std::vector<BigInt> c(upto + 1);
  for (unsigned n = 0; n <= upto; ++n) {
    BigInt acc = num_.coeff(n);
    const unsigned jmax = std::min<unsigned>(n, static_cast<unsigned>(std::max(den_.degree(), 0)));
    for (unsigned j = 1; j <= jmax; ++j) acc -= den_.coeff(j) * c[n - j];
    BigInt quotient = acc / d0;
    if (quotient * d0 != acc) throw std::logic_error("series has a non-integer coefficient");
    c[n] = std::move(quotient);
  }
  return c;
}

bool series_equal(const RationalSeries& a, const RationalSeries& b) {
  return a.num() * b.den() == b.num() * a.den();
}

}  // namespace noc
