#pragma once

#include <initializer_list>
#include <vector>

#include "noc/types.hpp"

namespace noc {

/// Polynomial with arbitrary-precision integer coefficients, index = power.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<BigInt> coefficients)
      : IntPolynomial(std::vector<BigInt>(coefficients)) {}

  static IntPolynomial monomial(BigInt coefficient, unsigned power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
  }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator*(const BigInt& scalar) const;
  bool operator==(const IntPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// num/den as a formal power series; den must have nonzero constant term.
/// Coefficients are extracted through the linear recurrence the denominator
/// induces, exactly.
class RationalSeries {
 public:
  RationalSeries(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  /// Coefficients c_0..c_upto. Throws std::logic_error if any coefficient
  /// is not an integer (cannot happen for series of cardinalities).
  std::vector<BigInt> coefficients(unsigned upto) const;
  BigInt coefficient(unsigned index) const { return coefficients(index).back(); }

 private:
  IntPolynomial num_, den_;
};

/// Exact identity test by cross-multiplication: a.num*b.den == b.num*a.den.
bool series_equal(const RationalSeries& a, const RationalSeries& b);

}  // namespace noc
