#pragma once

#include <string>
#include <vector>

#include "greenseq/integer.hpp"

namespace greenseq {

/// Integer Laurent polynomial in one variable v, stored as a lowest exponent
/// and a dense coefficient run with nonzero first and last entries.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  LaurentPolynomial(Integer constant); // NOLINT: implicit on purpose
  static LaurentPolynomial monomial(Integer coefficient, int exponent);
  /// Coefficients of v^low, v^(low+1), ...
  static LaurentPolynomial from_coefficients(int low, std::vector<Integer> coefficients);

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& leading() const { return c_.back(); }
  Integer coefficient(int exponent) const;

  LaurentPolynomial shifted(int by) const;
  /// gcd of the coefficients, 0 for the zero polynomial.
  Integer content() const;
  LaurentPolynomial divided_by(const Integer& d) const; // exact

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Descending powers, e.g. "v^4 + 2 v^2 - 1".
  std::string to_string() const;

private:
  void trim();

  int low_ = 0;
  std::vector<Integer> c_;
};

/// Exact quotient of two ordinary polynomials (low() == 0). Throws
/// InternalError when the division is not exact.
LaurentPolynomial exact_quotient(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Primitive gcd of two ordinary polynomials, positive leading coefficient.
LaurentPolynomial polynomial_gcd(LaurentPolynomial a, LaurentPolynomial b);

/// Element of Q(v) kept in a canonical form: the denominator is an ordinary
/// polynomial with nonzero constant term and positive leading coefficient,
/// coprime to the numerator, and numerator and denominator share no integer
/// content. Any power of v lives in the numerator. Equal values therefore
/// have equal representations.
class LaurentFraction {
public:
  LaurentFraction() : den_(Integer(1)) {}
  LaurentFraction(LaurentPolynomial numerator); // NOLINT
  LaurentFraction(LaurentPolynomial numerator, LaurentPolynomial denominator);

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LaurentFraction operator-() const;
  friend LaurentFraction operator+(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator-(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator*(const LaurentFraction& a, const LaurentFraction& b);
  friend LaurentFraction operator/(const LaurentFraction& a, const LaurentFraction& b);
  LaurentFraction& operator+=(const LaurentFraction& b) { return *this = *this + b; }
  friend bool operator==(const LaurentFraction&, const LaurentFraction&) = default;

  /// "(numerator)/(denominator)".
  std::string to_string() const;

private:
  struct Normalized {};
  LaurentFraction(LaurentPolynomial numerator, LaurentPolynomial denominator, Normalized)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void normalize();

  LaurentPolynomial num_;
  LaurentPolynomial den_;
};

} // namespace greenseq
