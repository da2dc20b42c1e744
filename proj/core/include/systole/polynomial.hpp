#pragma once

#include <complex>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "systole/exact.hpp"

namespace systole {

/// Dense integer polynomial, coefficients in ascending degree, no trailing
/// zeros. The zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInteger> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const ExactInteger& value);
  /// x^k - 1
  static IntPolynomial x_pow_minus_one(unsigned k);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const;
  bool is_one() const;

  const std::vector<ExactInteger>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  ExactInteger coeff(std::size_t i) const;
  const ExactInteger& leading() const;

  /// x^deg p(1/x)
  IntPolynomial reciprocal() const;

  ExactInteger evaluate(const ExactInteger& x) const;
  std::complex<long double> evaluate(std::complex<long double> z) const;

  /// Canonical text form: comma-separated ascending coefficients, "0" for zero.
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void normalize();

  std::vector<ExactInteger> coeffs_;
};

/// q with a == q * b exactly over Z, or nothing if b does not divide a.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial derivative(const IntPolynomial& p);

/// gcd of the coefficients, nonnegative.
ExactInteger content(const IntPolynomial& p);

/// p / content(p), with positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive gcd over Z[x] with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct SquarefreeFactor {
  IntPolynomial factor;
  int multiplicity = 1;
};

/// Yun's algorithm: p = const * prod factor^multiplicity with pairwise coprime,
/// squarefree, primitive factors of positive degree.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

/// k-th cyclotomic polynomial.
IntPolynomial cyclotomic(unsigned k);

unsigned euler_phi(unsigned k);

}  // namespace systole
