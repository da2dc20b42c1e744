#pragma once

#include <complex>
#include <vector>

#include "systole/polynomial.hpp"

namespace systole {

using Complex = std::complex<long double>;

enum class CirclePosition { Inside, On, Outside };

struct Root {
  Complex value;
  int multiplicity = 1;
  /// |p(value)| in extended precision.
  long double residual = 0;
  CirclePosition position = CirclePosition::On;
  /// ||value| - 1| falls in (tol, 2 tol]: too close to call off-circle.
  bool ambiguous = false;
};

struct RootProfile {
  std::vector<Root> roots;
  double tolerance = 0.0;

  int count(CirclePosition position) const;
  int total_multiplicity() const;
};

/// All complex roots by Aberth-Ehrlich iteration in long double, polished by
/// Newton steps, clustered into multiplicities and classified against the
/// unit circle with band tol. Throws ToleranceError if the iteration does not
/// converge.
RootProfile find_roots(const IntPolynomial& p, double tol);

}  // namespace systole
