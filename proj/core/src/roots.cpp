#include "systole/roots.hpp"

#include <cmath>

#include "aberth.hpp"
#include "systole/errors.hpp"

namespace systole {
namespace {

// Roots of a squarefree integer polynomial with nonzero constant term.
std::vector<Complex> simple_roots(const IntPolynomial& f) {
  std::vector<long double> coeffs;
  coeffs.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) coeffs.push_back(static_cast<long double>(c.get_d()));

  std::vector<Complex> z;
  if (!detail::aberth(coeffs, z)) {
    throw ToleranceError("root finder did not converge for " + f.to_string());
  }
  for (auto& root : z) {
    for (int step = 0; step < 3; ++step) {
      Complex p = coeffs.back();
      Complex dp = 0;
      for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        dp = dp * root + p;
        p = p * root + coeffs[i];
      }
      if (dp == Complex(0)) break;
      const Complex next = root - p / dp;
      if (std::abs(f.evaluate(next)) >= std::abs(p)) break;
      root = next;
    }
  }
  return z;
}

}  // namespace

int RootProfile::count(CirclePosition position) const {
  int total = 0;
  for (const auto& r : roots) {
    if (r.position == position) total += r.multiplicity;
  }
  return total;
}

int RootProfile::total_multiplicity() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

RootProfile find_roots(const IntPolynomial& p, double tol) {
  if (p.degree() < 1) throw DomainError("root finding needs degree >= 1");
  if (!(tol > 0.0)) throw DomainError("circle tolerance must be positive");

  RootProfile profile;
  profile.tolerance = tol;

  std::size_t zeros = 0;
  while (p.coefficients()[zeros] == 0) ++zeros;
  if (zeros > 0) profile.roots.push_back({Complex(0), static_cast<int>(zeros), 0, CirclePosition::Inside, false});

  const IntPolynomial shifted(std::vector<ExactInteger>(p.coefficients().begin() + zeros, p.coefficients().end()));
  if (shifted.degree() >= 1) {
    for (const auto& [factor, multiplicity] : squarefree_decomposition(shifted)) {
      for (const Complex& z : simple_roots(factor)) {
        Root root;
        root.value = z;
        root.multiplicity = multiplicity;
        root.residual = std::abs(p.evaluate(z));
        const long double gap = std::abs(z) - 1.0L;
        if (std::abs(gap) <= tol) {
          root.position = CirclePosition::On;
        } else {
          root.position = gap > 0 ? CirclePosition::Outside : CirclePosition::Inside;
          root.ambiguous = std::abs(gap) <= 2 * tol;
        }
        profile.roots.push_back(root);
      }
    }
  }
  return profile;
}

}  // namespace systole
