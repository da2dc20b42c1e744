#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace systole::detail {

// Simultaneous Aberth-Ehrlich iteration. `coeffs` is ascending with nonzero
// leading and constant terms. On return `roots` holds deg approximations;
// false means some root failed the stopping test within max_iterations. A root
// stops once its residual is at rounding level or its last step is below
// step_tolerance relative to its modulus.
template <class T>
bool aberth(const std::vector<T>& coeffs, std::vector<std::complex<T>>& roots, int max_iterations = 500,
            T step_tolerance = std::numeric_limits<T>::epsilon()) {
  using C = std::complex<T>;
  const int n = static_cast<int>(coeffs.size()) - 1;
  roots.assign(n, C{});
  if (n == 1) {
    roots[0] = C(-coeffs[0] / coeffs[1]);
    return true;
  }

  std::vector<T> magnitudes(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) magnitudes[i] = std::abs(coeffs[i]);

  const T radius = std::pow(magnitudes[0] / magnitudes[n], T(1) / n);
  for (int k = 0; k < n; ++k) {
    const T angle = T(2) * std::numbers::pi_v<T> * k / n + T(0.4);
    roots[k] = std::polar(radius, angle);
  }

  constexpr T eps = std::numeric_limits<T>::epsilon();
  std::vector<bool> done(n, false);
  for (int iteration = 0; iteration < max_iterations; ++iteration) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      const C z = roots[k];
      const T r = std::abs(z);
      C p = coeffs[n];
      C dp = 0;
      T bound = magnitudes[n];
      for (int i = n - 1; i >= 0; --i) {
        dp = dp * z + p;
        p = p * z + coeffs[i];
        bound = bound * r + magnitudes[i];
      }
      if (std::abs(p) <= T(8) * eps * bound) {
        done[k] = true;
        continue;
      }
      all_done = false;
      if (dp == C(0)) {
        roots[k] = z * C(T(1) + T(16) * eps, T(16) * eps);
        continue;
      }
      const C w = p / dp;
      C s = 0;
      for (int j = 0; j < n; ++j) {
        if (j != k) s += T(1) / (z - roots[j]);
      }
      const C delta = w / (T(1) - w * s);
      roots[k] = z - delta;
      if (std::abs(delta) <= step_tolerance * std::abs(roots[k])) done[k] = true;
    }
    if (all_done) return true;
  }
  for (bool d : done) {
    if (!d) return false;
  }
  return true;
}

}  // namespace systole::detail
