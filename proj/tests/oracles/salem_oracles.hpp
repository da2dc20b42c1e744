#pragma once

// Unpruned enumeration and random test polynomials for the Salem module.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "systole/polynomial.hpp"
#include "systole/salem.hpp"

namespace oracle {

// Every monic palindromic polynomial of the degree with |a_i| <= height, run
// through the full verdict; canonical strings of the complex Salem ones with
// measure <= mahler_max, sorted.
inline std::vector<std::string> brute_force_salem(int degree, long height, double mahler_max) {
  const int half = degree / 2;
  std::vector<long> a(half + 1, -height);
  a[0] = 1;
  std::vector<std::string> found;
  while (true) {
    std::vector<systole::ExactInteger> coeffs(degree + 1);
    for (int j = 0; j <= half; ++j) coeffs[j] = coeffs[degree - j] = systole::ExactInteger(a[j]);
    const systole::SalemVerdict v = systole::is_complex_salem(systole::IntPolynomial(std::move(coeffs)));
    if (v.is_complex_salem() && v.mahler_measure <= mahler_max * (1.0 + 1e-12)) found.push_back(v.input.to_string());
    int j = 1;
    while (j <= half && ++a[j] > height) a[j++] = -height;
    if (j > half) break;
  }
  std::sort(found.begin(), found.end());
  return found;
}

// Monic Eisenstein polynomial at prime p: irreducible over Q.
inline systole::IntPolynomial random_eisenstein(std::mt19937& rng, int degree, long prime) {
  std::uniform_int_distribution<long> multiple(-1, 1);
  std::uniform_int_distribution<long> unit(1, prime - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<systole::ExactInteger> coeffs(degree + 1);
  coeffs[0] = systole::ExactInteger(prime * unit(rng) * (sign(rng) ? 1 : -1));
  for (int i = 1; i < degree; ++i) coeffs[i] = systole::ExactInteger(prime * multiple(rng));
  coeffs[degree] = 1;
  return systole::IntPolynomial(std::move(coeffs));
}

}  // namespace oracle
