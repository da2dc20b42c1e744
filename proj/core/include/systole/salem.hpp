#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "systole/polynomial.hpp"
#include "systole/roots.hpp"

namespace systole {

inline constexpr double kCircleTolerance = 1e-8;
inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;
inline constexpr int kMaxSearchDegree = 16;

struct CyclotomicSplit {
  IntPolynomial core;
  /// k for every Phi_k removed, with repetition, ascending.
  std::vector<unsigned> removed;
};

/// Strips every cyclotomic factor Phi_k (phi(k) <= deg, k <= 2 deg^2) by exact
/// division. The input must be monic.
CyclotomicSplit divide_cyclotomic(const IntPolynomial& p);

enum class SalemStatus { ComplexSalem, NotComplexSalem, Indeterminate };

struct SalemVerdict {
  IntPolynomial input;
  std::vector<unsigned> cyclotomic_removed;
  IntPolynomial core;
  SalemStatus status = SalemStatus::NotComplexSalem;
  /// The root with |lambda| > 1 and positive imaginary part, when complex Salem.
  std::optional<Complex> lambda;
  double mahler_measure = 0.0;
  std::string irreducibility_method;
  /// Degree 4 with all four roots off the circle; accepted, but flagged.
  bool no_circle_roots = false;
  std::string diagnostic;

  bool is_complex_salem() const noexcept { return status == SalemStatus::ComplexSalem; }
};

SalemVerdict is_complex_salem(const IntPolynomial& p, double tol = kCircleTolerance);

double mahler_measure(const IntPolynomial& p);
double mahler_measure(const IntPolynomial& p, const RootProfile& profile);

bool self_reciprocal_check(const IntPolynomial& p);

/// Looks for a proper factor of p among products of root subsets of size at
/// most deg/2 that are closed under conjugation; each candidate is rounded to
/// integer coefficients and confirmed by exact division.
std::optional<IntPolynomial> find_factor_by_root_subsets(const IntPolynomial& p, const RootProfile& profile);

struct SearchOptions {
  std::uint64_t node_budget = kDefaultSearchBudget;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Upper bound on the number of leaves enumerate_complex_salem would visit.
std::uint64_t search_node_count(int degree, double mahler_max, std::optional<long> height_override);

/// Every complex Salem polynomial of the given even degree among monic
/// self-reciprocal integer polynomials with |a_i| <= min(h, C(d,i) M) and
/// Mahler measure <= M, sorted by measure. mahler_max may be infinite when a
/// height is given.
std::vector<SalemVerdict> enumerate_complex_salem(int degree, double mahler_max,
                                                  std::optional<long> height_override = std::nullopt,
                                                  const SearchOptions& options = {});

struct MinimalSalem {
  std::optional<SalemVerdict> minimum;
  int degree_max = 0;
  double mahler_cutoff = 0.0;
  std::string caveat;
};

/// Minimum Mahler measure over complex Salem polynomials of even degree in
/// [4, degree_max] with measure <= mahler_max.
MinimalSalem minimal_complex_salem(int degree_max, double mahler_max, const SearchOptions& options = {});

struct SalemSystoleBound {
  int n = 1;
  int degree_bound = 0;
  /// 2 log|lambda_min|; empty when no complex Salem number lies below the cutoff.
  std::optional<double> bound;
  std::optional<SalemVerdict> witness;
  double mahler_cutoff = 0.0;
  std::string caveat;
};

/// Uniform translation-length bound for non-uniform lattices in SU(n,1): the
/// expanding eigenvalue is a complex Salem number of degree <= 4(n+1).
SalemSystoleBound salem_systole_bound(int n, double mahler_max, const SearchOptions& options = {});

}  // namespace systole
