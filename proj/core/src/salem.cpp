#include "systole/salem.hpp"

#include <algorithm>
#include <cmath>

#include "systole/errors.hpp"

namespace systole {
namespace {

constexpr const char* kSubsetMethod = "root-subset-reconstruction";

long double scale(const Complex& z) { return std::max(1.0L, std::abs(z)); }

bool near(const Complex& a, const Complex& b, double tol) { return std::abs(a - b) <= tol * scale(a); }

// Conjugation-closed blocks of roots: a real root alone, or z with conj(z).
std::vector<std::vector<Complex>> conjugate_blocks(const RootProfile& profile) {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
  std::vector<std::vector<Complex>> blocks;
  for (const auto& root : profile.roots) {
    for (int k = 0; k < root.multiplicity; ++k) {
      const Complex z = root.value;
      if (std::abs(z.imag()) <= 1e-9L * scale(z)) {
        blocks.push_back({Complex(z.real(), 0)});
      } else if (z.imag() > 0) {
        upper.push_back(z);
      } else {
        lower.push_back(z);
      }
    }
  }
  for (const Complex& z : upper) {
    auto best = std::min_element(lower.begin(), lower.end(), [&](const Complex& a, const Complex& b) {
      return std::abs(a - std::conj(z)) < std::abs(b - std::conj(z));
    });
    if (best == lower.end()) {
      blocks.push_back({z});
      continue;
    }
    blocks.push_back({z, *best});
    lower.erase(best);
  }
  for (const Complex& z : lower) blocks.push_back({z});
  return blocks;
}

// Monic integer polynomial nearest to prod (x - r), or nothing if a
// coefficient is out of 64-bit range.
std::optional<IntPolynomial> rounded_product(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1)};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, Complex(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  std::vector<ExactInteger> out;
  out.reserve(c.size());
  for (const Complex& x : c) {
    if (!(std::abs(x.real()) < 1e15L)) return std::nullopt;
    out.emplace_back(static_cast<long>(std::llround(x.real())));
  }
  return IntPolynomial(std::move(out));
}

SalemVerdict reject(SalemVerdict verdict, std::string reason) {
  verdict.status = SalemStatus::NotComplexSalem;
  verdict.lambda.reset();
  verdict.diagnostic = std::move(reason);
  return verdict;
}

}  // namespace

CyclotomicSplit divide_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  if (!p.is_monic()) throw DomainError("cyclotomic stripping needs a monic polynomial");
  CyclotomicSplit split{p, {}};
  const unsigned d = static_cast<unsigned>(p.degree());
  // phi(k) >= sqrt(k/2), so phi(k) <= d forces k <= 2 d^2.
  for (unsigned k = 1; k <= 2 * d * d && split.core.degree() > 0; ++k) {
    if (euler_phi(k) > static_cast<unsigned>(split.core.degree())) continue;
    const IntPolynomial phi = cyclotomic(k);
    while (split.core.degree() >= phi.degree()) {
      auto quotient = exact_quotient(split.core, phi);
      if (!quotient) break;
      split.core = std::move(*quotient);
      split.removed.push_back(k);
    }
  }
  return split;
}

bool self_reciprocal_check(const IntPolynomial& p) { return p.reciprocal() == p; }

double mahler_measure(const IntPolynomial& p, const RootProfile& profile) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  long double measure = std::abs(static_cast<long double>(p.leading().get_d()));
  for (const auto& root : profile.roots) {
    const long double r = std::abs(root.value);
    if (r > 1.0L) measure *= std::pow(r, static_cast<long double>(root.multiplicity));
  }
  return static_cast<double>(measure);
}

double mahler_measure(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial");
  if (p.degree() == 0) return std::abs(p.leading().get_d());
  return mahler_measure(p, find_roots(p, kCircleTolerance));
}

std::optional<IntPolynomial> find_factor_by_root_subsets(const IntPolynomial& p, const RootProfile& profile) {
  if (p.degree() < 2) return std::nullopt;
  for (const auto& root : profile.roots) {
    if (root.multiplicity > 1) return gcd(p, derivative(p));
  }

  const auto blocks = conjugate_blocks(profile);
  const std::size_t half = static_cast<std::size_t>(p.degree()) / 2;
  const std::size_t count = blocks.size();
  // Any factor or its cofactor has degree <= deg/2; blocks keep candidates real.
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << count); ++mask) {
    std::vector<Complex> subset;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask >> i & 1) subset.insert(subset.end(), blocks[i].begin(), blocks[i].end());
    }
    if (subset.size() > half) continue;
    const auto candidate = rounded_product(subset);
    if (!candidate || candidate->degree() < 1) continue;
    if (exact_quotient(p, *candidate)) return candidate;
  }
  return std::nullopt;
}

SalemVerdict is_complex_salem(const IntPolynomial& p, double tol) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  SalemVerdict verdict;
  verdict.input = p;
  verdict.core = p;
  verdict.irreducibility_method = "not-checked";

  if (!p.is_monic()) {
    verdict.mahler_measure = mahler_measure(p);
    return reject(std::move(verdict), "not monic");
  }

  CyclotomicSplit split = divide_cyclotomic(p);
  verdict.core = split.core;
  verdict.cyclotomic_removed = split.removed;
  if (!split.removed.empty()) {
    verdict.mahler_measure = mahler_measure(split.core);
    return reject(std::move(verdict), "has cyclotomic factors");
  }
  if (p.degree() < 4) {
    verdict.mahler_measure = mahler_measure(p);
    return reject(std::move(verdict), "degree below 4");
  }

  const RootProfile profile = find_roots(p, tol);
  verdict.mahler_measure = mahler_measure(p, profile);

  std::vector<Complex> outside;
  std::vector<Complex> inside;
  for (const auto& root : profile.roots) {
    if (root.ambiguous) {
      verdict.status = SalemStatus::Indeterminate;
      verdict.diagnostic = "root " + std::to_string(static_cast<double>(root.value.real())) + (root.value.imag() < 0 ? "" : "+") +
                           std::to_string(static_cast<double>(root.value.imag())) +
                           "i lies within 2*tol of the unit circle";
      return verdict;
    }
    if (root.multiplicity > 1) return reject(std::move(verdict), "repeated root");
    if (root.position == CirclePosition::Outside) outside.push_back(root.value);
    if (root.position == CirclePosition::Inside) inside.push_back(root.value);
  }
  if (outside.size() != 2 || inside.size() != 2) {
    return reject(std::move(verdict), std::to_string(outside.size()) + " roots outside and " +
                                          std::to_string(inside.size()) + " inside the unit circle, need 2 and 2");
  }

  const Complex lambda = outside[0].imag() >= outside[1].imag() ? outside[0] : outside[1];
  if (std::abs(lambda.imag()) <= tol * scale(lambda)) return reject(std::move(verdict), "off-circle roots are real");
  const Complex lambda_bar = std::conj(lambda);
  const Complex other = outside[0].imag() >= outside[1].imag() ? outside[1] : outside[0];
  if (!near(other, lambda_bar, tol)) return reject(std::move(verdict), "outside roots are not conjugate");
  const Complex inv = Complex(1) / lambda;
  const Complex inv_bar = std::conj(inv);
  const bool paired = (near(inside[0], inv, tol) && near(inside[1], inv_bar, tol)) ||
                      (near(inside[0], inv_bar, tol) && near(inside[1], inv, tol));
  if (!paired) return reject(std::move(verdict), "inside roots are not 1/lambda and 1/conj(lambda)");

  verdict.irreducibility_method = kSubsetMethod;
  if (auto factor = find_factor_by_root_subsets(p, profile)) {
    return reject(std::move(verdict), "reducible: divisible by " + factor->to_string());
  }

  verdict.status = SalemStatus::ComplexSalem;
  verdict.lambda = lambda;
  verdict.no_circle_roots = p.degree() == 4;
  return verdict;
}

}  // namespace systole
