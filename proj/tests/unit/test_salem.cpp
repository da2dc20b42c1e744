#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "salem_oracles.hpp"
#include "systole/errors.hpp"
#include "systole/roots.hpp"
#include "systole/salem.hpp"

using namespace systole;

namespace {

const IntPolynomial kDegree6{1, 1, 1, -1, 1, 1, 1};
const IntPolynomial kDegree8{1, 0, 0, 1, 1, 1, 0, 0, 1};
const IntPolynomial kDegree10{1, 1, 0, 0, 0, -1, 0, 0, 0, 1, 1};

bool contains(const std::vector<SalemVerdict>& found, const IntPolynomial& p) {
  return std::any_of(found.begin(), found.end(), [&](const SalemVerdict& v) { return v.input == p; });
}

std::vector<std::string> strings(const std::vector<SalemVerdict>& found) {
  std::vector<std::string> out;
  for (const auto& v : found) out.push_back(v.input.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

void expect_reciprocal_roots(const IntPolynomial& p) {
  const RootProfile profile = find_roots(p, kCircleTolerance);
  for (const auto& r : profile.roots) {
    const Complex inverse = Complex(1) / r.value;
    long double nearest = 1e9L;
    for (const auto& s : profile.roots) nearest = std::min(nearest, std::abs(s.value - inverse));
    EXPECT_LE(nearest, kCircleTolerance) << p.to_string();
  }
}

}  // namespace

TEST(SalemExamples, AllThreeVerify) {
  for (const IntPolynomial& p : {kDegree6, kDegree8, kDegree10}) {
    const SalemVerdict v = is_complex_salem(p);
    EXPECT_TRUE(v.is_complex_salem()) << p.to_string() << ": " << v.diagnostic;
    EXPECT_TRUE(self_reciprocal_check(p));
    ASSERT_TRUE(v.lambda);
    EXPECT_GT(std::abs(*v.lambda), 1.0L);
    EXPECT_GT(v.lambda->imag(), 0.0L);
    EXPECT_NEAR(v.mahler_measure, static_cast<double>(std::norm(*v.lambda)), 1e-9 * v.mahler_measure);
    EXPECT_EQ(v.irreducibility_method, "root-subset-reconstruction");
    EXPECT_TRUE(v.cyclotomic_removed.empty());
    EXPECT_EQ(v.core, p);
    EXPECT_FALSE(v.no_circle_roots);
    for (const auto& r : find_roots(p, kCircleTolerance).roots) EXPECT_LE(r.residual, 1e-9L);
    expect_reciprocal_roots(p);
  }
}

TEST(SalemVerdicts, Rejections) {
  EXPECT_FALSE(is_complex_salem(IntPolynomial{1, 1, 1}).is_complex_salem());
  const SalemVerdict golden = is_complex_salem(IntPolynomial{1, -3, 1});
  EXPECT_FALSE(golden.is_complex_salem());
  EXPECT_EQ(golden.status, SalemStatus::NotComplexSalem);
  // Real Salem: Lehmer's polynomial has one real root outside.
  EXPECT_FALSE(is_complex_salem(IntPolynomial{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}).is_complex_salem());
  // Not monic.
  EXPECT_FALSE(is_complex_salem(IntPolynomial{1, 1, 1, -1, 1, 1, 2}).is_complex_salem());
  // Reducible: the degree-6 example times itself is rejected as repeated, times
  // a non-cyclotomic quadratic as reducible.
  EXPECT_FALSE(is_complex_salem(kDegree6 * kDegree6).is_complex_salem());
  const SalemVerdict product = is_complex_salem(IntPolynomial{1, 1, 1, 1, 1} * IntPolynomial{1, 1, 3, 1, 1});
  EXPECT_FALSE(product.is_complex_salem());
  // A cyclotomic factor is stripped and reported.
  const SalemVerdict with_phi = is_complex_salem(kDegree6 * cyclotomic(5));
  EXPECT_FALSE(with_phi.is_complex_salem());
  EXPECT_EQ(with_phi.cyclotomic_removed, std::vector<unsigned>{5});
  EXPECT_EQ(with_phi.core, kDegree6);
  EXPECT_THROW(is_complex_salem(IntPolynomial{}), DomainError);
}

TEST(SalemVerdicts, DegreeFourWithoutCircleRootsIsFlagged) {
  const SalemVerdict v = is_complex_salem(IntPolynomial{1, 1, 3, 1, 1});
  EXPECT_TRUE(v.is_complex_salem()) << v.diagnostic;
  EXPECT_TRUE(v.no_circle_roots);
}

TEST(SalemVerdicts, AmbiguousRootIsIndeterminate) {
  // |lambda| - 1 is about 0.133 for the degree-10 example, inside (0.1, 0.2].
  const SalemVerdict v = is_complex_salem(kDegree10, 0.1);
  EXPECT_EQ(v.status, SalemStatus::Indeterminate);
  EXPECT_FALSE(v.is_complex_salem());
  EXPECT_FALSE(v.diagnostic.empty());
}

TEST(DivideCyclotomic, Examples) {
  const CyclotomicSplit split = divide_cyclotomic(IntPolynomial{-1, 1} * IntPolynomial{1, 1, 1});
  EXPECT_TRUE(split.core.is_one());
  EXPECT_EQ(split.removed, (std::vector<unsigned>{1, 3}));
  const CyclotomicSplit none = divide_cyclotomic(IntPolynomial{1, -3, 1});
  EXPECT_EQ(none.core, (IntPolynomial{1, -3, 1}));
  EXPECT_TRUE(none.removed.empty());
  const CyclotomicSplit phi4 = divide_cyclotomic(IntPolynomial{1, 0, 1});
  EXPECT_TRUE(phi4.core.is_one());
  EXPECT_EQ(phi4.removed, std::vector<unsigned>{4});
}

TEST(DivideCyclotomic, ExactOnRandomProducts) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<unsigned> index(1, 30);
  std::uniform_int_distribution<int> count(0, 3);
  for (int i = 0; i < 100; ++i) {
    IntPolynomial input = (i % 2) ? kDegree6 : IntPolynomial{1, -3, 1};
    std::vector<unsigned> used;
    for (int c = count(rng); c > 0; --c) {
      const unsigned k = index(rng);
      used.push_back(k);
      input = input * cyclotomic(k);
    }
    std::sort(used.begin(), used.end());
    const CyclotomicSplit split = divide_cyclotomic(input);
    EXPECT_EQ(split.removed, used);
    IntPolynomial rebuilt = split.core;
    for (unsigned k : split.removed) rebuilt = rebuilt * cyclotomic(k);
    EXPECT_EQ(rebuilt, input);
  }
}

TEST(MahlerMeasure, Examples) {
  EXPECT_NEAR(mahler_measure(IntPolynomial{-2, 1}), 2.0, 1e-15);
  for (unsigned k = 1; k <= 30; ++k) EXPECT_NEAR(mahler_measure(cyclotomic(k)), 1.0, 1e-12) << k;
  EXPECT_NEAR(mahler_measure(IntPolynomial{1, 0, 3}), 3.0, 1e-14);
  const SalemVerdict v = is_complex_salem(kDegree6);
  EXPECT_NEAR(mahler_measure(kDegree6), static_cast<double>(std::norm(*v.lambda)), 1e-9);
}

TEST(SelfReciprocal, Examples) {
  EXPECT_TRUE(self_reciprocal_check(kDegree6));
  EXPECT_TRUE(self_reciprocal_check(kDegree10));
  EXPECT_FALSE(self_reciprocal_check(IntPolynomial{2, -3, 1}));
  EXPECT_FALSE(self_reciprocal_check(IntPolynomial{-1, 0, 1}));
}

TEST(IrreducibilityCertifier, FindsFactorOfEisensteinProducts) {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> degree(1, 4);
  std::uniform_int_distribution<int> prime_index(0, 1);
  const long primes[] = {2, 3};
  for (int i = 0; i < 100; ++i) {
    const IntPolynomial f = oracle::random_eisenstein(rng, degree(rng), primes[prime_index(rng)]);
    const IntPolynomial g = oracle::random_eisenstein(rng, degree(rng), primes[prime_index(rng)]);
    const IntPolynomial p = f * g;
    const auto factor = find_factor_by_root_subsets(p, find_roots(p, kCircleTolerance));
    ASSERT_TRUE(factor) << f.to_string() << " * " << g.to_string();
    EXPECT_GE(factor->degree(), 1);
    EXPECT_LT(factor->degree(), p.degree());
    EXPECT_TRUE(exact_quotient(p, *factor).has_value());
  }
}

TEST(IrreducibilityCertifier, NoFactorForEisenstein) {
  std::mt19937 rng(1618);
  for (int i = 0; i < 50; ++i) {
    const IntPolynomial f = oracle::random_eisenstein(rng, 2 + i % 6, i % 2 ? 2 : 3);
    EXPECT_FALSE(find_factor_by_root_subsets(f, find_roots(f, kCircleTolerance))) << f.to_string();
  }
}

TEST(Enumerate, Examples) {
  const auto six = enumerate_complex_salem(6, INFINITY, 1);
  EXPECT_TRUE(contains(six, kDegree6));
  const auto eight = enumerate_complex_salem(8, INFINITY, 1);
  EXPECT_TRUE(contains(eight, kDegree8));
  EXPECT_TRUE(enumerate_complex_salem(4, INFINITY, 0).empty());
}

TEST(Enumerate, ResultsSatisfyInvariants) {
  // Degree 4 starts at measure 2.369.
  for (const auto& [d, cutoff] : {std::pair{4, 3.0}, {6, 2.0}, {8, 2.0}}) {
    const auto found = enumerate_complex_salem(d, cutoff);
    EXPECT_FALSE(found.empty());
    double previous = 0.0;
    for (const auto& v : found) {
      EXPECT_TRUE(v.is_complex_salem());
      EXPECT_EQ(v.input.degree(), d);
      EXPECT_TRUE(self_reciprocal_check(v.input));
      EXPECT_LE(v.mahler_measure, cutoff);
      EXPECT_GE(v.mahler_measure, previous - 1e-9);
      previous = v.mahler_measure;
      EXPECT_NEAR(v.mahler_measure, static_cast<double>(std::norm(*v.lambda)), 1e-9 * v.mahler_measure);
      expect_reciprocal_roots(v.input);
    }
  }
}

TEST(Enumerate, MatchesUnprunedScan) {
  struct Case {
    int degree;
    long height;
    double mahler;
  };
  for (const Case c : {Case{4, 6, 3.0}, Case{6, 3, 2.0}, Case{8, 2, 2.0}, Case{10, 1, 2.0}, Case{10, 2, 1.6},
                       Case{12, 1, 2.0}, Case{8, 1, INFINITY}}) {
    const auto pruned = strings(enumerate_complex_salem(c.degree, c.mahler, c.height));
    EXPECT_EQ(pruned, oracle::brute_force_salem(c.degree, c.height, c.mahler))
        << "degree " << c.degree << " height " << c.height << " M " << c.mahler;
  }
}

TEST(Enumerate, MatchesUnprunedScanWithoutHeight) {
  // Binomial box floor(C(6, j) * 1.3) = 7, 19, 26 versus the pruned search.
  const auto pruned = strings(enumerate_complex_salem(6, 1.3));
  std::vector<std::string> brute;
  for (long a1 = -7; a1 <= 7; ++a1) {
    for (long a2 = -19; a2 <= 19; ++a2) {
      for (long a3 = -26; a3 <= 26; ++a3) {
        const IntPolynomial p{1, a1, a2, a3, a2, a1, 1};
        const SalemVerdict v = is_complex_salem(p);
        if (v.is_complex_salem() && v.mahler_measure <= 1.3) brute.push_back(p.to_string());
      }
    }
  }
  std::sort(brute.begin(), brute.end());
  EXPECT_EQ(pruned, brute);
}

TEST(Enumerate, DeterministicAcrossThreadCounts) {
  SearchOptions one;
  one.threads = 1;
  SearchOptions four;
  four.threads = 4;
  const auto a = enumerate_complex_salem(8, 1.6, std::nullopt, one);
  const auto b = enumerate_complex_salem(8, 1.6, std::nullopt, four);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].input, b[i].input);
}

TEST(Enumerate, RejectsBadArgumentsAndRefusesLargeSearches) {
  EXPECT_THROW(enumerate_complex_salem(5, 2.0), DomainError);
  EXPECT_THROW(enumerate_complex_salem(18, 2.0), DomainError);
  EXPECT_THROW(enumerate_complex_salem(6, 1.0), DomainError);
  EXPECT_THROW(enumerate_complex_salem(6, INFINITY), DomainError);
  SearchOptions tiny;
  tiny.node_budget = 10;
  try {
    enumerate_complex_salem(6, 2.0, std::nullopt, tiny);
    FAIL() << "expected a budget refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.budget(), 10u);
    EXPECT_EQ(e.needed(), search_node_count(6, 2.0, std::nullopt));
  }
  EXPECT_THROW(enumerate_complex_salem(12, 2.0), BudgetExceeded);
}

TEST(Enumerate, OddDegreePolynomialsNeverVerify) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const int d = 3 + 2 * (i % 5);
    std::vector<ExactInteger> c(d + 1);
    for (auto& v : c) v = ExactInteger(coeff(rng));
    c[0] = 1;
    c[d] = 1;
    EXPECT_FALSE(is_complex_salem(IntPolynomial(std::move(c))).is_complex_salem());
  }
}

TEST(MinimalSalem, Examples) {
  const MinimalSalem six = minimal_complex_salem(6, 2.0);
  ASSERT_TRUE(six.minimum);
  EXPECT_LE(six.minimum->mahler_measure, is_complex_salem(kDegree6).mahler_measure);
  EXPECT_FALSE(six.caveat.empty());

  EXPECT_FALSE(minimal_complex_salem(4, 1.0 + 1e-6).minimum);
  EXPECT_FALSE(minimal_complex_salem(8, 1.0).minimum);

  const MinimalSalem eight = minimal_complex_salem(8, 2.0);
  ASSERT_TRUE(eight.minimum);
  EXPECT_LE(eight.minimum->mahler_measure, six.minimum->mahler_measure);
  EXPECT_LE(eight.minimum->mahler_measure, is_complex_salem(kDegree8).mahler_measure);
}

TEST(MinimalSalem, AgreesWithPerDegreeSearches) {
  double best = INFINITY;
  for (int d = 4; d <= 8; d += 2) {
    const auto found = enumerate_complex_salem(d, 2.0);
    if (!found.empty()) best = std::min(best, found.front().mahler_measure);
  }
  EXPECT_DOUBLE_EQ(minimal_complex_salem(8, 2.0).minimum->mahler_measure, best);
}

TEST(SalemSystoleBound, Examples) {
  const SalemSystoleBound one = salem_systole_bound(1, 2.0);
  EXPECT_EQ(one.degree_bound, 8);
  ASSERT_TRUE(one.bound && one.witness);
  EXPECT_DOUBLE_EQ(*one.bound, 2 * std::log(static_cast<double>(std::abs(*one.witness->lambda))));
  EXPECT_DOUBLE_EQ(*one.bound, std::log(minimal_complex_salem(8, 2.0).minimum->mahler_measure));
  EXPECT_NE(one.caveat.find("Mahler"), std::string::npos);

  EXPECT_FALSE(salem_systole_bound(1, 1.0).bound);
  EXPECT_FALSE(salem_systole_bound(3, 0.5).bound);
  // D = 12 exceeds the default node budget.
  EXPECT_THROW(salem_systole_bound(2, 2.0), BudgetExceeded);
  EXPECT_THROW(salem_systole_bound(4, 2.0), DomainError);
  EXPECT_THROW(salem_systole_bound(0, 2.0), DomainError);
}
