#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "systole/exact.hpp"
#include "systole/lie_orders.hpp"

namespace systole {

enum class LatticeFamily {
  RealHypOdd,     // SO(1, 2m-1), quaternionic construction
  RealHypEven,    // SO(1, 2m), quadratic-form construction
  ComplexHyp,     // SU(n, 1)
  SpecialLinear,  // SL(n+1, R)
};

enum class ComplexSubtype { First, Second, Mixed };

/// Parameters of an arithmetic lattice family. Everything the bound chain needs
/// is derived from (family, parameter, field degree).
class LatticeSpec {
 public:
  static LatticeSpec real_hyperbolic_odd(int m, int field_degree);
  static LatticeSpec real_hyperbolic_even(int m, int field_degree);
  /// SO(1, n), picking the odd or even construction from the parity of n.
  static LatticeSpec real_hyperbolic(int n, int field_degree);
  static LatticeSpec complex_hyperbolic(int n, ComplexSubtype subtype, int field_degree);
  /// SL(size, R).
  static LatticeSpec special_linear(int size, int field_degree);

  LatticeSpec with_base_volume(double volume) const;

  LatticeFamily family() const noexcept { return family_; }
  /// m for the real families, n for SU(n,1), matrix size for SL.
  int parameter() const noexcept { return parameter_; }
  ComplexSubtype subtype() const noexcept { return subtype_; }
  int field_degree() const noexcept { return field_degree_; }
  const std::optional<double>& base_volume() const noexcept { return base_volume_; }

  /// Size s of the integral matrices the lattice sits in: 4m, 2m+1, 2n+2, n+1.
  int embedding_size() const noexcept;
  /// Dimension n entering the length-trace inequality: 2m-1, 2m, n for the
  /// rank-one families; the matrix size for SL.
  int length_dimension() const noexcept;

  std::string label() const;

 private:
  LatticeSpec(LatticeFamily family, int parameter, ComplexSubtype subtype, int field_degree)
      : family_(family), parameter_(parameter), subtype_(subtype), field_degree_(field_degree) {}

  LatticeFamily family_;
  int parameter_;
  ComplexSubtype subtype_;
  int field_degree_;
  std::optional<double> base_volume_;
};

/// A prime ideal reduced to the two numbers the bound chain uses.
class IdealData {
 public:
  static IdealData make(ExactInteger norm, int field_degree);

  const ExactInteger& norm() const noexcept { return norm_; }
  int field_degree() const noexcept { return field_degree_; }
  bool norm_is_prime() const;

 private:
  IdealData(ExactInteger norm, int field_degree) : norm_(std::move(norm)), field_degree_(field_degree) {}

  ExactInteger norm_;
  int field_degree_;
};

/// coefficient * sqrt(2) when `sqrt2`, otherwise coefficient.
struct Sqrt2Rational {
  ExactRational coefficient;
  bool sqrt2 = false;

  double value() const;
  /// "1/3", "sqrt(2)/3", "2*sqrt(2)/5".
  std::string to_string() const;

  friend bool operator==(const Sqrt2Rational& a, const Sqrt2Rational& b) {
    return a.sqrt2 == b.sqrt2 && a.coefficient == b.coefficient;
  }
};

struct CertificateStep {
  std::string label;
  std::string ref;
  std::variant<ExactInteger, double> value;

  double numeric() const;
};

/// The chain of inequalities leading to a systole bound of the form
/// sys >= C log(X) - c, with X = N(I) or vol(M_I).
struct BoundCertificate {
  std::vector<CertificateStep> steps;
  double final_bound = 0.0;
  bool informative = false;
  Sqrt2Rational C;
  double c = 0.0;
  ExactInteger threshold;
  /// Published constant for the family, which can be stronger
  /// than what this chain proves (SU(n,1) first type).
  std::optional<Sqrt2Rational> stated_constant;

  const CertificateStep* find(const std::string& label) const;
};

struct ExplicitConstant {
  double c = 0.0;
  ExactInteger threshold;
};

/// N(I)/(2s)^{f-1} - s.
double trace_lower_from_ideal(const LatticeSpec& spec, const IdealData& ideal);

BoundCertificate systole_lower_from_ideal(const LatticeSpec& spec, const IdealData& ideal);

/// (c, N0) such that the chain gives sys >= A log N - c for all N >= N0, where
/// A = 2 (sqrt2 for SL). N0 is the least N with N/(2s)^{f-1} >= 2 * subtrahend,
/// i.e. the log argument is at least half of N/(2s)^{f-1} (divided by 2 or n).
ExplicitConstant explicit_c_constant(const LatticeSpec& spec);

/// Type of the group whose finite points bound the index.
LieType lie_type_of(const LatticeSpec& spec);

/// N(I)^e, e = dimension_exponent(lie_type_of(spec)).
ExactInteger index_upper_bound(const LatticeSpec& spec, const IdealData& ideal);

/// Gromov constant C: 4/(n(n+1)), 4/(n(n+2)), 2/(n(n+2)), sqrt2/(n(n+2)).
Sqrt2Rational gromov_constant(const LatticeSpec& spec);

/// Combines the ideal chain with the index bound into sys >= C log vol(M_I) - d.
BoundCertificate systole_volume_bound(const LatticeSpec& spec, const IdealData& ideal);

// Quaternion algebra H^{a,b} over R, element x = p + q i + s k.
struct PureQuaternion {
  double p = 0.0;
  double q = 0.0;
  double s = 0.0;
};

struct QuaternionAlgebra {
  double a = 0.0;
  double b = 0.0;
};

/// N(x) = p^2 - a q^2 + a b s^2.
double quaternion_norm(const PureQuaternion& x, const QuaternionAlgebra& algebra);

/// The admissibility sign epsilon_{a,b}(x) in {0, 1, 2}.
int epsilon_ab(const PureQuaternion& x, const QuaternionAlgebra& algebra);

/// Row 0 (identity embedding) sums to 1, every other row to 0 or 2m.
bool check_admissibility(const std::vector<std::vector<int>>& eps_rows);

}  // namespace systole
