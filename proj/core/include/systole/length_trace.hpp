#pragma once

#include <optional>

namespace systole {

/// Lower bound for the translation length of a hyperbolic isometry.
///
/// `informative == false` means the trace was too small for the inequality to
/// say anything; value is then 0.
struct LengthBound {
  double value = 0.0;
  bool informative = false;
  /// Logarithmic form of the same bound where the family has one
  /// (sqrt2 log(t/n) for SL(n,R), 2 log(t/2) for SL(2,R)).
  std::optional<double> weak_form;

  static LengthBound none() { return {}; }
};

/// Real hyperbolic n-space: l >= 2 log((|tr A| - (n-1)) / 2).
LengthBound so_length_lower(double trace_abs, int n);

/// Complex hyperbolic n-space, same shape as the real case.
LengthBound su_length_lower(double trace_abs, int n);

/// SL(n,R) with n the matrix size: l >= sqrt2 arccosh(|tr A| / n).
LengthBound sl_length_lower(double trace_abs, int n);

/// Exact translation length 2 arccosh(|t|/2) of a hyperbolic element of
/// SL(2,R); weak_form holds 2 log(|t|/2).
LengthBound sl2_length_lower(double trace_abs);

/// 2 log|lambda| for the expanding eigenvalue lambda.
double length_from_eigenvalue(double lambda_modulus);

}  // namespace systole
