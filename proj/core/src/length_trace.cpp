#include "systole/length_trace.hpp"

#include <cmath>
#include <string>

#include "systole/errors.hpp"

namespace systole {
namespace {

void require_dimension(int n) {
  if (n < 2) throw DomainError("dimension must be at least 2, got " + std::to_string(n));
}

void require_trace(double trace_abs) {
  if (!(trace_abs >= 0.0)) throw DomainError("trace modulus must be nonnegative");
}

LengthBound rank_one_bound(double trace_abs, int n) {
  require_dimension(n);
  require_trace(trace_abs);
  const double argument = (trace_abs - (n - 1)) / 2.0;
  if (!(argument > 1.0)) return LengthBound::none();
  return {2.0 * std::log(argument), true, std::nullopt};
}

}  // namespace

LengthBound so_length_lower(double trace_abs, int n) { return rank_one_bound(trace_abs, n); }

LengthBound su_length_lower(double trace_abs, int n) { return rank_one_bound(trace_abs, n); }

LengthBound sl_length_lower(double trace_abs, int n) {
  require_dimension(n);
  require_trace(trace_abs);
  const double ratio = trace_abs / n;
  if (!(ratio > 1.0)) return LengthBound::none();
  return {std::sqrt(2.0) * std::acosh(ratio), true, std::sqrt(2.0) * std::log(ratio)};
}

LengthBound sl2_length_lower(double trace_abs) {
  require_trace(trace_abs);
  const double half = trace_abs / 2.0;
  if (!(half > 1.0)) return LengthBound::none();
  return {2.0 * std::acosh(half), true, 2.0 * std::log(half)};
}

double length_from_eigenvalue(double lambda_modulus) {
  if (!(lambda_modulus >= 1.0)) throw DomainError("expanding eigenvalue must have modulus >= 1");
  return 2.0 * std::log(lambda_modulus);
}

}  // namespace systole
