#pragma once

#include <optional>
#include <vector>

#include "systole/exact.hpp"

namespace systole {

struct Matrix2 {
  ExactInteger a, b, c, d;

  ExactInteger trace() const { return a + d; }
  ExactInteger det() const { return a * d - b * c; }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

struct TraceWitness {
  long level = 1;
  ExactInteger trace;
  Matrix2 matrix;
};

struct SystoleResult {
  long level = 1;
  /// Signed trace of the witness; |min_trace| is minimal over hyperbolic
  /// elements of Gamma(N).
  ExactInteger min_trace;
  double systole = 0.0;
  Matrix2 witness;
};

struct GrowthRow {
  SystoleResult result;
  /// systole - 2 log N
  double margin = 0.0;
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  /// Least-squares slope of systole against log N; empty with fewer than two
  /// distinct levels.
  std::optional<double> slope;
};

inline constexpr long kDefaultLevelCap = 200;
inline constexpr long kMaxOracleLevel = 30000;

/// det == 1 and matrix == identity mod N.
bool is_in_gamma(const Matrix2& matrix, long level);

/// Minimal |trace| > 2 over Gamma(N), with an explicit witness.
TraceWitness min_hyperbolic_trace(long level);

SystoleResult systole_of_gamma(long level);

GrowthTable growth_table(long level_from, long level_to, long level_cap = kDefaultLevelCap);

}  // namespace systole
