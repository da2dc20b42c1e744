#include "systole/modular_oracle.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "systole/errors.hpp"
#include "systole/length_trace.hpp"

namespace systole {
namespace {

void require_level(long level) {
  if (level < 1) throw DomainError("level must be at least 1");
  if (level > kMaxOracleLevel) {
    throw DomainError("level " + std::to_string(level) + " exceeds the oracle's 64-bit range " +
                      std::to_string(kMaxOracleLevel));
  }
}

bool divides(const ExactInteger& modulus, const ExactInteger& value) {
  return mpz_divisible_p(value.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

// mathematical modulo, result in [0, m)
std::int64_t mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool is_in_gamma(const Matrix2& matrix, long level) {
  if (level < 1) throw DomainError("level must be at least 1");
  const ExactInteger n(level);
  return matrix.det() == 1 && divides(n, matrix.a - 1) && divides(n, matrix.b) && divides(n, matrix.c) &&
         divides(n, matrix.d - 1);
}

// A trace t is realized in Gamma(N) iff some a = 1 + N alpha satisfies
// a (t - a) = 1 mod N^2; the witness is [[a, N], [(a(t-a) - 1)/N, t - a]].
// a = d = 1 mod N already forces t = 2 mod N, so other traces are skipped.
TraceWitness min_hyperbolic_trace(long level) {
  require_level(level);
  const std::int64_t n = level;
  const std::int64_t n2 = n * n;

  for (std::int64_t magnitude = 3;; ++magnitude) {
    for (const std::int64_t t : {magnitude, -magnitude}) {
      if (mod(t - 2, n) != 0) continue;
      for (std::int64_t alpha = 0; alpha < n; ++alpha) {
        const std::int64_t a = 1 + n * alpha;
        if (mod(a * (t - a) - 1, n2) != 0) continue;
        TraceWitness witness;
        witness.level = level;
        witness.trace = ExactInteger(static_cast<long>(t));
        witness.matrix = {ExactInteger(static_cast<long>(a)), ExactInteger(static_cast<long>(n)),
                          ExactInteger(static_cast<long>((a * (t - a) - 1) / n)),
                          ExactInteger(static_cast<long>(t - a))};
        return witness;
      }
    }
  }
}

SystoleResult systole_of_gamma(long level) {
  const TraceWitness witness = min_hyperbolic_trace(level);
  const ExactInteger magnitude = abs(witness.trace);
  SystoleResult result;
  result.level = level;
  result.min_trace = witness.trace;
  result.systole = sl2_length_lower(magnitude.get_d()).value;
  result.witness = witness.matrix;
  return result;
}

GrowthTable growth_table(long level_from, long level_to, long level_cap) {
  if (level_from < 1 || level_from > level_to || level_to > level_cap) {
    throw DomainError("levels must satisfy 1 <= from <= to <= " + std::to_string(level_cap));
  }
  GrowthTable table;
  for (long level = level_from; level <= level_to; ++level) {
    GrowthRow row;
    row.result = systole_of_gamma(level);
    row.margin = row.result.systole - 2.0 * std::log(static_cast<double>(level));
    table.rows.push_back(std::move(row));
  }
  if (table.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double count = static_cast<double>(table.rows.size());
    for (const auto& row : table.rows) {
      const double x = std::log(static_cast<double>(row.result.level));
      const double y = row.result.systole;
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    table.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  }
  return table;
}

}  // namespace systole
