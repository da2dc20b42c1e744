#pragma once

#include <cstdint>
#include <string>

#include "systole/exact.hpp"

namespace systole {

enum class LieFamily {
  SplitA,    // 1A_r
  TwistedA,  // 2A_r
  BC,        // B_r / C_r
  SplitD,    // 1D_r
  TwistedD,  // 2D_r
};

/// Smallest rank for which the order table lists the family.
int min_rank(LieFamily family) noexcept;

/// A classical semisimple type together with its rank.
///
/// Regular values respect the table's rank ranges. A *synthetic* value carries
/// a rank below the range; it only exists so that low-dimensional lattice
/// families can still report a dimension exponent, and group_order rejects it.
class LieType {
 public:
  static LieType make(LieFamily family, int rank);
  static LieType synthetic(LieFamily family, int rank);

  LieFamily family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  bool is_synthetic() const noexcept { return synthetic_; }

  /// "1A_3", "2D_4", "BC_2".
  std::string label() const;

  friend bool operator==(const LieType&, const LieType&) = default;

 private:
  LieType(LieFamily family, int rank, bool synthetic)
      : family_(family), rank_(rank), synthetic_(synthetic) {}

  LieFamily family_;
  int rank_;
  bool synthetic_;
};

/// |G(F_q)| from the closed-form product for the type.
///
/// For 2A_r the j-th factor is q^{j+1} - (-1)^{j+1}. q only needs to be an
/// integer >= 2; whether it is a prime power is the caller's concern (see
/// is_prime_power).
ExactInteger group_order(const LieType& type, const ExactInteger& q);
ExactInteger group_order(const LieType& type, std::uint64_t q);

/// e with group_order(type, q) <= q^e for every q >= 2.
int dimension_exponent(const LieType& type);

/// group_order(type, q) <= q^dimension_exponent(type) for every prime power
/// q in [2, q_max].
bool order_vs_exponent_check(const LieType& type, std::uint64_t q_max);

}  // namespace systole
