#include "systole/lie_orders.hpp"

#include "systole/errors.hpp"

namespace systole {

int min_rank(LieFamily family) noexcept {
  switch (family) {
    case LieFamily::SplitA: return 1;
    case LieFamily::TwistedA: return 2;
    case LieFamily::BC: return 2;
    case LieFamily::SplitD:
    case LieFamily::TwistedD: return 4;
  }
  return 1;
}

LieType LieType::make(LieFamily family, int rank) {
  if (rank < min_rank(family)) {
    throw DomainError("rank " + std::to_string(rank) + " below the range of type " +
                      LieType(family, rank, false).label());
  }
  return LieType(family, rank, false);
}

LieType LieType::synthetic(LieFamily family, int rank) {
  if (rank < 1) throw DomainError("rank must be positive");
  return LieType(family, rank, rank < min_rank(family));
}

std::string LieType::label() const {
  const char* prefix = "";
  switch (family_) {
    case LieFamily::SplitA: prefix = "1A_"; break;
    case LieFamily::TwistedA: prefix = "2A_"; break;
    case LieFamily::BC: prefix = "BC_"; break;
    case LieFamily::SplitD: prefix = "1D_"; break;
    case LieFamily::TwistedD: prefix = "2D_"; break;
  }
  return prefix + std::to_string(rank_);
}

ExactInteger group_order(const LieType& type, const ExactInteger& q) {
  if (type.is_synthetic()) throw DomainError("no order formula for " + type.label());
  if (q < 2) throw DomainError("q must be at least 2");

  const auto r = static_cast<unsigned long>(type.rank());
  ExactInteger order;
  switch (type.family()) {
    case LieFamily::SplitA:
      order = pow(q, r * (r + 1) / 2);
      for (unsigned long j = 1; j <= r; ++j) order *= pow(q, j + 1) - 1;
      break;
    case LieFamily::TwistedA:
      order = pow(q, r * (r + 1) / 2);
      for (unsigned long j = 1; j <= r; ++j) {
        // (-1)^{j+1}
        const long sign = (j % 2 == 1) ? -1 : 1;
        order *= pow(q, j + 1) + sign;
      }
      break;
    case LieFamily::BC:
      order = pow(q, r * r);
      for (unsigned long j = 1; j <= r; ++j) order *= pow(q, 2 * j) - 1;
      break;
    case LieFamily::SplitD:
    case LieFamily::TwistedD: {
      const int sign = type.family() == LieFamily::SplitD ? -1 : 1;
      order = pow(q, r * (r - 1)) * (pow(q, r) + sign);
      for (unsigned long j = 1; j + 1 <= r; ++j) order *= pow(q, 2 * j) - 1;
      break;
    }
  }
  return order;
}

ExactInteger group_order(const LieType& type, std::uint64_t q) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return group_order(type, ExactInteger(static_cast<unsigned long>(q)));
}

int dimension_exponent(const LieType& type) {
  const int r = type.rank();
  switch (type.family()) {
    case LieFamily::SplitA:
    case LieFamily::TwistedA: return r * (r + 2);
    case LieFamily::BC: return r * (2 * r + 1);
    case LieFamily::SplitD:
    case LieFamily::TwistedD: return r * (2 * r - 1);
  }
  return 0;
}

bool order_vs_exponent_check(const LieType& type, std::uint64_t q_max) {
  if (q_max < 2) throw DomainError("q_max must be at least 2");
  const auto e = static_cast<unsigned long>(dimension_exponent(type));
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    if (!is_prime_power(q)) continue;
    const ExactInteger order = group_order(type, q);
    if (order > pow(ExactInteger(static_cast<unsigned long>(q)), e)) return false;
  }
  return true;
}

}  // namespace systole
