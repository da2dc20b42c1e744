#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace systole {

using ExactInteger = mpz_class;
using ExactRational = mpq_class;

ExactInteger pow(const ExactInteger& base, unsigned long exponent);

bool is_prime(const ExactInteger& n);

/// True for p^k with p prime and k >= 1.
bool is_prime_power(std::uint64_t q);

std::uint64_t binomial(unsigned n, unsigned k);

/// Natural log of a positive exact integer without overflowing to double.
double log(const ExactInteger& n);

}  // namespace systole
