#include "systole/polynomial.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "systole/errors.hpp"

namespace systole {

IntPolynomial::IntPolynomial(std::vector<ExactInteger> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const ExactInteger& value) { return IntPolynomial(std::vector{value}); }

IntPolynomial IntPolynomial::x_pow_minus_one(unsigned k) {
  std::vector<ExactInteger> c(k + 1, ExactInteger(0));
  c.front() = -1;
  c.back() += 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool IntPolynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool IntPolynomial::is_one() const { return coeffs_.size() == 1 && coeffs_.front() == 1; }

ExactInteger IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactInteger(0); }

const ExactInteger& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::reciprocal() const {
  std::vector<ExactInteger> reversed(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(reversed));
}

ExactInteger IntPolynomial::evaluate(const ExactInteger& x) const {
  ExactInteger acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<long double> IntPolynomial::evaluate(std::complex<long double> z) const {
  std::complex<long double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + static_cast<long double>(it->get_d());
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].get_str();
  }
  return out;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<ExactInteger> c(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactInteger(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<ExactInteger> c(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactInteger(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactInteger> c(a.coeffs_.size() + b.coeffs_.size() - 1, ExactInteger(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<ExactInteger> rem = a.coefficients();
  const auto& den = b.coefficients();
  const std::size_t db = den.size() - 1;
  std::vector<ExactInteger> quot(rem.size() - db, ExactInteger(0));
  ExactInteger q;
  for (std::size_t i = quot.size(); i-- > 0;) {
    const ExactInteger& top = rem[i + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] -= q * den[j];
    quot[i] = q;
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial derivative(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<ExactInteger> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

ExactInteger content(const IntPolynomial& p) {
  ExactInteger g = 0;
  for (const auto& c : p.coefficients()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  ExactInteger g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<ExactInteger> c = p.coefficients();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

namespace {

// lc(b)^(deg a - deg b + 1) a mod b
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<ExactInteger> rem = a.coefficients();
  const auto& den = b.coefficients();
  const std::size_t db = den.size() - 1;
  const ExactInteger& lead = den.back();
  while (rem.size() > db && !rem.empty()) {
    if (rem.back() == 0) {
      rem.pop_back();
      continue;
    }
    const ExactInteger top = rem.back();
    const std::size_t shift = rem.size() - 1 - db;
    for (auto& x : rem) x *= lead;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= top * den[j];
    rem.pop_back();
  }
  return IntPolynomial(std::move(rem));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return IntPolynomial{1};
    IntPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no squarefree decomposition");
  std::vector<SquarefreeFactor> out;
  const IntPolynomial f = primitive_part(p);
  if (f.degree() < 1) return out;

  // Quotients by primitive divisors stay integral (Gauss's lemma).
  const IntPolynomial fp = derivative(f);
  const IntPolynomial a0 = gcd(f, fp);
  IntPolynomial b = *exact_quotient(f, a0);
  IntPolynomial c = *exact_quotient(fp, a0);
  IntPolynomial d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    const IntPolynomial a = gcd(b, d);
    b = *exact_quotient(b, a);
    c = *exact_quotient(d, a);
    d = c - derivative(b);
    if (a.degree() > 0) out.push_back({a, i});
  }
  return out;
}

unsigned euler_phi(unsigned k) {
  if (k == 0) return 0;
  unsigned result = k;
  for (unsigned p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

IntPolynomial cyclotomic(unsigned k) {
  if (k == 0) throw DomainError("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  // Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d
  IntPolynomial result = IntPolynomial::x_pow_minus_one(k);
  for (unsigned d = 1; d < k; ++d) {
    if (k % d == 0) result = *exact_quotient(result, cyclotomic(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(k, result);
  return result;
}

}  // namespace systole
