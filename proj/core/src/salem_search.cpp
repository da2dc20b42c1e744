#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "aberth.hpp"
#include "systole/errors.hpp"
#include "systole/exact.hpp"
#include "systole/salem.hpp"

// A self-reciprocal p of degree d = 2m is z^m q(z + 1/z) for a monic integer q
// of degree m, related to p's top coefficients by a unimodular triangular map
//   a_j = sum_{k <= j, j - k even} c_k C(m - k, (j - k)/2).
// For a complex Salem p, q has m - 2 real roots in (-2, 2) (the circle pairs)
// and one conjugate pair lambda + 1/lambda of modulus <= sqrt(M) + 1/sqrt(M).
// That bounds |c_k| by the t^k coefficient of (1 + 2t)^(m-2) (1 + R t)^2,
// bounds the power sums s_k of the roots of q, which fix c_k through Newton's
// identity s_k + c_1 s_{k-1} + ... + c_{k-1} s_1 + k c_k = 0, and forces
// p(1) = q(2) > 0 and p(-1) = (-1)^m q(-2) > 0.

namespace systole {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) { return b > kSaturated - a ? kSaturated : a + b; }

__extension__ typedef __int128 Wide;

Wide floor_div(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Wide ceil_div(Wide num, Wide den) { return -floor_div(-num, den); }

struct SearchBox {
  int degree = 0;
  int half = 0;
  double mahler_max = 0.0;
  // index 1..half
  std::vector<std::int64_t> a_bound;
  std::vector<std::int64_t> c_bound;  // empty when the cutoff is infinite
  // s_lo[k] <= s_k <= s_hi[k]; empty when the cutoff is infinite or too large
  std::vector<Wide> s_lo;
  std::vector<Wide> s_hi;
  std::vector<std::vector<std::int64_t>> transfer;  // transfer[j][k] = C(m-k, (j-k)/2)
};

void validate(int degree, double mahler_max, std::optional<long> height) {
  if (degree < 4 || degree % 2 != 0) throw DomainError("search degree must be even and >= 4");
  if (degree > kMaxSearchDegree) {
    throw DomainError("search degree " + std::to_string(degree) + " exceeds desk-scale cap " +
                      std::to_string(kMaxSearchDegree));
  }
  if (!(mahler_max > 1.0)) throw DomainError("Mahler cutoff must exceed 1");
  if (height && *height < 0) throw DomainError("height must be nonnegative");
  if (std::isinf(mahler_max) && !height) throw DomainError("search needs a height or a finite Mahler cutoff");
}

std::int64_t clamp_bound(double value) {
  if (!(value < 4e18)) return std::numeric_limits<std::int64_t>::max() / 4;
  return static_cast<std::int64_t>(std::floor(value * (1 + 1e-12) + 1e-9));
}

SearchBox make_box(int degree, double mahler_max, std::optional<long> height) {
  SearchBox box;
  box.degree = degree;
  box.half = degree / 2;
  box.mahler_max = mahler_max;
  const int m = box.half;

  box.a_bound.assign(m + 1, 0);
  for (int j = 1; j <= m; ++j) {
    const double binomial_bound = static_cast<double>(binomial(degree, j)) * mahler_max;
    std::int64_t bound = clamp_bound(binomial_bound);
    if (height) bound = std::min<std::int64_t>(bound, *height);
    box.a_bound[j] = bound;
  }

  if (std::isfinite(mahler_max)) {
    const double root_bound = std::sqrt(mahler_max) + 1.0 / std::sqrt(mahler_max);
    std::vector<double> poly{1.0};
    auto multiply = [&poly](double r) {
      std::vector<double> next(poly.size() + 1, 0.0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] += r * poly[i];
      }
      poly = std::move(next);
    };
    for (int i = 0; i < m - 2; ++i) multiply(2.0);
    multiply(root_bound);
    multiply(root_bound);
    box.c_bound.assign(m + 1, 0);
    for (int k = 1; k <= m; ++k) box.c_bound[k] = clamp_bound(poly[k]);

    // m - 2 roots in [-2, 2] add at most 2^k in absolute value (and nothing
    // negative for even k); the pair y, conj(y) adds 2 Re y^k.
    const double slack = 1.0 + 1e-9;
    std::vector<Wide> lo(m + 1, 0), hi(m + 1, 0);
    bool fits = true;
    for (int k = 1; k <= m && fits; ++k) {
      const double real_part = (m - 2) * std::pow(2.0, k);
      const double pair_part = 2.0 * std::pow(root_bound, k);
      const double upper = (real_part + pair_part) * slack;
      const double lower = (k % 2 == 0 ? -pair_part : -(real_part + pair_part)) * slack;
      if (!(upper < 1e15)) {
        fits = false;
        break;
      }
      hi[k] = static_cast<Wide>(std::floor(upper));
      lo[k] = static_cast<Wide>(std::ceil(lower));
    }
    if (fits) {
      box.s_lo = std::move(lo);
      box.s_hi = std::move(hi);
    }
  }

  box.transfer.assign(m + 1, std::vector<std::int64_t>(m + 1, 0));
  for (int j = 0; j <= m; ++j) {
    for (int k = j % 2; k <= j; k += 2) {
      box.transfer[j][k] = static_cast<std::int64_t>(binomial(m - k, (j - k) / 2));
    }
  }
  return box;
}

// Product over levels of the narrowest of the three per-level ranges.
std::uint64_t node_count(const SearchBox& box) {
  std::uint64_t total = 1;
  for (int j = 1; j <= box.half; ++j) {
    std::uint64_t width = static_cast<std::uint64_t>(2 * box.a_bound[j] + 1);
    if (!box.c_bound.empty()) width = std::min(width, static_cast<std::uint64_t>(2 * box.c_bound[j] + 1));
    if (!box.s_lo.empty()) {
      width = std::min(width, static_cast<std::uint64_t>((box.s_hi[j] - box.s_lo[j]) / j + 1));
    }
    total = saturating_mul(total, width);
  }
  return total;
}

// Cheap numerical screen on q: rejects only candidates that clearly cannot be
// complex Salem with measure <= cutoff. Anything unclear goes to the full
// verdict. `q` is ascending.
bool passes_screen(const std::vector<double>& q, double mahler_max, std::vector<std::complex<double>>& roots) {
  // q(0) = 0 means p(i) = 0.
  if (q.front() == 0.0) return false;
  if (!detail::aberth(q, roots, 200, 1e-13)) return true;
  int clearly_off = 0;
  int maybe_off = 0;
  double largest_imag = 0.0;
  double measure = 1.0;
  for (const auto& y : roots) {
    const double excess = std::abs(y.real()) - 2.0;
    const double height = std::abs(y.imag());
    if (height > 1e-6 || excess > 1e-6) {
      ++clearly_off;
      largest_imag = std::max(largest_imag, height);
      // larger root of z^2 - y z + 1
      const auto disc = std::sqrt(y * y - 4.0);
      measure *= std::max(std::abs((y + disc) / 2.0), std::abs((y - disc) / 2.0));
    }
    if (height > 1e-12 || excess > 1e-12) ++maybe_off;
  }
  if (clearly_off > 2 || maybe_off < 2) return false;
  // Both off roots real: lambda would be real.
  if (clearly_off == 2 && largest_imag <= 1e-12) return false;
  return measure <= mahler_max * (1.0 + 1e-6);
}

class Enumerator {
 public:
  explicit Enumerator(const SearchBox& box)
      : box_(box), a_(box.half + 1, 0), c_(box.half + 1, 0), s_(box.half + 1, 0) {
    a_[0] = 1;
    c_[0] = 1;
  }

  // Leaves with a_1 = first.
  std::vector<SalemVerdict> run_shard(std::int64_t first) {
    found_.clear();
    if (assign(1, first)) descend(2);
    return std::move(found_);
  }

  std::pair<std::int64_t, std::int64_t> range(int j) const {
    std::int64_t lo = -box_.a_bound[j];
    std::int64_t hi = box_.a_bound[j];
    if (!box_.c_bound.empty()) {
      const std::int64_t known = known_part(j);
      lo = std::max(lo, known - box_.c_bound[j]);
      hi = std::min(hi, known + box_.c_bound[j]);
      if (!box_.s_lo.empty()) {
        // s_j = -j c_j - sum_{i<j} c_i s_{j-i}
        const Wide rest = known_power_sum(j);
        const Wide c_lo = ceil_div(-rest - box_.s_hi[j], j);
        const Wide c_hi = floor_div(-rest - box_.s_lo[j], j);
        lo = static_cast<std::int64_t>(std::max<Wide>(lo, c_lo + known));
        hi = static_cast<std::int64_t>(std::min<Wide>(hi, c_hi + known));
      }
    }
    return {lo, hi};
  }

 private:
  std::int64_t known_part(int j) const {
    std::int64_t sum = 0;
    for (int k = j % 2; k < j; k += 2) sum += c_[k] * box_.transfer[j][k];
    return sum;
  }

  Wide known_power_sum(int j) const {
    Wide sum = 0;
    for (int i = 1; i < j; ++i) sum += static_cast<Wide>(c_[i]) * s_[j - i];
    return sum;
  }

  void set(int j, std::int64_t value) {
    a_[j] = value;
    c_[j] = value - known_part(j);
    if (!box_.s_lo.empty()) s_[j] = -static_cast<Wide>(j) * c_[j] - known_power_sum(j);
  }

  bool assign(int j, std::int64_t value) {
    const auto [lo, hi] = range(j);
    if (value < lo || value > hi) return false;
    set(j, value);
    return true;
  }

  void descend(int j) {
    if (j > box_.half) {
      visit();
      return;
    }
    const auto [lo, hi] = range(j);
    for (std::int64_t value = lo; value <= hi; ++value) {
      set(j, value);
      descend(j + 1);
    }
  }

  void visit() {
    const int d = box_.degree;
    const int m = box_.half;
    coeffs_.assign(d + 1, 0);
    for (int j = 0; j <= m; ++j) {
      coeffs_[j] = a_[j];
      coeffs_[d - j] = a_[j];
    }
    // p(1) > 0 and p(-1) > 0
    std::int64_t at_one = 0;
    std::int64_t at_minus_one = 0;
    for (int i = 0; i <= d; ++i) {
      at_one += coeffs_[i];
      at_minus_one += (i % 2 == 0) ? coeffs_[i] : -coeffs_[i];
    }
    if (at_one <= 0 || at_minus_one <= 0) return;
    q_.assign(m + 1, 0.0);
    for (int k = 0; k <= m; ++k) q_[m - k] = static_cast<double>(c_[k]);
    if (!passes_screen(q_, box_.mahler_max, roots_)) return;

    std::vector<ExactInteger> exact;
    exact.reserve(coeffs_.size());
    for (auto c : coeffs_) exact.emplace_back(static_cast<long>(c));
    SalemVerdict verdict = is_complex_salem(IntPolynomial(std::move(exact)));
    if (verdict.status == SalemStatus::Indeterminate) {
      throw ToleranceError("indeterminate verdict during search for " + verdict.input.to_string() + ": " +
                           verdict.diagnostic);
    }
    if (verdict.is_complex_salem() && verdict.mahler_measure <= box_.mahler_max * (1.0 + 1e-12)) {
      found_.push_back(std::move(verdict));
    }
  }

  const SearchBox& box_;
  std::vector<std::int64_t> a_;
  std::vector<std::int64_t> c_;
  std::vector<Wide> s_;
  std::vector<std::int64_t> coeffs_;
  std::vector<double> q_;
  std::vector<std::complex<double>> roots_;
  std::vector<SalemVerdict> found_;
};

// Measure rounded to 1e-10 relative, then the polynomial: a strict weak order
// that keeps p(x) and p(-x) ties deterministic.
bool verdict_order(const SalemVerdict& x, const SalemVerdict& y) {
  const auto key = [](const SalemVerdict& v) { return std::llround(v.mahler_measure * 1e10); };
  if (key(x) != key(y)) return key(x) < key(y);
  return x.input < y.input;
}

std::vector<SalemVerdict> run_search(const SearchBox& box, const SearchOptions& options) {
  const auto [lo, hi] = Enumerator(box).range(1);
  std::vector<std::vector<SalemVerdict>> shards(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0);

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(shards.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    Enumerator enumerator(box);
    for (std::size_t i; (i = next.fetch_add(1)) < shards.size();) {
      try {
        shards[i] = enumerator.run_shard(lo + static_cast<std::int64_t>(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = shards.size();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<SalemVerdict> merged;
  for (auto& shard : shards) std::move(shard.begin(), shard.end(), std::back_inserter(merged));
  std::sort(merged.begin(), merged.end(), verdict_order);
  merged.erase(std::unique(merged.begin(), merged.end(),
                           [](const SalemVerdict& x, const SalemVerdict& y) { return x.input == y.input; }),
               merged.end());
  return merged;
}

std::string cutoff_caveat(double mahler_max) {
  return "exhaustive only for Mahler measure <= " + std::to_string(mahler_max) +
         "; complex Salem numbers above the cutoff are not searched";
}

}  // namespace

std::uint64_t search_node_count(int degree, double mahler_max, std::optional<long> height_override) {
  validate(degree, mahler_max, height_override);
  return node_count(make_box(degree, mahler_max, height_override));
}

std::vector<SalemVerdict> enumerate_complex_salem(int degree, double mahler_max, std::optional<long> height_override,
                                                  const SearchOptions& options) {
  validate(degree, mahler_max, height_override);
  const SearchBox box = make_box(degree, mahler_max, height_override);
  const std::uint64_t needed = node_count(box);
  if (needed > options.node_budget) throw BudgetExceeded(needed, options.node_budget);
  return run_search(box, options);
}

MinimalSalem minimal_complex_salem(int degree_max, double mahler_max, const SearchOptions& options) {
  if (degree_max > kMaxSearchDegree) {
    throw DomainError("degree bound " + std::to_string(degree_max) + " exceeds desk-scale cap " +
                      std::to_string(kMaxSearchDegree));
  }
  if (std::isnan(mahler_max) || std::isinf(mahler_max)) throw DomainError("Mahler cutoff must be finite");

  MinimalSalem result;
  result.degree_max = degree_max;
  result.mahler_cutoff = mahler_max;
  result.caveat = cutoff_caveat(mahler_max);
  if (mahler_max <= 1.0 || degree_max < 4) return result;

  std::uint64_t needed = 0;
  for (int d = 4; d <= degree_max; d += 2) {
    needed = saturating_add(needed, node_count(make_box(d, mahler_max, std::nullopt)));
  }
  if (needed > options.node_budget) throw BudgetExceeded(needed, options.node_budget);

  // Each degree only needs to beat the best measure found so far.
  double cutoff = mahler_max;
  for (int d = 4; d <= degree_max; d += 2) {
    auto found = run_search(make_box(d, cutoff, std::nullopt), options);
    if (found.empty()) continue;
    if (!result.minimum || verdict_order(found.front(), *result.minimum)) {
      result.minimum = std::move(found.front());
      cutoff = std::min(cutoff, result.minimum->mahler_measure * (1.0 + 1e-9));
    }
  }
  return result;
}

SalemSystoleBound salem_systole_bound(int n, double mahler_max, const SearchOptions& options) {
  if (n < 1) throw DomainError("SU(n,1) needs n >= 1");
  if (4 * (n + 1) > kMaxSearchDegree) {
    throw DomainError("degree bound 4(n+1) = " + std::to_string(4 * (n + 1)) + " exceeds desk-scale cap " +
                      std::to_string(kMaxSearchDegree));
  }
  SalemSystoleBound result;
  result.n = n;
  // deg lambda <= 2(n+1)[l:Q], and a non-uniform lattice has K = Q, [l:Q] = 2.
  result.degree_bound = 4 * (n + 1);
  result.mahler_cutoff = mahler_max;

  MinimalSalem minimal = minimal_complex_salem(result.degree_bound, mahler_max, options);
  result.caveat = minimal.caveat +
                  "; bounds translation lengths 2 log|lambda| of hyperbolic elements whose expanding eigenvalue has "
                  "Mahler measure <= the cutoff";
  if (minimal.minimum) {
    result.bound = 2.0 * std::log(static_cast<double>(std::abs(*minimal.minimum->lambda)));
    result.witness = std::move(minimal.minimum);
  }
  return result;
}

}  // namespace systole
