#include "systole/congruence_bounds.hpp"

#include <cmath>
#include <sstream>

#include "systole/errors.hpp"
#include "systole/length_trace.hpp"

namespace systole {
namespace {

void require_field_degree(int f) {
  if (f < 1) throw DomainError("field degree must be at least 1");
}

void require_matching_degree(const LatticeSpec& spec, const IdealData& ideal) {
  if (spec.field_degree() != ideal.field_degree()) {
    throw DomainError("ideal lives in a field of degree " + std::to_string(ideal.field_degree()) +
                      " but the lattice is defined over degree " + std::to_string(spec.field_degree()));
  }
}

ExactRational reduced(long numerator, long denominator) {
  ExactRational value{ExactInteger(numerator), ExactInteger(denominator)};
  value.canonicalize();
  return value;
}

bool is_special_linear(const LatticeSpec& spec) { return spec.family() == LatticeFamily::SpecialLinear; }

// (2s)^{f-1}
ExactInteger galois_factor(const LatticeSpec& spec) {
  return pow(ExactInteger(2 * spec.embedding_size()), static_cast<unsigned long>(spec.field_degree() - 1));
}

// Coefficient of log N(I) in the ideal-norm form of the bound.
Sqrt2Rational log_norm_coefficient(const LatticeSpec& spec) {
  if (is_special_linear(spec)) return {ExactRational(1), true};
  return {ExactRational(2), false};
}

std::string trace_ref(const LatticeSpec& spec) {
  std::ostringstream out;
  out << "|tr A| >= N(I)/(2s)^(f-1) - s, s = " << spec.embedding_size() << ", f = " << spec.field_degree();
  return out.str();
}

std::string length_ref(const LatticeSpec& spec) {
  std::ostringstream out;
  if (is_special_linear(spec)) {
    out << "l >= sqrt(2) log(|tr A|/n), n = " << spec.length_dimension();
  } else {
    out << "l >= 2 log((|tr A| - (n-1))/2), n = " << spec.length_dimension();
  }
  return out.str();
}

}  // namespace

LatticeSpec LatticeSpec::real_hyperbolic_odd(int m, int field_degree) {
  if (m < 2) throw DomainError("SO(1, 2m-1) needs m >= 2");
  require_field_degree(field_degree);
  return {LatticeFamily::RealHypOdd, m, ComplexSubtype::First, field_degree};
}

LatticeSpec LatticeSpec::real_hyperbolic_even(int m, int field_degree) {
  if (m < 2) throw DomainError("SO(1, 2m) needs m >= 2");
  require_field_degree(field_degree);
  return {LatticeFamily::RealHypEven, m, ComplexSubtype::First, field_degree};
}

LatticeSpec LatticeSpec::real_hyperbolic(int n, int field_degree) {
  if (n < 3) throw DomainError("SO(1, n) needs n >= 3");
  return n % 2 == 1 ? real_hyperbolic_odd((n + 1) / 2, field_degree) : real_hyperbolic_even(n / 2, field_degree);
}

LatticeSpec LatticeSpec::complex_hyperbolic(int n, ComplexSubtype subtype, int field_degree) {
  if (n < 2) throw DomainError("SU(n, 1) needs n >= 2");
  require_field_degree(field_degree);
  return {LatticeFamily::ComplexHyp, n, subtype, field_degree};
}

LatticeSpec LatticeSpec::special_linear(int size, int field_degree) {
  if (size < 2) throw DomainError("SL(n, R) needs n >= 2");
  require_field_degree(field_degree);
  return {LatticeFamily::SpecialLinear, size, ComplexSubtype::First, field_degree};
}

LatticeSpec LatticeSpec::with_base_volume(double volume) const {
  if (!(volume > 0.0) || !std::isfinite(volume)) throw DomainError("base volume must be positive");
  LatticeSpec copy = *this;
  copy.base_volume_ = volume;
  return copy;
}

int LatticeSpec::embedding_size() const noexcept {
  switch (family_) {
    case LatticeFamily::RealHypOdd: return 4 * parameter_;
    case LatticeFamily::RealHypEven: return 2 * parameter_ + 1;
    case LatticeFamily::ComplexHyp: return 2 * parameter_ + 2;
    case LatticeFamily::SpecialLinear: return parameter_;
  }
  return 0;
}

int LatticeSpec::length_dimension() const noexcept {
  switch (family_) {
    case LatticeFamily::RealHypOdd: return 2 * parameter_ - 1;
    case LatticeFamily::RealHypEven: return 2 * parameter_;
    case LatticeFamily::ComplexHyp:
    case LatticeFamily::SpecialLinear: return parameter_;
  }
  return 0;
}

std::string LatticeSpec::label() const {
  std::ostringstream out;
  switch (family_) {
    case LatticeFamily::RealHypOdd:
    case LatticeFamily::RealHypEven: out << "SO(1," << length_dimension() << ")"; break;
    case LatticeFamily::ComplexHyp:
      out << "SU(" << parameter_ << ",1) "
          << (subtype_ == ComplexSubtype::First ? "first" : subtype_ == ComplexSubtype::Second ? "second" : "mixed");
      break;
    case LatticeFamily::SpecialLinear: out << "SL(" << parameter_ << ",R)"; break;
  }
  return out.str();
}

IdealData IdealData::make(ExactInteger norm, int field_degree) {
  if (norm < 2) throw DomainError("ideal norm must be at least 2");
  require_field_degree(field_degree);
  return IdealData(std::move(norm), field_degree);
}

bool IdealData::norm_is_prime() const { return is_prime(norm_); }

double Sqrt2Rational::value() const {
  const double base = coefficient.get_d();
  return sqrt2 ? base * std::sqrt(2.0) : base;
}

std::string Sqrt2Rational::to_string() const {
  ExactRational c = coefficient;
  c.canonicalize();
  const ExactInteger num = c.get_num();
  const ExactInteger den = c.get_den();
  std::string out;
  if (!sqrt2) {
    out = num.get_str();
  } else if (num == 1) {
    out = "sqrt(2)";
  } else if (num == -1) {
    out = "-sqrt(2)";
  } else {
    out = num.get_str() + "*sqrt(2)";
  }
  if (den != 1) out += "/" + den.get_str();
  return out;
}

double CertificateStep::numeric() const {
  if (const auto* exact = std::get_if<ExactInteger>(&value)) return exact->get_d();
  return std::get<double>(value);
}

const CertificateStep* BoundCertificate::find(const std::string& label) const {
  for (const auto& step : steps) {
    if (step.label == label) return &step;
  }
  return nullptr;
}

double trace_lower_from_ideal(const LatticeSpec& spec, const IdealData& ideal) {
  require_matching_degree(spec, ideal);
  const ExactRational ratio(ideal.norm(), galois_factor(spec));
  return ratio.get_d() - spec.embedding_size();
}

ExplicitConstant explicit_c_constant(const LatticeSpec& spec) {
  const ExactInteger factor = galois_factor(spec);
  if (is_special_linear(spec)) {
    // sqrt2 log((N/K - k)/k) >= sqrt2 log(N/(2kK)) once N >= 2kK.
    const ExactInteger bound = 2 * spec.length_dimension() * factor;
    return {std::sqrt(2.0) * log(bound), bound};
  }
  // 2 log((N/K - S)/2) >= 2 log(N/(4K)) once N >= 2SK, S = s + n - 1.
  const int subtrahend = spec.embedding_size() + spec.length_dimension() - 1;
  return {2.0 * log(ExactInteger(4 * factor)), ExactInteger(2 * subtrahend * factor)};
}

BoundCertificate systole_lower_from_ideal(const LatticeSpec& spec, const IdealData& ideal) {
  require_matching_degree(spec, ideal);

  const double trace = trace_lower_from_ideal(spec, ideal);
  const double trace_abs = std::max(trace, 0.0);
  const int n = spec.length_dimension();

  double systole = 0.0;
  bool informative = false;
  switch (spec.family()) {
    case LatticeFamily::RealHypOdd:
    case LatticeFamily::RealHypEven: {
      const LengthBound b = so_length_lower(trace_abs, n);
      systole = b.value;
      informative = b.informative;
      break;
    }
    case LatticeFamily::ComplexHyp: {
      const LengthBound b = su_length_lower(trace_abs, n);
      systole = b.value;
      informative = b.informative;
      break;
    }
    case LatticeFamily::SpecialLinear: {
      // The chain goes through the logarithmic form.
      const LengthBound b = sl_length_lower(trace_abs, n);
      systole = b.weak_form.value_or(0.0);
      informative = b.informative && systole > 0.0;
      break;
    }
  }

  const ExplicitConstant constant = explicit_c_constant(spec);
  BoundCertificate cert;
  cert.steps.push_back({"ideal_norm", "N(I)", ideal.norm()});
  cert.steps.push_back({"trace_lower", trace_ref(spec), trace});
  cert.steps.push_back({"systole_lower", length_ref(spec), systole});
  cert.final_bound = systole;
  cert.informative = informative;
  cert.C = log_norm_coefficient(spec);
  cert.c = constant.c;
  cert.threshold = constant.threshold;
  return cert;
}

LieType lie_type_of(const LatticeSpec& spec) {
  const int p = spec.parameter();
  switch (spec.family()) {
    case LatticeFamily::RealHypOdd: return LieType::synthetic(LieFamily::TwistedD, p);
    case LatticeFamily::RealHypEven: return LieType::make(LieFamily::BC, p);
    case LatticeFamily::ComplexHyp: return LieType::make(LieFamily::TwistedA, p);
    case LatticeFamily::SpecialLinear: return LieType::make(LieFamily::SplitA, p - 1);
  }
  throw DomainError("unknown lattice family");
}

ExactInteger index_upper_bound(const LatticeSpec& spec, const IdealData& ideal) {
  return pow(ideal.norm(), static_cast<unsigned long>(dimension_exponent(lie_type_of(spec))));
}

Sqrt2Rational gromov_constant(const LatticeSpec& spec) {
  const long n = spec.family() == LatticeFamily::SpecialLinear ? spec.parameter() - 1 : spec.length_dimension();
  switch (spec.family()) {
    case LatticeFamily::RealHypOdd:
    case LatticeFamily::RealHypEven: return {reduced(4, n * (n + 1)), false};
    case LatticeFamily::ComplexHyp: {
      const long numerator = spec.subtype() == ComplexSubtype::First ? 4 : 2;
      return {reduced(numerator, n * (n + 2)), false};
    }
    case LatticeFamily::SpecialLinear: return {reduced(1, n * (n + 2)), true};
  }
  throw DomainError("unknown lattice family");
}

BoundCertificate systole_volume_bound(const LatticeSpec& spec, const IdealData& ideal) {
  if (!spec.base_volume()) throw DomainError("volume bound needs the base volume vol(M)");
  BoundCertificate cert = systole_lower_from_ideal(spec, ideal);

  const int e = dimension_exponent(lie_type_of(spec));
  const double log_base_volume = std::log(*spec.base_volume());
  const double log_volume = log_base_volume + e * log(ideal.norm());

  // vol(M_I) <= vol(M) N^e turns A log N - c into (A/e) log vol(M_I) - d.
  Sqrt2Rational C = cert.C;
  C.coefficient /= e;
  C.coefficient.canonicalize();
  const double d = cert.c + C.value() * log_base_volume;
  const double volume_form = C.value() * log_volume - d;

  cert.steps.push_back({"index_bound", "[Gamma:Gamma(I)] <= N(I)^e, e = " + std::to_string(e),
                        index_upper_bound(spec, ideal)});
  cert.steps.push_back({"log_volume_upper", "log vol(M_I) <= log vol(M) + e log N(I)", log_volume});
  cert.steps.push_back({"volume_form_bound", "sys >= C log vol(M_I) - d", volume_form});
  cert.final_bound = volume_form;
  cert.informative = cert.informative && ideal.norm() >= cert.threshold;
  cert.C = C;
  cert.c = d;
  cert.stated_constant = gromov_constant(spec);
  return cert;
}

double quaternion_norm(const PureQuaternion& x, const QuaternionAlgebra& algebra) {
  return x.p * x.p - algebra.a * x.q * x.q + algebra.a * algebra.b * x.s * x.s;
}

int epsilon_ab(const PureQuaternion& x, const QuaternionAlgebra& algebra) {
  const double a = algebra.a;
  const double b = algebra.b;
  if (a == 0.0 || b == 0.0) throw DomainError("quaternion algebra parameters must be nonzero");
  const double norm = quaternion_norm(x, algebra);
  if (std::abs(norm) <= 1e-12) throw DomainError("quaternion is not invertible");

  const double bn = b * norm;
  if (bn > 0.0) return 1;
  if (b < 0.0 && x.p > 0.0) return 2;
  if (b > 0.0 && (a + 1.0) * x.q + (a - 1.0) * x.s * std::sqrt(b) > 0.0) return 2;
  return 0;
}

bool check_admissibility(const std::vector<std::vector<int>>& eps_rows) {
  if (eps_rows.empty() || eps_rows.front().empty()) throw DomainError("epsilon table must have m >= 1 columns");
  const std::size_t m = eps_rows.front().size();
  bool admissible = true;
  for (std::size_t row = 0; row < eps_rows.size(); ++row) {
    if (eps_rows[row].size() != m) throw DomainError("ragged epsilon table");
    int sum = 0;
    for (int value : eps_rows[row]) {
      if (value < 0 || value > 2) throw DomainError("epsilon values lie in {0, 1, 2}");
      sum += value;
    }
    if (row == 0) {
      admissible = admissible && sum == 1;
    } else {
      admissible = admissible && (sum == 0 || sum == static_cast<int>(2 * m));
    }
  }
  return admissible;
}

}  // namespace systole
