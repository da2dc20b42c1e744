#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "systole/congruence_bounds.hpp"
#include "systole/lie_orders.hpp"
#include "systole/modular_oracle.hpp"
#include "systole/polynomial.hpp"
#include "systole/salem.hpp"

namespace systole::cli {

/// Malformed command line or input text; exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Plain, Json, Csv };

struct GroupOrderCommand {
  LieFamily family = LieFamily::SplitA;
  int rank = 1;
  ExactInteger q;
};

enum class FamilyFlag { So, Su, Sl };

struct GromovConstantCommand {
  FamilyFlag family = FamilyFlag::So;
  int n = 0;
  ComplexSubtype subtype = ComplexSubtype::First;
};

struct BoundCommand {
  FamilyFlag family = FamilyFlag::So;
  int n = 0;
  int field_degree = 1;
  ExactInteger norm;
  std::optional<double> volume;
  ComplexSubtype subtype = ComplexSubtype::First;
};

struct ModularCommand {
  long from = 1;
  long to = 1;
  long cap = kDefaultLevelCap;
};

struct SalemCheckCommand {
  IntPolynomial poly;
  double tolerance = kCircleTolerance;
};

struct SalemSearchCommand {
  int degree = 0;
  std::optional<long> height;
  std::optional<double> mahler_max;
};

struct SalemMinCommand {
  int degree_max = 0;
  double mahler_max = 0.0;
};

struct SalemSystoleCommand {
  int n = 1;
  double mahler_max = 0.0;
};

using Action = std::variant<GroupOrderCommand, GromovConstantCommand, BoundCommand, ModularCommand,
                            SalemCheckCommand, SalemSearchCommand, SalemMinCommand, SalemSystoleCommand>;

struct Command {
  Action action;
  Format format = Format::Plain;
};

struct Environment {
  std::uint64_t node_budget = kDefaultSearchBudget;
  unsigned threads = 0;

  /// Reads SYSTOLE_SEARCH_BUDGET.
  static Environment from_process();
};

struct SearchReport {
  int degree = 0;
  std::optional<long> height;
  double mahler_max = 0.0;
  std::vector<SalemVerdict> results;
};

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Comma-separated ascending integer coefficients, e.g. "1,1,1,-1,1,1,1".
IntPolynomial parse_polynomial(std::string_view text);

/// Parses arguments (without the program name). Help requests come back as
/// std::nullopt with the help text in `help`.
std::optional<Command> parse_command(const std::vector<std::string>& args, std::string& help);

RunResult dispatch(const Command& command, const Environment& env);

/// parse_command + dispatch with the exit-code contract: 0 success, 1 invalid
/// input, 2 numerical tolerance failure.
RunResult run(const std::vector<std::string>& args, const Environment& env);

// Rendering. JSON keys are sorted; numbers print in shortest round-trip form.
std::string format_double(double value);
std::string render(const BoundCertificate& certificate, Format format);
std::string render(const GrowthTable& table, Format format);
std::string render(const SalemVerdict& verdict, Format format);
std::string render(const SearchReport& report, Format format);
std::string render(const MinimalSalem& result, Format format);
std::string render(const SalemSystoleBound& result, Format format);

}  // namespace systole::cli
