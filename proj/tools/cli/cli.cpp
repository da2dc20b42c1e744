#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "systole/errors.hpp"

namespace systole::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitTolerance = 2;

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

bool is_integer_token(std::string_view token) {
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) token.remove_prefix(1);
  return !token.empty() && std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

ExactInteger parse_integer(std::string_view text, const std::string& what) {
  const std::string_view token = trim(text);
  if (!is_integer_token(token)) throw UsageError(what + ": '" + std::string(text) + "' is not an integer");
  std::string digits(token.front() == '+' ? token.substr(1) : token);
  return ExactInteger(digits, 10);
}

bool is_prime_power(const ExactInteger& q) {
  if (q < 2) return false;
  for (unsigned long k = 1;; ++k) {
    ExactInteger root;
    const int exact = mpz_root(root.get_mpz_t(), q.get_mpz_t(), k);
    if (root < 2) return false;
    if (exact != 0 && is_prime(root)) return true;
  }
}

const std::map<std::string, LieFamily>& type_names() {
  static const std::map<std::string, LieFamily> names = {
      {"1A", LieFamily::SplitA}, {"2A", LieFamily::TwistedA}, {"BC", LieFamily::BC},
      {"1D", LieFamily::SplitD}, {"2D", LieFamily::TwistedD},
  };
  return names;
}

const std::map<std::string, FamilyFlag>& family_names() {
  static const std::map<std::string, FamilyFlag> names = {
      {"so", FamilyFlag::So}, {"su", FamilyFlag::Su}, {"sl", FamilyFlag::Sl}};
  return names;
}

const std::map<std::string, ComplexSubtype>& subtype_names() {
  static const std::map<std::string, ComplexSubtype> names = {
      {"first", ComplexSubtype::First}, {"second", ComplexSubtype::Second}, {"mixed", ComplexSubtype::Mixed}};
  return names;
}

const std::map<std::string, Format>& format_names() {
  static const std::map<std::string, Format> names = {
      {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  return names;
}

template <class Map>
std::vector<std::string> keys(const Map& map) {
  std::vector<std::string> out;
  for (const auto& entry : map) out.push_back(entry.first);
  return out;
}

// Flags shared by every subcommand.
struct Common {
  std::string format = "plain";
};

void add_format(CLI::App* app, Common& common) {
  app->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember(keys(format_names())))
      ->default_str("plain");
}

LatticeSpec make_spec(FamilyFlag family, int n, ComplexSubtype subtype, int field_degree) {
  switch (family) {
    case FamilyFlag::So: return LatticeSpec::real_hyperbolic(n, field_degree);
    case FamilyFlag::Su: return LatticeSpec::complex_hyperbolic(n, subtype, field_degree);
    case FamilyFlag::Sl:
      if (n < 1) throw DomainError("SL(n+1, R) needs n >= 1");
      return LatticeSpec::special_linear(n + 1, field_degree);
  }
  throw DomainError("unknown family");
}

SearchOptions search_options(const Environment& env) {
  SearchOptions options;
  options.node_budget = env.node_budget;
  options.threads = env.threads;
  return options;
}

RunResult ok(std::string out, std::string err = {}) { return {kExitOk, std::move(out), std::move(err)}; }

RunResult execute(const GroupOrderCommand& cmd, Format format) {
  const LieType type = LieType::make(cmd.family, cmd.rank);
  std::string warning;
  if (!is_prime_power(cmd.q)) warning = "warning: q = " + cmd.q.get_str() + " is not a prime power\n";
  const ExactInteger order = group_order(type, cmd.q);
  const int exponent = dimension_exponent(type);
  const ExactInteger bound = pow(cmd.q, static_cast<unsigned long>(exponent));
  if (format == Format::Json) {
    const nlohmann::json out = {{"type", type.label()}, {"rank", cmd.rank},     {"q", cmd.q.get_str()},
                                {"order", order.get_str()}, {"exponent", exponent}, {"q_pow_exponent", bound.get_str()}};
    return ok(out.dump(2) + "\n", warning);
  }
  if (format == Format::Csv) {
    return ok("type,rank,q,order,exponent,q_pow_exponent\n" + type.label() + "," + std::to_string(cmd.rank) + "," +
                  cmd.q.get_str() + "," + order.get_str() + "," + std::to_string(exponent) + "," + bound.get_str() +
                  "\n",
              warning);
  }
  return ok(order.get_str() + "\n", warning);
}

RunResult execute(const GromovConstantCommand& cmd, Format format) {
  const LatticeSpec spec = make_spec(cmd.family, cmd.n, cmd.subtype, 1);
  const Sqrt2Rational constant = gromov_constant(spec);
  if (format == Format::Json) {
    const nlohmann::json out = {
        {"family", spec.label()}, {"C", constant.to_string()}, {"value", constant.value()}};
    return ok(out.dump(2) + "\n");
  }
  if (format == Format::Csv) {
    return ok("family,C,value\n" + spec.label() + "," + constant.to_string() + "," + format_double(constant.value()) +
              "\n");
  }
  return ok(constant.to_string() + "\n");
}

RunResult execute(const BoundCommand& cmd, Format format) {
  LatticeSpec spec = make_spec(cmd.family, cmd.n, cmd.subtype, cmd.field_degree);
  const IdealData ideal = IdealData::make(cmd.norm, cmd.field_degree);
  std::string warning;
  if (!is_prime_power(cmd.norm)) {
    warning = "warning: N(I) = " + cmd.norm.get_str() + " is not a prime power, so it is not a prime ideal norm\n";
  }
  BoundCertificate cert;
  if (cmd.volume) {
    spec = spec.with_base_volume(*cmd.volume);
    cert = systole_volume_bound(spec, ideal);
  } else {
    cert = systole_lower_from_ideal(spec, ideal);
  }
  return ok(render(cert, format), warning);
}

RunResult execute(const ModularCommand& cmd, Format format) {
  return ok(render(growth_table(cmd.from, cmd.to, cmd.cap), format));
}

RunResult execute(const SalemCheckCommand& cmd, Format format) {
  const SalemVerdict verdict = is_complex_salem(cmd.poly, cmd.tolerance);
  RunResult result = ok(render(verdict, format));
  if (verdict.status == SalemStatus::Indeterminate) {
    result.exit_code = kExitTolerance;
    result.err = "error: verdict indeterminate at tolerance " + format_double(cmd.tolerance) + "\n";
  }
  return result;
}

RunResult execute(const SalemSearchCommand& cmd, Format format, const Environment& env) {
  SearchReport report;
  report.degree = cmd.degree;
  report.height = cmd.height;
  report.mahler_max = cmd.mahler_max.value_or(std::numeric_limits<double>::infinity());
  report.results = enumerate_complex_salem(cmd.degree, report.mahler_max, cmd.height, search_options(env));
  return ok(render(report, format));
}

RunResult execute(const SalemMinCommand& cmd, Format format, const Environment& env) {
  return ok(render(minimal_complex_salem(cmd.degree_max, cmd.mahler_max, search_options(env)), format));
}

RunResult execute(const SalemSystoleCommand& cmd, Format format, const Environment& env) {
  return ok(render(salem_systole_bound(cmd.n, cmd.mahler_max, search_options(env)), format));
}

}  // namespace

Environment Environment::from_process() {
  Environment env;
  const char* raw = std::getenv("SYSTOLE_SEARCH_BUDGET");
  if (raw == nullptr) return env;
  const std::string_view text = trim(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc() && end == text.data() + text.size() && value > 0) {
    env.node_budget = value;
    return env;
  }
  // Accept scientific notation such as 1e8.
  char* stop = nullptr;
  const std::string copy(text);
  const double real = std::strtod(copy.c_str(), &stop);
  if (stop == copy.c_str() + copy.size() && !copy.empty() && std::isfinite(real) && real >= 1.0 &&
      real < 1.8e19 && real == std::floor(real)) {
    env.node_budget = static_cast<std::uint64_t>(real);
    return env;
  }
  throw UsageError("SYSTOLE_SEARCH_BUDGET must be a positive integer, got '" + copy + "'");
}

IntPolynomial parse_polynomial(std::string_view text) {
  if (trim(text).empty()) throw UsageError("empty polynomial");
  std::vector<ExactInteger> coefficients;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                         : comma - start);
    if (trim(token).empty()) throw UsageError("empty coefficient in '" + std::string(text) + "'");
    coefficients.push_back(parse_integer(token, "coefficient"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  IntPolynomial poly(std::move(coefficients));
  if (poly.is_zero()) throw UsageError("zero polynomial");
  return poly;
}

std::optional<Command> parse_command(const std::vector<std::string>& args, std::string& help) {
  CLI::App app{"Explicit systole bounds for congruence covers and complex Salem number search", "systole"};
  app.require_subcommand(1);

  Common common;

  std::string type_flag, q_text;
  int rank = 1;
  auto* group_order_cmd = app.add_subcommand("group-order", "Order of a finite group of Lie type");
  group_order_cmd->add_option("--type", type_flag, "Family")->required()->check(CLI::IsMember(keys(type_names())));
  group_order_cmd->add_option("--rank", rank, "Rank r")->required();
  group_order_cmd->add_option("--q", q_text, "Field size q")->required();
  add_format(group_order_cmd, common);

  std::string family_flag, subtype_flag = "first";
  int n = 0;
  auto* gromov_cmd = app.add_subcommand("gromov-constant", "Gromov constant C of a lattice family");
  gromov_cmd->add_option("--family", family_flag, "so, su or sl")->required()->check(
      CLI::IsMember(keys(family_names())));
  gromov_cmd->add_option("--n", n, "SO(1,n), SU(n,1) or SL(n+1,R)")->required();
  gromov_cmd->add_option("--subtype", subtype_flag, "SU(n,1) subtype")->check(CLI::IsMember(keys(subtype_names())));
  add_format(gromov_cmd, common);

  int field_degree = 1;
  std::string norm_text;
  std::optional<double> volume;
  auto* bound_cmd = app.add_subcommand("bound", "Systole bound certificate for a congruence cover");
  bound_cmd->add_option("--family", family_flag, "so, su or sl")->required()->check(
      CLI::IsMember(keys(family_names())));
  bound_cmd->add_option("--n", n, "SO(1,n), SU(n,1) or SL(n+1,R)")->required();
  bound_cmd->add_option("--f", field_degree, "Degree of the totally real field")->required();
  bound_cmd->add_option("--norm", norm_text, "Ideal norm N(I)")->required();
  bound_cmd->add_option("--vol", volume, "Volume of the base orbifold");
  bound_cmd->add_option("--subtype", subtype_flag, "SU(n,1) subtype")->check(CLI::IsMember(keys(subtype_names())));
  add_format(bound_cmd, common);

  ModularCommand modular;
  auto* modular_cmd = app.add_subcommand("modular", "Systoles of principal congruence subgroups of SL(2,Z)");
  modular_cmd->add_option("--from", modular.from, "First level")->required();
  modular_cmd->add_option("--to", modular.to, "Last level")->required();
  modular_cmd->add_option("--cap", modular.cap, "Largest level accepted")->default_val(kDefaultLevelCap);
  add_format(modular_cmd, common);

  auto* salem_cmd = app.add_subcommand("salem", "Complex Salem numbers");
  salem_cmd->require_subcommand(1);

  std::string poly_text;
  double tolerance = kCircleTolerance;
  auto* check_cmd = salem_cmd->add_subcommand("check", "Decide whether a polynomial is complex Salem");
  check_cmd->add_option("poly", poly_text, "Ascending coefficients, e.g. 1,1,1,-1,1,1,1")->required();
  check_cmd->add_option("--tol", tolerance, "Unit-circle tolerance")->default_val(kCircleTolerance);
  add_format(check_cmd, common);

  int degree = 0;
  std::optional<long> height;
  std::optional<double> mahler_max;
  auto* search_cmd = salem_cmd->add_subcommand("search", "Enumerate complex Salem polynomials of one degree");
  search_cmd->add_option("--degree", degree, "Even degree")->required();
  search_cmd->add_option("--height", height, "Coefficient height bound");
  search_cmd->add_option("--mahler-max", mahler_max, "Mahler measure cutoff");
  add_format(search_cmd, common);

  int degree_max = 0;
  double mahler_required = 0.0;
  auto* min_cmd = salem_cmd->add_subcommand("min", "Smallest complex Salem number below a cutoff");
  min_cmd->add_option("--degree-max", degree_max, "Largest degree")->required();
  min_cmd->add_option("--mahler-max", mahler_required, "Mahler measure cutoff")->required();
  add_format(min_cmd, common);

  int salem_n = 1;
  auto* systole_cmd = salem_cmd->add_subcommand("systole", "Uniform systole bound for non-uniform SU(n,1) lattices");
  systole_cmd->add_option("--n", salem_n, "n in SU(n,1)")->required();
  systole_cmd->add_option("--mahler-max", mahler_required, "Mahler measure cutoff")->required();
  add_format(systole_cmd, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    if (code == 0) {
      help = out.str();
      return std::nullopt;
    }
    std::string message = err.str();
    while (!message.empty() && message.back() == '\n') message.pop_back();
    throw UsageError(message);
  }

  Command command;
  command.format = format_names().at(common.format);
  const auto subtype = subtype_names().at(subtype_flag);
  if (group_order_cmd->parsed()) {
    command.action = GroupOrderCommand{type_names().at(type_flag), rank, parse_integer(q_text, "--q")};
  } else if (gromov_cmd->parsed()) {
    command.action = GromovConstantCommand{family_names().at(family_flag), n, subtype};
  } else if (bound_cmd->parsed()) {
    command.action =
        BoundCommand{family_names().at(family_flag), n, field_degree, parse_integer(norm_text, "--norm"), volume,
                     subtype};
  } else if (modular_cmd->parsed()) {
    command.action = modular;
  } else if (check_cmd->parsed()) {
    command.action = SalemCheckCommand{parse_polynomial(poly_text), tolerance};
  } else if (search_cmd->parsed()) {
    command.action = SalemSearchCommand{degree, height, mahler_max};
  } else if (min_cmd->parsed()) {
    command.action = SalemMinCommand{degree_max, mahler_required};
  } else if (systole_cmd->parsed()) {
    command.action = SalemSystoleCommand{salem_n, mahler_required};
  } else {
    throw UsageError("no command given");
  }
  return command;
}

RunResult dispatch(const Command& command, const Environment& env) {
  try {
    return std::visit(
        [&](const auto& action) -> RunResult {
          using T = std::decay_t<decltype(action)>;
          if constexpr (std::is_same_v<T, SalemSearchCommand> || std::is_same_v<T, SalemMinCommand> ||
                        std::is_same_v<T, SalemSystoleCommand>) {
            return execute(action, command.format, env);
          } else {
            return execute(action, command.format);
          }
        },
        command.action);
  } catch (const ToleranceError& e) {
    return {kExitTolerance, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const BudgetExceeded& e) {
    return {kExitInvalid, {}, std::string("error: ") + e.what() + " (raise SYSTOLE_SEARCH_BUDGET or tighten the cutoff)\n"};
  } catch (const std::exception& e) {
    return {kExitInvalid, {}, std::string("error: ") + e.what() + "\n"};
  }
}

RunResult run(const std::vector<std::string>& args, const Environment& env) {
  std::optional<Command> command;
  try {
    std::string help;
    command = parse_command(args, help);
    if (!command) return ok(help);
  } catch (const std::exception& e) {
    return {kExitInvalid, {}, std::string("error: ") + e.what() + "\n"};
  }
  return dispatch(*command, env);
}

}  // namespace systole::cli
