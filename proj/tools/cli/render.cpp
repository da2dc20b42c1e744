#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace systole::cli {
namespace {

using nlohmann::json;

json number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

std::string join_ints(const std::vector<unsigned>& values, char separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string status_name(SalemStatus status) {
  switch (status) {
    case SalemStatus::ComplexSalem: return "complex-salem";
    case SalemStatus::NotComplexSalem: return "not-complex-salem";
    case SalemStatus::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      const bool quote = row[i].find_first_of(",\"") != std::string::npos;
      if (quote) {
        out += '"';
        for (char ch : row[i]) {
          if (ch == '"') out += '"';
          out += ch;
        }
        out += '"';
      } else {
        out += row[i];
      }
    }
    out += '\n';
  }
  return out;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

json step_value(const CertificateStep& step) {
  if (const auto* exact = std::get_if<ExactInteger>(&step.value)) return exact->get_str();
  return number(std::get<double>(step.value));
}

std::string step_text(const CertificateStep& step) {
  if (const auto* exact = std::get_if<ExactInteger>(&step.value)) return exact->get_str();
  return format_double(std::get<double>(step.value));
}

json verdict_json(const SalemVerdict& v) {
  json lambda = nullptr;
  if (v.lambda) {
    lambda = {{"re", number(static_cast<double>(v.lambda->real()))},
              {"im", number(static_cast<double>(v.lambda->imag()))},
              {"abs", number(static_cast<double>(std::abs(*v.lambda)))}};
  }
  return {{"poly", v.input.to_string()},
          {"is_complex_salem", v.is_complex_salem()},
          {"lambda", lambda},
          {"mahler", number(v.mahler_measure)},
          {"cyclotomic_removed", v.cyclotomic_removed},
          {"irreducibility", v.irreducibility_method},
          {"status", status_name(v.status)},
          {"diagnostic", v.diagnostic},
          {"no_circle_roots", v.no_circle_roots}};
}

std::vector<std::string> verdict_header() {
  return {"poly", "is_complex_salem", "mahler", "lambda_re", "lambda_im", "lambda_abs", "cyclotomic_removed",
          "status"};
}

std::vector<std::string> verdict_row(const SalemVerdict& v) {
  std::string re, im, abs;
  if (v.lambda) {
    re = format_double(static_cast<double>(v.lambda->real()));
    im = format_double(static_cast<double>(v.lambda->imag()));
    abs = format_double(static_cast<double>(std::abs(*v.lambda)));
  }
  return {v.input.to_string(), v.is_complex_salem() ? "true" : "false", format_double(v.mahler_measure), re, im, abs,
          join_ints(v.cyclotomic_removed, ' '), status_name(v.status)};
}

std::string optional_double(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string("none");
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string render(const BoundCertificate& cert, Format format) {
  if (format == Format::Json) {
    json steps = json::array();
    for (const auto& step : cert.steps) {
      steps.push_back({{"label", step.label}, {"ref", step.ref}, {"value", step_value(step)}});
    }
    json out = {{"steps", steps},
                {"final_bound", number(cert.final_bound)},
                {"C", cert.C.to_string()},
                {"c", number(cert.c)},
                {"threshold", json::parse(cert.threshold.get_str())},
                {"informative", cert.informative}};
    if (cert.stated_constant) out["gromov_C"] = cert.stated_constant->to_string();
    return dump(out);
  }
  std::vector<std::vector<std::string>> rows;
  if (format == Format::Csv) {
    rows.push_back({"label", "value", "ref"});
    for (const auto& step : cert.steps) rows.push_back({step.label, step_text(step), step.ref});
    return csv(rows);
  }
  rows.push_back({"step", "value", "inequality"});
  for (const auto& step : cert.steps) rows.push_back({step.label, step_text(step), step.ref});
  std::vector<std::vector<std::string>> summary = {
      {"final_bound", format_double(cert.final_bound)},
      {"informative", cert.informative ? "true" : "false"},
      {"C", cert.C.to_string()},
      {"c", format_double(cert.c)},
      {"threshold", cert.threshold.get_str()},
  };
  if (cert.stated_constant) summary.push_back({"gromov_C", cert.stated_constant->to_string()});
  return table(rows) + "\n" + table(summary);
}

std::string render(const GrowthTable& growth, Format format) {
  if (format == Format::Json) {
    json rows = json::array();
    for (const auto& row : growth.rows) {
      const Matrix2& w = row.result.witness;
      rows.push_back({{"N", row.result.level},
                      {"t_min", row.result.min_trace.get_str()},
                      {"systole", number(row.result.systole)},
                      {"two_log_N_margin", number(row.margin)},
                      {"witness", {w.a.get_str(), w.b.get_str(), w.c.get_str(), w.d.get_str()}}});
    }
    json slope = nullptr;
    if (growth.slope) slope = number(*growth.slope);
    return dump({{"rows", rows}, {"slope", slope}});
  }
  std::vector<std::vector<std::string>> rows = {{"N", "t_min", "systole", "two_log_N_margin"}};
  for (const auto& row : growth.rows) {
    rows.push_back({std::to_string(row.result.level), row.result.min_trace.get_str(),
                    format_double(row.result.systole), format_double(row.margin)});
  }
  if (format == Format::Csv) return csv(rows);
  return table(rows) + "\nslope  " + optional_double(growth.slope) + "\n";
}

std::string render(const SalemVerdict& v, Format format) {
  if (format == Format::Json) return dump(verdict_json(v));
  if (format == Format::Csv) return csv({verdict_header(), verdict_row(v)});
  std::vector<std::vector<std::string>> rows = {
      {"poly", v.input.to_string()},
      {"is_complex_salem", v.is_complex_salem() ? "true" : "false"},
      {"status", status_name(v.status)},
  };
  if (v.lambda) {
    const auto& l = *v.lambda;
    rows.push_back({"lambda", format_double(static_cast<double>(l.real())) + " + " +
                                  format_double(static_cast<double>(l.imag())) + "i"});
    rows.push_back({"|lambda|", format_double(static_cast<double>(std::abs(l)))});
  } else {
    rows.push_back({"lambda", "none"});
  }
  rows.push_back({"mahler", format_double(v.mahler_measure)});
  rows.push_back({"cyclotomic_removed", v.cyclotomic_removed.empty() ? "none" : join_ints(v.cyclotomic_removed, ' ')});
  rows.push_back({"irreducibility", v.irreducibility_method});
  if (v.no_circle_roots) rows.push_back({"no_circle_roots", "true"});
  if (!v.diagnostic.empty()) rows.push_back({"diagnostic", v.diagnostic});
  return table(rows);
}

std::string render(const SearchReport& report, Format format) {
  if (format == Format::Json) {
    json results = json::array();
    for (const auto& v : report.results) results.push_back(verdict_json(v));
    json height = nullptr;
    if (report.height) height = *report.height;
    return dump({{"degree", report.degree},
                 {"height", height},
                 {"mahler_max", number(report.mahler_max)},
                 {"count", report.results.size()},
                 {"results", results}});
  }
  std::vector<std::vector<std::string>> rows = {verdict_header()};
  for (const auto& v : report.results) rows.push_back(verdict_row(v));
  if (format == Format::Csv) return csv(rows);
  return table(rows) + "\ncount  " + std::to_string(report.results.size()) + "\n";
}

std::string render(const MinimalSalem& result, Format format) {
  if (format == Format::Json) {
    json minimum = nullptr;
    if (result.minimum) minimum = verdict_json(*result.minimum);
    return dump({{"minimum", minimum},
                 {"degree_max", result.degree_max},
                 {"mahler_cutoff", number(result.mahler_cutoff)},
                 {"caveat", result.caveat}});
  }
  if (format == Format::Csv) {
    std::vector<std::string> header = verdict_header();
    header.insert(header.end(), {"degree_max", "mahler_cutoff"});
    std::vector<std::vector<std::string>> rows = {header};
    if (result.minimum) {
      auto row = verdict_row(*result.minimum);
      row.insert(row.end(), {std::to_string(result.degree_max), format_double(result.mahler_cutoff)});
      rows.push_back(row);
    }
    return csv(rows);
  }
  std::vector<std::vector<std::string>> rows = {
      {"minimum", result.minimum ? result.minimum->input.to_string() : "none"},
      {"mahler", result.minimum ? format_double(result.minimum->mahler_measure) : "none"},
      {"degree_max", std::to_string(result.degree_max)},
      {"mahler_cutoff", format_double(result.mahler_cutoff)},
      {"caveat", result.caveat},
  };
  return table(rows);
}

std::string render(const SalemSystoleBound& result, Format format) {
  if (format == Format::Json) {
    json bound = nullptr;
    if (result.bound) bound = number(*result.bound);
    json witness = nullptr;
    if (result.witness) witness = verdict_json(*result.witness);
    return dump({{"n", result.n},
                 {"degree_bound", result.degree_bound},
                 {"bound", bound},
                 {"witness", witness},
                 {"mahler_cutoff", number(result.mahler_cutoff)},
                 {"caveat", result.caveat}});
  }
  if (format == Format::Csv) {
    return csv({{"n", "degree_bound", "bound", "witness", "mahler_cutoff"},
                {std::to_string(result.n), std::to_string(result.degree_bound), optional_double(result.bound),
                 result.witness ? result.witness->input.to_string() : "none", format_double(result.mahler_cutoff)}});
  }
  std::vector<std::vector<std::string>> rows = {
      {"n", std::to_string(result.n)},
      {"degree_bound", std::to_string(result.degree_bound)},
      {"bound", optional_double(result.bound)},
      {"witness", result.witness ? result.witness->input.to_string() : "none"},
      {"mahler_cutoff", format_double(result.mahler_cutoff)},
      {"caveat", result.caveat},
  };
  return table(rows);
}

}  // namespace systole::cli
