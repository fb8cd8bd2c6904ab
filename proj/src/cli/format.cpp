#include "format.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace induction::cli {

const std::vector<std::string> kDistributionColumns = {"p0", "p1", "w", "a", "b",
                                                       "improper_limit"};
const std::vector<std::string> kCoverageColumns = {
    "theta_true", "n",      "procedure_name", "nominal_level", "coverage",
    "accept_h1_rate", "method", "replicates",     "seed"};
const std::vector<std::string> kReproductionColumns = {
    "claim_id", "location", "expected_formula", "expected", "computed", "abs_diff", "tolerance",
    "pass"};

double round_significant(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json to_json(const MixedBetaDistribution& dist) {
  return Json{{"p0", round_significant(dist.p0())},
              {"p1", round_significant(dist.p1())},
              {"w", round_significant(dist.w())},
              {"a", round_significant(dist.a())},
              {"b", round_significant(dist.b())},
              {"improper_limit", dist.is_improper_limit()}};
}

Json to_json(const ConfidenceInterval& ci) {
  Json j{{"lower", round_significant(ci.lower)},
         {"upper", round_significant(ci.upper)},
         {"level", round_significant(ci.level)},
         {"degenerate_point", nullptr}};
  if (ci.degenerate_point) j["degenerate_point"] = round_significant(*ci.degenerate_point);
  return j;
}

Json to_json(const std::vector<GridPoint>& grid) {
  Json out = Json::array();
  for (const GridPoint& p : grid) {
    out.push_back(Json{{"theta", round_significant(p.theta)},
                       {"value", round_significant(p.value)},
                       {"kind", p.kind == GridPoint::Kind::Atom ? "atom" : "density"}});
  }
  return out;
}

Json to_json(const CoverageReport& report) {
  const bool mc = report.method == CoverageMethod::MonteCarlo;
  return Json{{"theta_true", round_significant(report.theta_true)},
              {"n", report.n},
              {"procedure_name", std::string(to_string(report.procedure))},
              {"nominal_level", round_significant(report.nominal_level)},
              {"coverage", round_significant(report.coverage)},
              {"accept_h1_rate", round_significant(report.accept_h1_rate)},
              {"method", std::string(to_string(report.method))},
              {"replicates", mc ? Json(report.replicates) : Json(nullptr)},
              {"seed", mc ? Json(report.seed) : Json(nullptr)}};
}

Json to_json(const ReproductionRow& row) {
  return Json{{"claim_id", row.claim_id},
              {"location", row.location},
              {"expected_formula", row.expected_formula},
              {"expected", round_significant(row.expected)},
              {"computed", round_significant(row.computed)},
              {"abs_diff", round_significant(row.abs_diff)},
              {"tolerance", round_significant(row.tolerance)},
              {"pass", row.pass}};
}

namespace {

std::string csv_field(const Json& value) {
  if (value.is_null()) return "null";
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_integer()) return value.dump();
  if (value.is_number()) return format_number(value.get<double>());
  const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<Json>& records) {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const Json& record : records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out << (i ? "," : "") << csv_field(record.contains(columns[i]) ? record[columns[i]] : Json());
    }
    out << '\n';
  }
}

}  // namespace induction::cli
