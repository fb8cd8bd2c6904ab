#include "induction/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "format.hpp"
#include "induction/confidence.hpp"
#include "induction/errors.hpp"
#include "induction/oracle.hpp"
#include "induction/prediction.hpp"
#include "induction/reproduction.hpp"

namespace induction::cli {
namespace {

bool parse_double(std::string_view text, double& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Output records are newline-terminated: one JSON object per line, or a CSV
// header followed by rows.
void emit(std::ostream& out, const std::string& format, const std::vector<std::string>& columns,
          const std::vector<Json>& records) {
  if (format == "csv") {
    write_csv(out, columns, records);
    return;
  }
  for (const Json& record : records) out << record.dump() << '\n';
}

struct CommonArgs {
  Count n = 0;
  Count t = 0;
  std::string format = "json";
};

void add_data_flags(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--n", args.n, "number of trials")->required();
  cmd->add_option("--t", args.t, "number of successes")->required();
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

PriorSpec require_prior(const std::string& text) {
  auto prior = parse_prior(text);
  if (!prior) throw DomainError("unrecognised prior '" + text + "'");
  return *prior;
}

int run_predict(const CommonArgs& args, const std::string& prior_text,
                const std::optional<std::string>& m_text, std::ostream& out) {
  const PriorSpec prior = require_prior(prior_text);
  const EvidenceData data(args.n, args.t);

  Json record{{"command", "predict"},
              {"prior", describe(prior)},
              {"n", data.n()},
              {"t", data.t()},
              {"predict_next", round_significant(predict_next(prior, data))},
              {"m", nullptr},
              {"predict_run", nullptr},
              {"prob_general", round_significant(prob_general(prior, data))},
              {"confirmation", nullptr},
              {"note", nullptr}};
  if (m_text) {
    const std::string m = lowercase(*m_text);
    if (m == "inf") {
      record["m"] = "inf";
      record["predict_run"] = round_significant(predict(prior, {data, Horizon::infinite()}));
    } else {
      Count steps = 0;
      auto [ptr, ec] = std::from_chars(m.data(), m.data() + m.size(), steps);
      if (ec != std::errc() || ptr != m.data() + m.size()) {
        throw DomainError("--m expects a count or 'inf'");
      }
      record["m"] = steps;
      record["predict_run"] = round_significant(predict_run(prior, data, steps));
    }
  }
  try {
    record["confirmation"] = round_significant(confirmation_measure(prior, data));
  } catch (const UndefinedConfirmation&) {
    record["note"] = "confirmation undefined: P(G) does not exist under an improper prior";
  }
  emit(out, args.format,
       {"prior", "n", "t", "predict_next", "m", "predict_run", "prob_general", "confirmation",
        "note"},
       {record});
  return kSuccess;
}

void emit_distribution(std::ostream& out, const std::string& format, Json summary,
                       const std::vector<std::string>& columns,
                       const std::optional<std::vector<GridPoint>>& grid) {
  if (format == "csv") {
    write_csv(out, columns, {summary});
    if (grid) {
      out << '\n';
      const Json grid_json = to_json(*grid);
      write_csv(out, {"theta", "value", "kind"},
                std::vector<Json>(grid_json.begin(), grid_json.end()));
    }
    return;
  }
  if (grid) summary["grid"] = to_json(*grid);
  out << summary.dump() << '\n';
}

int run_posterior(const CommonArgs& args, const std::string& prior_text, Count grid_points,
                  std::ostream& out) {
  const PriorSpec prior = require_prior(prior_text);
  const EvidenceData data(args.n, args.t);
  const MixedBetaDistribution post = posterior_update(prior, data);

  Json summary{{"command", "posterior"}, {"prior", describe(prior)}, {"n", data.n()},
               {"t", data.t()}};
  const Json shape = to_json(post);
  for (const auto& [key, value] : shape.items()) summary[key] = value;
  std::optional<std::vector<GridPoint>> grid;
  if (grid_points > 0) grid = density_grid(post, grid_points);

  std::vector<std::string> columns = {"prior", "n", "t"};
  columns.insert(columns.end(), kDistributionColumns.begin(), kDistributionColumns.end());
  emit_distribution(out, args.format, std::move(summary), columns, grid);
  return kSuccess;
}

int run_confidence(const CommonArgs& args, const std::string& kind_text, double level,
                   Count grid_points, std::ostream& out) {
  const auto kind = parse_pvalue_kind(kind_text);
  if (!kind) throw DomainError("unrecognised --pvalue '" + kind_text + "'");
  const EvidenceData data(args.n, args.t);
  const MixedBetaDistribution dist = confidence_distribution(*kind, data);
  const ConfidenceInterval ci = confidence_interval(dist, level);

  Json summary{{"command", "confidence"}, {"pvalue", std::string(to_string(*kind))},
               {"n", data.n()}, {"t", data.t()}};
  const Json shape = to_json(dist);
  for (const auto& [key, value] : shape.items()) summary[key] = value;
  summary["level"] = round_significant(level);
  summary["lower"] = round_significant(ci.lower);
  summary["upper"] = round_significant(ci.upper);
  summary["degenerate_point"] =
      ci.degenerate_point ? Json(round_significant(*ci.degenerate_point)) : Json(nullptr);
  summary["induced_prior"] = nullptr;
  summary["note"] = nullptr;
  try {
    summary["induced_prior"] = describe(induced_prior(*kind, data));
  } catch (const PriorNotIdentifiable&) {
    summary["note"] = "induced prior not identifiable from a pure atom";
  }
  std::optional<std::vector<GridPoint>> grid;
  if (grid_points > 0) grid = density_grid(dist, grid_points);

  std::vector<std::string> columns = {"pvalue", "n", "t"};
  columns.insert(columns.end(), kDistributionColumns.begin(), kDistributionColumns.end());
  columns.insert(columns.end(),
                 {"level", "lower", "upper", "degenerate_point", "induced_prior", "note"});
  emit_distribution(out, args.format, std::move(summary), columns, grid);
  return kSuccess;
}

int run_coverage(const std::string& proc_text, const std::vector<double>& thetas,
                 const std::vector<Count>& ns, double level, std::optional<Count> reps,
                 std::uint64_t seed, const std::string& format, std::ostream& out) {
  const Procedure proc = parse_procedure(proc_text);
  std::vector<Json> records;
  for (double theta : thetas) {
    for (Count n : ns) {
      const CoverageReport report = reps ? coverage_monte_carlo(theta, n, proc, level, *reps, seed)
                                         : coverage_exact(theta, n, proc, level);
      records.push_back(to_json(report));
    }
  }
  emit(out, format, kCoverageColumns, records);
  return kSuccess;
}

int run_reproduce(const std::string& format, std::ostream& out, std::ostream& err) {
  const std::vector<ReproductionRow> rows = reproduce_claims();
  std::vector<Json> records;
  records.reserve(rows.size());
  int failed = 0;
  for (const ReproductionRow& row : rows) {
    records.push_back(to_json(row));
    if (!row.pass) {
      ++failed;
      err << "FAILED " << row.claim_id << ": expected " << format_number(row.expected)
          << ", computed " << format_number(row.computed) << '\n';
    }
  }
  emit(out, format, kReproductionColumns, records);
  return failed == 0 ? kSuccess : kReproductionFailed;
}

}  // namespace

std::optional<PriorSpec> parse_prior(std::string_view text) {
  if (text == "laplace") return PriorSpec::laplace();
  if (text == "jeffreys-mixture") return PriorSpec::jeffreys_mixture();
  if (text == "jeffreys-continuous") return PriorSpec::jeffreys_continuous();
  if (text == "haldane") return PriorSpec::haldane();
  if (text == "induced-right") return PriorSpec::induced_right();
  if (text == "induced-left") return PriorSpec::induced_left();
  constexpr std::string_view prefix = "beta:";
  if (!text.starts_with(prefix)) return std::nullopt;
  const std::string_view shapes = text.substr(prefix.size());
  const auto comma = shapes.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  double alpha = 0.0;
  double beta = 0.0;
  if (!parse_double(shapes.substr(0, comma), alpha) ||
      !parse_double(shapes.substr(comma + 1), beta)) {
    return std::nullopt;
  }
  if (!(alpha >= 0.0) || !(beta >= 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    return std::nullopt;
  }
  return PriorSpec::beta(alpha, beta);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernoulli-sequence induction: posteriors, confidence distributions, oracle tests"};
  app.name("induction");
  app.require_subcommand(1);

  CommonArgs common;
  std::string prior_text = "laplace";
  std::optional<std::string> m_text;
  Count grid_points = 0;
  std::string pvalue_text;
  double level = 0.95;
  std::string proc_text;
  std::vector<double> thetas;
  std::vector<Count> ns;
  std::optional<Count> reps;
  std::uint64_t seed = 0;

  auto* predict_cmd = app.add_subcommand("predict", "predictive probabilities and P(G | data)");
  add_data_flags(predict_cmd, common);
  predict_cmd->add_option("--prior", prior_text, "prior specification")->capture_default_str();
  predict_cmd->add_option("--m", m_text, "future run length, or 'inf'");
  add_format_flag(predict_cmd, common.format);

  auto* posterior_cmd = app.add_subcommand("posterior", "posterior distribution and density grid");
  add_data_flags(posterior_cmd, common);
  posterior_cmd->add_option("--prior", prior_text, "prior specification")->capture_default_str();
  posterior_cmd->add_option("--grid", grid_points, "number of interior grid points");
  add_format_flag(posterior_cmd, common.format);

  auto* confidence_cmd =
      app.add_subcommand("confidence", "confidence distribution, interval and induced prior");
  add_data_flags(confidence_cmd, common);
  confidence_cmd->add_option("--pvalue", pvalue_text, "P-value function")
      ->required()
      ->check(CLI::IsMember({"right", "left", "mid"}));
  confidence_cmd->add_option("--level", level, "confidence level in (0, 1]")->capture_default_str();
  confidence_cmd->add_option("--grid", grid_points, "number of interior grid points");
  add_format_flag(confidence_cmd, common.format);

  auto* coverage_cmd = app.add_subcommand("coverage", "coverage of an interval procedure");
  coverage_cmd->add_option("--proc", proc_text, "procedure")
      ->required()
      ->check(CLI::IsMember({"two_way", "three_way", "mid_p", "laplace_credible"}));
  coverage_cmd->add_option("--theta", thetas, "true theta (comma-separated list)")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  coverage_cmd->add_option("--n", ns, "trials (comma-separated list)")->required()->delimiter(',');
  coverage_cmd->add_option("--level", level, "nominal level in (0, 1]")->capture_default_str();
  coverage_cmd->add_option("--reps", reps, "Monte Carlo replicates (exact enumeration if absent)");
  coverage_cmd->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  add_format_flag(coverage_cmd, common.format);

  auto* reproduce_cmd = app.add_subcommand("reproduce", "evaluate the full claim registry");
  add_format_flag(reproduce_cmd, common.format);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*predict_cmd) return run_predict(common, prior_text, m_text, out);
    if (*posterior_cmd) return run_posterior(common, prior_text, grid_points, out);
    if (*confidence_cmd) return run_confidence(common, pvalue_text, level, grid_points, out);
    if (*coverage_cmd) {
      return run_coverage(proc_text, thetas, ns, level, reps, seed, common.format, out);
    }
    if (*reproduce_cmd) return run_reproduce(common.format, out, err);
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kReproductionFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace induction::cli
