#include "induction/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace induction::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json single_record(const Result& r) {
  EXPECT_EQ(r.code, kSuccess) << r.err;
  return nlohmann::json::parse(r.out);
}

std::vector<std::string> keys(const std::string& line) {
  std::vector<std::string> names;
  const auto record = nlohmann::ordered_json::parse(line);
  for (const auto& [key, value] : record.items()) names.push_back(key);
  return names;
}

TEST(CliPredict, LaplaceSunrise) {
  const auto record =
      single_record(invoke({"predict", "--prior", "laplace", "--n", "2190000", "--t", "2190000"}));
  EXPECT_NEAR(record["predict_next"].get<double>(), 2190001.0 / 2190002.0, 1e-14);
  EXPECT_EQ(record["prob_general"].get<double>(), 0.0);
}

TEST(CliPredict, JeffreysMixtureGeneral) {
  const auto record = single_record(invoke({"predict", "--prior", "jeffreys-mixture", "--n", "1", "--t", "1"}));
  EXPECT_NEAR(record["prob_general"].get<double>(), 2.0 / 3.0, 1e-14);
  EXPECT_NEAR(record["confirmation"].get<double>(), 1.0 / 6.0, 1e-14);
}

TEST(CliPredict, PriorMeanWithoutData) {
  const auto record = single_record(invoke({"predict", "--prior", "beta:2,3", "--n", "0", "--t", "0"}));
  EXPECT_NEAR(record["predict_next"].get<double>(), 0.4, 1e-15);
}

TEST(CliPredict, UndefinedConfirmationIsNullWithNote) {
  const auto record =
      single_record(invoke({"predict", "--prior", "induced-left", "--n", "3", "--t", "3", "--m", "inf"}));
  EXPECT_TRUE(record["confirmation"].is_null());
  EXPECT_TRUE(record["note"].is_string());
  EXPECT_EQ(record["m"], "inf");
  EXPECT_EQ(record["predict_run"].get<double>(), 1.0);
}

TEST(CliPredict, GoldenJson) {
  const Result r = invoke({"predict", "--prior", "jeffreys-mixture", "--n", "1", "--t", "1", "--m", "5"});
  EXPECT_EQ(r.out,
            "{\"command\":\"predict\",\"prior\":\"jeffreys-mixture\",\"n\":1,\"t\":1,"
            "\"predict_next\":0.888888888888889,\"m\":5,\"predict_run\":0.761904761904762,"
            "\"prob_general\":0.666666666666667,\"confirmation\":0.166666666666667,\"note\":null}\n");
}

TEST(CliPredict, GoldenCsv) {
  const Result r = invoke({"predict", "--prior", "beta:2,3", "--n", "0", "--t", "0", "--format", "csv"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_EQ(r.out,
            "prior,n,t,predict_next,m,predict_run,prob_general,confirmation,note\n"
            "\"beta:2,3\",0,0,0.4,null,null,0,0,null\n");
}

TEST(CliConfidence, LeftAtAllSuccessesIsPointOne) {
  const auto record =
      single_record(invoke({"confidence", "--pvalue", "left", "--n", "5", "--t", "5", "--level", "1.0"}));
  EXPECT_EQ(record["degenerate_point"].get<double>(), 1.0);
  EXPECT_EQ(record["lower"].get<double>(), 1.0);
  EXPECT_EQ(record["upper"].get<double>(), 1.0);
  EXPECT_EQ(record["p1"].get<double>(), 1.0);
}

TEST(CliConfidence, RightWithNoSuccessesIsAtomAtZero) {
  const auto record = single_record(invoke({"confidence", "--pvalue", "right", "--n", "5", "--t", "0"}));
  EXPECT_EQ(record["p0"].get<double>(), 1.0);
  EXPECT_EQ(record["w"].get<double>(), 0.0);
  EXPECT_TRUE(record["induced_prior"].is_null());
}

TEST(CliConfidence, MidIsJeffreysShape) {
  const auto record = single_record(invoke({"confidence", "--pvalue", "mid", "--n", "4", "--t", "2"}));
  EXPECT_EQ(record["a"].get<double>(), 2.5);
  EXPECT_EQ(record["b"].get<double>(), 2.5);
  EXPECT_EQ(record["induced_prior"], "jeffreys-continuous");
}

TEST(CliConfidence, GoldenSchema) {
  const Result r = invoke({"confidence", "--pvalue", "mid", "--n", "4", "--t", "2", "--grid", "2"});
  ASSERT_EQ(r.code, kSuccess);
  const std::vector<std::string> expected = {"command", "pvalue", "n", "t", "p0", "p1", "w", "a", "b",
                                             "improper_limit", "level", "lower", "upper",
                                             "degenerate_point", "induced_prior", "note", "grid"};
  EXPECT_EQ(keys(r.out), expected);
  const Result csv = invoke({"confidence", "--pvalue", "mid", "--n", "4", "--t", "2", "--grid", "2",
                             "--format", "csv"});
  EXPECT_EQ(csv.out,
            "pvalue,n,t,p0,p1,w,a,b,improper_limit,level,lower,upper,degenerate_point,induced_prior,note\n"
            "mid,4,2,0,0,1,2.5,2.5,false,0.95,0.122753882751567,0.877246117248433,null,"
            "jeffreys-continuous,null\n"
            "\n"
            "theta,value,kind\n"
            "0.333333333333333,1.4227220798532,density\n"
            "0.666666666666667,1.4227220798532,density\n");
}

TEST(CliPosterior, GridIncludesAtom) {
  const auto record =
      single_record(invoke({"posterior", "--prior", "jeffreys-mixture", "--n", "1", "--t", "1", "--grid", "2"}));
  ASSERT_EQ(record["grid"].size(), 3u);
  EXPECT_EQ(record["grid"][2]["kind"], "atom");
  EXPECT_NEAR(record["grid"][2]["value"].get<double>(), 2.0 / 3.0, 1e-14);
}

TEST(CliPosterior, GoldenCsv) {
  const Result r = invoke({"posterior", "--prior", "laplace", "--n", "3", "--t", "1", "--format", "csv"});
  EXPECT_EQ(r.out, "prior,n,t,p0,p1,w,a,b,improper_limit\nlaplace,3,1,0,0,1,2,3,false\n");
}

TEST(CliCoverage, CertainSuccess) {
  const auto record = single_record(invoke({"coverage", "--proc", "two_way", "--theta", "1.0", "--n", "10"}));
  EXPECT_EQ(record["coverage"].get<double>(), 1.0);
  EXPECT_EQ(record["method"], "exact_enumeration");
  EXPECT_TRUE(record["replicates"].is_null());
}

TEST(CliCoverage, AcceptRateClosedForm) {
  const auto record = single_record(invoke({"coverage", "--proc", "two_way", "--theta", "0.9", "--n", "10"}));
  EXPECT_NEAR(record["accept_h1_rate"].get<double>(), 0.3486784401, 1e-12);
}

TEST(CliCoverage, MonteCarloMatchesExact) {
  const auto exact = single_record(invoke({"coverage", "--proc", "two_way", "--theta", "0.5", "--n", "20"}));
  const auto mc = single_record(invoke({"coverage", "--proc", "two_way", "--theta", "0.5", "--n", "20",
                                        "--reps", "100000", "--seed", "7"}));
  const double c = exact["coverage"].get<double>();
  EXPECT_NEAR(mc["coverage"].get<double>(), c, 4.0 * std::sqrt(c * (1.0 - c) / 1e5));
  EXPECT_EQ(mc["method"], "monte_carlo");
  EXPECT_EQ(mc["replicates"], 100000);
  EXPECT_EQ(mc["seed"], 7);
}

TEST(CliCoverage, GridCsvColumnOrder) {
  const Result r = invoke({"coverage", "--proc", "two_way", "--theta", "0.9", "0.5", "--n", "10", "20",
                           "--format", "csv"});
  ASSERT_EQ(r.code, kSuccess);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "theta_true,n,procedure_name,nominal_level,coverage,accept_h1_rate,method,replicates,seed");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  EXPECT_EQ(rows, 4);
  EXPECT_NE(r.out.find("0.5,20,two_way,0.95,0.921646118164063"), std::string::npos);
}

TEST(CliReproduce, AllRowsPass) {
  const Result r = invoke({"reproduce"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  std::istringstream lines(r.out);
  int rows = 0;
  for (std::string line; std::getline(lines, line);) {
    const auto row = nlohmann::json::parse(line);
    EXPECT_TRUE(row["pass"].get<bool>()) << line;
    if (rows == 0) {
      const std::vector<std::string> expected = {"claim_id", "location", "expected_formula", "expected",
                                                 "computed", "abs_diff", "tolerance", "pass"};
      EXPECT_EQ(keys(line), expected);
      EXPECT_EQ(row["claim_id"], "laplace_predictive_2190000");
    }
    ++rows;
  }
  EXPECT_GE(rows, 12);
  EXPECT_NE(r.out.find("\"jeffreys_chain_k2\""), std::string::npos);
}

TEST(CliExitCodes, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--t", "5"}).code, kUsageError);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--t", "1", "--prior", "beta:1"}).code, kUsageError);
  EXPECT_EQ(invoke({"predict", "--n", "3", "--t", "1", "--m", "many"}).code, kUsageError);
  EXPECT_EQ(invoke({"predict", "--prior", "haldane", "--n", "0", "--t", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"coverage", "--proc", "wald", "--theta", "0.5", "--n", "3"}).code, kUsageError);
  EXPECT_EQ(invoke({"confidence", "--n", "3", "--t", "1"}).code, kUsageError);
  EXPECT_EQ(invoke({"confidence", "--pvalue", "right", "--n", "3", "--t", "1", "--level", "0"}).code,
            kUsageError);
  const Result bad = invoke({"predict", "--n", "3", "--t", "5"});
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
}

TEST(CliExitCodes, HelpSucceeds) {
  EXPECT_EQ(invoke({"--help"}).code, kSuccess);
  EXPECT_EQ(invoke({"coverage", "--help"}).code, kSuccess);
}

TEST(ParsePrior, Grammar) {
  EXPECT_EQ(parse_prior("laplace"), PriorSpec::laplace());
  EXPECT_EQ(parse_prior("jeffreys-mixture"), PriorSpec::jeffreys_mixture());
  EXPECT_EQ(parse_prior("jeffreys-continuous"), PriorSpec::jeffreys_continuous());
  EXPECT_EQ(parse_prior("haldane"), PriorSpec::haldane());
  EXPECT_EQ(parse_prior("induced-right"), PriorSpec::induced_right());
  EXPECT_EQ(parse_prior("induced-left"), PriorSpec::induced_left());
  EXPECT_EQ(parse_prior("beta:2.5,0"), PriorSpec::beta(2.5, 0.0));
  EXPECT_EQ(parse_prior("beta:1e-3,4"), PriorSpec::beta(1e-3, 4.0));
  for (const char* bad : {"", "Laplace", "beta:", "beta:1", "beta:1,", "beta:1,2,3", "beta:-1,2", "beta:a,b",
                          "beta:1, 2"}) {
    EXPECT_FALSE(parse_prior(bad).has_value()) << bad;
  }
}

}  // namespace
}  // namespace induction::cli
