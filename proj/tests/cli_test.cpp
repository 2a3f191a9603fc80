#include <gtest/gtest.h>

#include <sstream>

#include "bimehler/hermite.hpp"
#include "cli/commands.hpp"
#include "cli/json_io.hpp"

namespace bimehler::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliHermite, PrintsPolynomial) {
  EXPECT_EQ(run_cli({"hermite", "2", "2"}).out, "1 + 4*x + 2*x^2\n");
  EXPECT_EQ(run_cli({"hermite", "0", "5"}).out, "1\n");
  EXPECT_EQ(run_cli({"hermite", "-1", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"hermite", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"hermite", "two", "2"}).code, kExitUsage);
  const auto j = nlohmann::json::parse(run_cli({"hermite", "2", "3", "--format", "json"}).out);
  EXPECT_EQ(j["poly"], "1 + 6*x + 6*x^2");
}

TEST(CliEnumerate, ReportsAgreement) {
  const auto marital = run_cli({"enumerate", "2", "2"});
  EXPECT_EQ(marital.code, kExitOk);
  EXPECT_EQ(marital.out, "1 + 4*x + 2*x^2 \xE2\x80\x94 AGREES\n");
  const auto full = run_cli({"enumerate", "1", "1", "--full"});
  EXPECT_EQ(full.code, kExitOk);
  EXPECT_EQ(full.out, "1 + y + x + x*y \xE2\x80\x94 AGREES\n");
  EXPECT_EQ(run_cli({"enumerate", "9", "9"}).code, kExitLimit);
  EXPECT_EQ(run_cli({"enumerate", "5", "5", "--full"}).code, kExitLimit);
  EXPECT_EQ(run_cli({"enumerate", "7", "3", "--limit", "7"}).code, kExitOk);
  const auto j = nlohmann::json::parse(run_cli({"enumerate", "3", "2", "--full", "--format", "json"}).out);
  EXPECT_TRUE(j["agrees"].get<bool>());
  EXPECT_EQ(parse_weight_poly(j["enumerated"].get<std::string>()), hermite_pair_poly(3, 2));
}

TEST(CliVerify, PassesAndRequiresBothBounds) {
  const auto pass = run_cli({"verify", "--max-m", "8", "--max-n", "8"});
  EXPECT_EQ(pass.code, kExitOk);
  EXPECT_EQ(pass.out, "PASS (81 cells, 3 forms)\n");
  EXPECT_EQ(run_cli({"verify", "--max-m", "0", "--max-n", "0"}).code, kExitOk);
  EXPECT_EQ(run_cli({"verify", "--max-m", "8"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--max-m", "2", "--max-n", "2", "--format", "yaml"}).code, kExitUsage);
}

TEST(CliVerify, JsonReportRoundTrips) {
  const auto result = run_cli({"verify", "--max-m", "3", "--max-n", "2", "--format", "json"});
  ASSERT_EQ(result.code, kExitOk);
  const auto j = nlohmann::json::parse(result.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["max_m"], 3);
  EXPECT_TRUE(j["mismatches"].empty());
  EXPECT_TRUE(j["elapsed_ms"].contains("closed"));
  const VerifyReport r = report_from_json(j);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(report_to_json(r), j);
}

TEST(CliVerify, FailingReportSerializesMismatches) {
  VerifyReport r;
  r.max_m = 1;
  r.max_n = 1;
  r.mismatches.push_back({1, 1, "lhs/closed", parse_weight_poly("1 + x"), parse_weight_poly("1 - x")});
  const auto j = report_to_json(r);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["mismatches"][0]["expected"], "1 + x");
  EXPECT_EQ(j["mismatches"][0]["actual"], "1 - x");
  const VerifyReport back = report_from_json(j);
  ASSERT_EQ(back.mismatches.size(), 1u);
  EXPECT_EQ(back.mismatches[0].actual, r.mismatches[0].actual);
  auto tampered = j;
  tampered["status"] = "pass";
  EXPECT_THROW(report_from_json(tampered), FormatError);
}

TEST(CliDecompose, DescribesComponents) {
  const auto iv = run_cli({"decompose"}, R"({"m":1,"n":1,"marriages":[[1,1]],"affairs":[[1,1]]})");
  EXPECT_EQ(iv.code, kExitOk);
  EXPECT_NE(iv.out.find("Case IV, k=1, weight x*y"), std::string::npos) << iv.out;
  EXPECT_NE(iv.out.find("= profile weight x*y"), std::string::npos);

  const auto lone = run_cli({"decompose"}, R"({"m":1,"n":0,"marriages":[],"affairs":[]})");
  EXPECT_EQ(lone.code, kExitOk);
  EXPECT_NE(lone.out.find("Case I (man 1), weight 1"), std::string::npos);
}

TEST(CliDecompose, RejectsBadInput) {
  const auto bigamy = run_cli({"decompose"}, R"({"m":2,"n":2,"marriages":[[1,1],[1,2]],"affairs":[]})");
  EXPECT_EQ(bigamy.code, kExitInvalidProfile);
  EXPECT_NE(bigamy.err.find("man 1"), std::string::npos);
  EXPECT_EQ(run_cli({"decompose"}, "{\"m\": 2,").code, kExitUsage);
  EXPECT_EQ(run_cli({"decompose"}, R"({"m":1,"n":1,"marriages":[[1]],"affairs":[]})").code, kExitUsage);
  EXPECT_EQ(run_cli({"decompose"}, R"({"m":1,"marriages":[],"affairs":[]})").code, kExitUsage);
  EXPECT_EQ(run_cli({"decompose", "--file", "/nonexistent/profile.json"}).code, kExitUsage);
}

TEST(CliDecompose, RandomModeIsSeeded) {
  const auto a = run_cli({"decompose", "--random", "--seed", "5", "--max-m", "6", "--max-n", "5"});
  const auto b = run_cli({"decompose", "--random", "--seed", "5", "--max-m", "6", "--max-n", "5"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli({"decompose", "--random", "--max-m", "2", "--max-n", "2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"decompose", "--random", "--seed", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"decompose", "--random", "--seed", "1", "--max-m", "30", "--max-n", "2"}).code,
            kExitLimit);
  const auto j = nlohmann::json::parse(
      run_cli({"decompose", "--random", "--seed", "9", "--max-m", "4", "--max-n", "4", "--format", "json"}).out);
  EXPECT_TRUE(j["consistent"].get<bool>());
  EXPECT_NO_THROW(validate(profile_from_json(j["profile"])));
}

TEST(CliCaseSeries, PrintsRows) {
  const auto iv = run_cli({"case-series", "IV", "--max-m", "2", "--max-n", "2"});
  EXPECT_EQ(iv.code, kExitOk);
  EXPECT_EQ(iv.out, "(1,1): x*y\n(2,2): 2*x^2*y^2\n");
  EXPECT_EQ(run_cli({"case-series", "I"}).out, "(1,0): 1\n");
  EXPECT_EQ(run_cli({"case-series", "V"}).code, kExitUsage);
  const auto j = nlohmann::json::parse(
      run_cli({"case-series", "III", "--max-m", "3", "--max-n", "3", "--format", "json"}).out);
  EXPECT_EQ(j["case"], "III");
  EXPECT_EQ(series_from_json(j), case_series(CaseTag::kIII, 3, 3));
}

TEST(JsonIo, ProfileRoundTrip) {
  const Profile p{3, 2, {{1, 2}, {3, 1}}, {{2, 2}}};
  EXPECT_EQ(profile_from_json(profile_to_json(p)), p);
  EXPECT_EQ(parse_profile(R"({"m":3,"n":2,"marriages":[[1,2],[3,1]],"affairs":[[2,2]]})"), p);
  EXPECT_THROW(parse_profile("[1,2]"), FormatError);
  EXPECT_THROW(parse_profile(R"({"m":"3","n":2,"marriages":[],"affairs":[]})"), FormatError);
}

TEST(JsonIo, SeriesRoundTrip) {
  const BiSeries f = rhs_closed_series(3, 4);
  EXPECT_EQ(series_from_json(series_to_json(f)), f);
  EXPECT_THROW(series_from_json(nlohmann::json::parse(
                   R"({"max_m":1,"max_n":1,"coefficients":[{"m":2,"n":0,"poly":"1"}]})")),
               FormatError);
  EXPECT_THROW(series_from_json(nlohmann::json::parse(
                   R"({"max_m":1,"max_n":1,"coefficients":[{"m":1,"n":0,"poly":"x^-1"}]})")),
               FormatError);
}

TEST(Cli, HelpAndUnknownCommands) {
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
}

}  // namespace
}  // namespace bimehler::cli
