#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hardyop/error.hpp"
#include "hardyop/report.hpp"

namespace {

using namespace hardyop;
namespace fs = std::filesystem;

Json anchor_config() {
  return Json::parse(R"({"inner": {"zeros": [[0, 0]]}, "symbol": [[-0.5, 0], [1, 0]], "p": 2})");
}

double re(const Json& pair) { return pair.at(0).get<double>(); }

TEST(RunConfig, Defaults) {
  const auto c = parse_run_config(anchor_config());
  EXPECT_EQ(c.seed, 0u);
  EXPECT_EQ(c.checks, known_checks());
  EXPECT_EQ(c.grid_m, 2048u);
  EXPECT_TRUE(c.output.empty());
}

TEST(RunConfig, RejectsUnknownChecksAndFields) {
  auto j = anchor_config();
  j["checks"] = {"delta", "telepathy"};
  EXPECT_THROW(parse_run_config(j), ConfigError);
  // rejected before the (invalid) inner function is looked at
  j["inner"] = {{"zeros", {{1.5, 0}}}};
  EXPECT_THROW(
      {
        try {
          parse_run_config(j);
        } catch (const ConfigError& e) {
          EXPECT_NE(std::string(e.what()).find("telepathy"), std::string::npos);
          throw;
        }
      },
      ConfigError);
  auto k = anchor_config();
  k["colour"] = "blue";
  EXPECT_THROW(parse_run_config(k), ConfigError);
}

TEST(RunConfig, RejectsInvalidValues) {
  for (const char* patch : {R"({"p": 1.0})", R"({"grid_m": 100, "band_n": 60})", R"({"symbol": []})",
                            R"({"inner": {"zeros": []}})", R"({"inner": {"zeros": [[0.5, 0]], "constant": [2, 0]}})"}) {
    auto j = anchor_config();
    j.update(Json::parse(patch));
    EXPECT_THROW(parse_run_config(j), ConfigError) << patch;
  }
}

TEST(Report, OneByOneAnchor) {
  const auto r = build_report(parse_run_config(anchor_config()));
  const Json& d = r.document;
  EXPECT_FALSE(r.numerical_failure);
  EXPECT_EQ(d.at("schema"), 1);
  EXPECT_NEAR(d.at("delta").get<double>(), 0.5, 1e-9);
  EXPECT_NEAR(re(d.at("bezout").at("u").at(0)), -2.0, 1e-12);
  EXPECT_NEAR(re(d.at("bezout").at("v").at(0)), 2.0, 1e-12);
  EXPECT_TRUE(d.at("invertible").get<bool>());
  EXPECT_NEAR(d.at("sigma_min").get<double>(), 0.5, 1e-12);
  EXPECT_EQ(d.at("commutant_dim"), 1);
  EXPECT_TRUE(d.at("errors").empty());
  for (const auto& [name, v] : d.at("verdicts").items()) {
    EXPECT_TRUE(v.at("passed").get<bool>()) << name;
    EXPECT_TRUE(v.contains("tolerance")) << name;
  }
}

TEST(Report, ConstantSymbol) {
  auto j = anchor_config();
  j["symbol"] = {{1, 0}};
  j["inner"] = {{"zeros", {{0.3, 0}, {-0.5, 0}}}};
  const auto d = build_report(parse_run_config(j)).document;
  EXPECT_GE(d.at("delta").get<double>(), 1.0 - 1e-12);
  EXPECT_TRUE(d.at("invertible").get<bool>());
  EXPECT_NEAR(re(d.at("bezout").at("u").at(0)), 1.0, 1e-12);
  EXPECT_TRUE(d.at("bezout").at("v").empty());
}

TEST(Report, CommonZero) {
  auto j = anchor_config();
  j["inner"] = {{"zeros", {{0.3, 0}, {-0.5, 0}}}};
  j["symbol"] = {{-0.3, 0}, {1, 0}};
  const auto r = build_report(parse_run_config(j));
  const Json& d = r.document;
  EXPECT_EQ(d.at("delta").get<double>(), 0.0);
  EXPECT_FALSE(d.at("invertible").get<bool>());
  EXPECT_EQ(d.at("bezout").at("error"), "CommonZero");
  EXPECT_FALSE(d.at("inverse").at("applicable").get<bool>());
  EXPECT_FALSE(r.numerical_failure);
}

TEST(Report, SelectedChecksOnly) {
  auto j = anchor_config();
  j["checks"] = {"delta"};
  const auto d = build_report(parse_run_config(j)).document;
  EXPECT_TRUE(d.contains("delta"));
  EXPECT_FALSE(d.contains("bezout"));
  EXPECT_FALSE(d.contains("commutant_dim"));
  EXPECT_TRUE(d.contains("tolerances"));
}

TEST(Report, DeterministicAndSeeded) {
  auto j = anchor_config();
  j["inner"] = {{"zeros", {{0.3, 0.2}, {-0.5, 0}, {0, 0.6}}}};
  j["symbol"] = {{0.2, 0}, {-0.1, 0.4}, {1, 0}};
  j["seed"] = 7;
  const auto cfg = parse_run_config(j);
  const auto a = render_report(build_report(cfg).document);
  EXPECT_EQ(a, render_report(build_report(cfg).document));
  j["seed"] = 8;
  EXPECT_NE(a, render_report(build_report(parse_run_config(j)).document));
}

TEST(Sweep, RootPathAndProbeRadius) {
  auto j = anchor_config();
  j["inner"] = {{"zeros", {{0.3, 0}, {-0.5, 0}}}};
  const auto cfg = parse_run_config(j);
  const auto fam = Json::parse(
      R"({"kind": "symbol_root_path", "moving_root_start": [0.3, 0], "direction": [1, 0], "values": [0.1, 0.01, 0.001]})");
  const auto s = run_sweep(cfg, fam);
  std::istringstream in(s.csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "parameter,delta,sigma_min,invertible,sup_u,sup_v,z_re,z_im,corona_value,f_norm,Taf_norm,p");
  std::vector<double> ratio;
  while (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string t, delta, sigma;
    std::getline(cells, t, ',');
    std::getline(cells, delta, ',');
    std::getline(cells, sigma, ',');
    ratio.push_back(std::stod(sigma) / std::stod(t));
  }
  ASSERT_EQ(ratio.size(), 3u);
  for (double r : ratio) EXPECT_LT(std::abs(r / ratio[0] - 1.0), 0.5);

  auto cj = anchor_config();
  const auto radial =
      run_sweep(parse_run_config(cj), Json::parse(R"({"kind": "probe_radius", "angle": 0.7, "values": [0.9, 0.99, 0.999]})"));
  EXPECT_EQ(std::count(radial.csv.begin(), radial.csv.end(), '\n'), 4);
  EXPECT_EQ(radial.csv.find("false"), std::string::npos);
  EXPECT_THROW(run_sweep(cfg, Json::parse(R"({"kind": "spiral", "values": [1]})")), ConfigError);
  EXPECT_THROW(run_sweep(cfg, Json::parse(R"({"kind": "probe_radius", "values": [0.5]})")), ConfigError);
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("hardyop_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static int run(const std::string& args) {
    const std::string cmd = std::string(HARDYOP_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

TEST_F(Cli, ExitCodes) {
  const auto good = write("good.json", anchor_config().dump());
  const auto bad_check = write("bad.json", R"({"inner": {"zeros": [[0,0]]}, "symbol": [1], "checks": ["nope"]})");
  const auto broken = write("broken.json", "{not json");
  EXPECT_EQ(run("report --config " + good.string() + " --out " + (dir_ / "r.json").string()), 0);
  EXPECT_EQ(run("report --config " + bad_check.string()), 2);
  EXPECT_EQ(run("report --config " + broken.string()), 2);
  EXPECT_EQ(run("report --config " + (dir_ / "missing.json").string()), 2);
  EXPECT_EQ(run("frobnicate"), 2);
}

TEST_F(Cli, ByteIdenticalReports) {
  const auto cfg = write("cfg.json", R"({"inner": {"zeros": [[0.3,0.2],[-0.5,0]]}, "symbol": [[0.2,0],[1,0]], "p": 4, "seed": 3})");
  ASSERT_EQ(run("report --config " + cfg.string() + " --out " + (dir_ / "a.json").string()), 0);
  ASSERT_EQ(run("report --config " + cfg.string() + " --out " + (dir_ / "b.json").string()), 0);
  const auto a = slurp(dir_ / "a.json");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(dir_ / "b.json"));
}

TEST_F(Cli, SweepWritesCsv) {
  const auto cfg = write("cfg.json", anchor_config().dump());
  const auto fam = write("fam.json", R"({"kind": "probe_radius", "angle": 0, "values": [0.5, 0.9]})");
  ASSERT_EQ(run("sweep --config " + cfg.string() + " --family " + fam.string() + " --out " + (dir_ / "t.csv").string()), 0);
  const auto csv = slurp(dir_ / "t.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
}

}  // namespace
