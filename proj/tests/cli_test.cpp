// Copyright 2026 The photon_filter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "photon_filter/cli/run.hpp"

namespace photon_filter::cli {
namespace {

namespace fs = std::filesystem;

fs::path preset_path(const std::string& name) {
  return fs::path(PHOTON_FILTER_PRESET_DIR) / (name + ".json");
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("photon_filter_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunSummary run_preset(const std::string& name, const std::string& sub,
                        FactorMode mode = FactorMode::kExact) {
    RunOptions o;
    o.out_dir = dir_ / sub;
    o.factor_mode = mode;
    return run(load_config(preset_path(name)), o);
  }

  static std::vector<std::vector<double>> read_csv(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
      std::vector<double> row;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
      rows.push_back(row);
    }
    return rows;
  }

  static std::string header(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    return line;
  }

  fs::path dir_;
};

TEST_F(CliTest, Fig3DistributionPeaksAtEight) {
  const auto s = run_preset("fig3", "fig3");
  const auto rows = read_csv(dir_ / "fig3" / "distribution.csv");
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i][1] > rows[best][1]) best = i;
  EXPECT_EQ(rows[best][0], 8.0);
  EXPECT_EQ(header(dir_ / "fig3" / "distribution.csv"), "n,probability");
  EXPECT_GE(s.manifest["results"]["fidelity"].get<double>(), 0.8);
  EXPECT_EQ(s.manifest["results"]["argmax_n"].get<int>(), 8);
}

TEST_F(CliTest, Fig7LeftManifest) {
  const auto s = run_preset("fig7-left", "f7");
  EXPECT_NEAR(s.manifest["results"]["p_on"].get<double>(), 0.789, 0.02);
  const auto m = io::read_json(dir_ / "f7" / "manifest.json");
  EXPECT_EQ(m, s.manifest);
  EXPECT_EQ(m["library_version"], kVersion);
  EXPECT_NEAR(m["parameters"]["cavity"]["n_star"].get<double>(), 3.0, 1e-12);
}

TEST_F(CliTest, AllFigurePresetsRun) {
  for (const char* name : {"fig2", "fig3", "fig4-left", "fig4-right", "fig7-left", "fig7-right"}) {
    EXPECT_NO_THROW(run_preset(name, name)) << name;
  }
  EXPECT_TRUE(fs::exists(dir_ / "fig2" / "sigma_grid.csv"));
  const auto grid = read_csv(dir_ / "fig2" / "sigma_grid.csv");
  EXPECT_EQ(grid.size(), 81u * 81u);
  double peak = 0.0;
  for (const auto& r : grid) peak = std::max(peak, r[2]);
  EXPECT_NEAR(peak, 1.0, 1e-12);
}

TEST_F(CliTest, PrepareFockFromFockSignal) {
  const auto c = parse_config(io::json::parse(R"({
    "mode": "prepare-fock", "cavity": {"tau": 0.01, "chi_t": 0.05, "psi": 0.25, "eta": 0.5},
    "alpha": 5, "signal": {"type": "fock", "n": 5}, "n_trunc": 10})"));
  RunOptions o;
  o.out_dir = dir_;
  run(c, o);
  const auto rows = read_csv(dir_ / "distribution.csv");
  for (const auto& r : rows) EXPECT_EQ(r[1], r[0] == 5.0 ? 1.0 : 0.0);
}

TEST_F(CliTest, IdenticalConfigGivesIdenticalBytes) {
  run_preset("tomography-coherent", "a");
  run_preset("tomography-coherent", "b");
  run_preset("fig4-left", "c");
  run_preset("fig4-left", "d");
  for (auto [x, y] : {std::pair{"a", "b"}, std::pair{"c", "d"}}) {
    for (const auto& entry : fs::directory_iterator(dir_ / x)) {
      const auto other = dir_ / y / entry.path().filename();
      EXPECT_EQ(io::read_file(entry.path()), io::read_file(other)) << entry.path();
    }
  }
}

TEST_F(CliTest, SeedOverrideChangesSamples) {
  RunOptions o;
  o.out_dir = dir_ / "s1";
  o.seed = 1;
  run(load_config(preset_path("tomography-coherent")), o);
  o.out_dir = dir_ / "s2";
  o.seed = 2;
  run(load_config(preset_path("tomography-coherent")), o);
  EXPECT_NE(io::read_file(dir_ / "s1" / "scan.csv"), io::read_file(dir_ / "s2" / "scan.csv"));
}

TEST_F(CliTest, DensityFileRoundTripsThroughMatrixSignal) {
  run_preset("fig4-left", "src");
  const auto original = io::read_density(dir_ / "src" / "density_matrix.json");
  const auto c = parse_config(io::json::parse(R"({
    "mode": "prepare-fock", "cavity": {"tau": 0.01, "chi_t": 0.05, "psi": 0.4, "eta": 0.1},
    "alpha": 3, "signal": {"type": "matrix", "path": "src/density_matrix.json"}})"), dir_);
  const auto reloaded = detail::build_signal(c.signal, 0);
  EXPECT_LE((reloaded.entries() - original.entries()).cwiseAbs().maxCoeff(), 1e-15);
  RunOptions o;
  o.out_dir = dir_ / "again";
  run(c, o);
  EXPECT_TRUE(fs::exists(dir_ / "again" / "density_matrix.json"));
}

TEST_F(CliTest, EtaSweepPurityRisesAsEfficiencyDrops) {
  run_preset("sweep-eta", "eta");
  const auto rows = read_csv(dir_ / "eta" / "sweep.csv");
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i][0], rows[i - 1][0]);
    EXPECT_GT(rows[i][3], rows[i - 1][3]);
  }
  EXPECT_EQ(header(dir_ / "eta" / "sweep.csv"), "eta,p_on,fidelity,purity");
}

TEST_F(CliTest, TauSweepFidelityNondecreasing) {
  run_preset("sweep-tau", "tau");
  const auto rows = read_csv(dir_ / "tau" / "sweep.csv");
  ASSERT_EQ(rows.size(), 9u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_GE(rows[i][2], rows[i - 1][2]);
}

TEST_F(CliTest, ZeroStepSweepWritesHeaderOnly) {
  const auto c = parse_config(io::json::parse(R"({
    "mode": "sweep", "cavity": {"tau": 0.01, "chi_t": 0.05, "psi": 0.4, "eta": 0.1},
    "alpha": 3, "signal": {"type": "coherent", "beta": 1}, "n_trunc": 10,
    "sweep": {"parameter": "tau", "min": 0.1, "max": 0.01, "steps": 0}})"));
  RunOptions o;
  o.out_dir = dir_;
  run(c, o);
  EXPECT_EQ(io::read_file(dir_ / "sweep.csv"), "tau,p_on,fidelity,purity\n");
}

TEST_F(CliTest, ConfigErrors) {
  const auto expect_code = [](const std::string& text, ErrorCode code) {
    try {
      parse_config(io::json::parse(text));
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << text;
    }
  };
  expect_code(R"({"mode": "nope"})", ErrorCode::kConfig);
  expect_code(R"({"mode": "sweep", "alpha": 3, "signal": {"type": "fock", "n": 1}, "n_trunc": 4,
                 "cavity": {"chi_t": 0.1}, "sweep": {"parameter": "gain", "values": [1]}})",
              ErrorCode::kConfig);
  expect_code(R"({"mode": "prepare-fock", "signal": {"type": "fock", "n": 1}, "n_trunc": 1})",
              ErrorCode::kConfig);
  expect_code(R"({"schema_version": 2, "mode": "prepare-fock"})", ErrorCode::kConfig);
  expect_code(R"({"mode": "prepare-fock", "n_trunc": 4, "signal": {"type": "matrix", "path": "missing.json"}})",
              ErrorCode::kConfig);
  expect_code(R"({"mode": "prepare-fock", "cavity": {"tau": 0}, "signal": {"type": "fock", "n": 1}, "n_trunc": 4})",
              ErrorCode::kInvalidArgument);
}

TEST_F(CliTest, EntanglePreset) {
  const auto s = run_preset("entangle-n2", "ent");
  EXPECT_GE(s.manifest["results"]["fidelity"].get<double>(), 0.99);
  EXPECT_EQ(header(dir_ / "ent" / "distribution.csv"), "n1,n2,probability");
  const auto rho = io::read_density(dir_ / "ent" / "density_matrix.json");
  EXPECT_EQ(rho.mode_dims(), (std::vector<std::size_t>{12, 12}));
}

TEST_F(CliTest, ValidateOraclePreset) {
  RunOptions o;
  o.out_dir = dir_;
  auto c = load_config(preset_path("validate-oracle"));
  c.oracle_cases = 10;
  const auto s = run(c, o);
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_TRUE(s.manifest["results"]["passed"].get<bool>());
}

TEST_F(CliTest, PaperLiteralFlagRecorded) {
  const auto s = run_preset("fig3", "lit", FactorMode::kPaperLiteral);
  EXPECT_EQ(s.manifest["parameters"]["factor_mode"], "paper-literal");
}

// End-to-end through the executable.

int shell(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST_F(CliTest, BinaryRunsPresetAndReportsErrors) {
  const std::string exe = PHOTON_FILTER_CLI;
  EXPECT_EQ(shell(exe + " --preset fig7-right --format json --out " + (dir_ / "bin").string() +
                  " > " + (dir_ / "stdout.txt").string()),
            0);
  EXPECT_TRUE(fs::exists(dir_ / "bin" / "distribution.json"));
  const auto m = io::read_json(dir_ / "bin" / "manifest.json");
  EXPECT_NEAR(m["results"]["p_on"].get<double>(), 0.106, 0.02);

  std::ofstream(dir_ / "bad.json") << R"({"mode": "sweep", "signal": {"type": "fock", "n": 0},
      "n_trunc": 4, "sweep": {"parameter": "bogus", "values": [1]}})";
  const int code = shell(exe + " --config " + (dir_ / "bad.json").string() + " --out " +
                         (dir_ / "x").string() + " 2> " + (dir_ / "err.json").string());
  EXPECT_EQ(code, static_cast<int>(ErrorCode::kConfig));
  const auto err = io::read_json(dir_ / "err.json");
  EXPECT_EQ(err["error"]["code"], "config");

  EXPECT_EQ(shell(exe + " --preset fig3 --format xml --out " + (dir_ / "z").string() + " 2> " +
                  (dir_ / "flag.json").string()),
            static_cast<int>(ErrorCode::kConfig));
  EXPECT_EQ(io::read_json(dir_ / "flag.json")["error"]["code"], "config");

  EXPECT_NE(shell(exe + " --preset no-such-preset --out " + (dir_ / "y").string() + " 2>/dev/null"), 0);
}

}  // namespace
}  // namespace photon_filter::cli
