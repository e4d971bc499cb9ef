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

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "photon_filter/cli/run.hpp"

namespace {

namespace fs = std::filesystem;
using photon_filter::Error;
using photon_filter::ErrorCode;

fs::path find_preset(const std::string& name) {
  if (fs::path direct(name); direct.has_extension() && fs::exists(direct)) return direct;
  std::vector<fs::path> dirs;
  if (const char* env = std::getenv("PHOTON_FILTER_PRESET_DIR")) dirs.emplace_back(env);
#ifdef PHOTON_FILTER_PRESET_DIR
  dirs.emplace_back(PHOTON_FILTER_PRESET_DIR);
#endif
  for (const auto& d : dirs) {
    const auto candidate = d / (name + ".json");
    if (fs::exists(candidate)) return candidate;
  }
  throw Error(ErrorCode::kConfig, "unknown preset '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conditional Fock-state synthesis by cavity photon filtering"};
  app.set_version_flag("--version", std::string(photon_filter::kVersion));

  std::string config_path;
  std::string preset;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  bool paper_literal = false;

  auto* config_opt = app.add_option("--config", config_path, "Run configuration (JSON)");
  auto* preset_opt = app.add_option("--preset", preset,
                                    "Named preset: fig2, fig3, fig4-left, fig4-right, "
                                    "fig7-left, fig7-right, ...");
  config_opt->excludes(preset_opt);
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", seed, "Override the configuration seed");
  app.add_option("--format", format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--paper-literal", paper_literal,
               "Drop the phase inside the detector factor (comparison mode)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    std::cerr << photon_filter::cli::error_json(Error(ErrorCode::kConfig, e.what())).dump() << "\n";
    return static_cast<int>(ErrorCode::kConfig);
  }

  try {
    if (config_path.empty() && preset.empty()) {
      throw Error(ErrorCode::kConfig, "one of --config or --preset is required");
    }
    photon_filter::cli::RunConfig config;
    if (!preset.empty()) {
      const auto path = find_preset(preset);
      config = photon_filter::cli::load_config(path);
      if (config.preset.empty()) config.preset = preset;
    } else {
      config = photon_filter::cli::load_config(config_path);
    }
    photon_filter::cli::RunOptions options;
    options.out_dir = out_dir;
    options.seed = seed;
    options.json_tables = format == "json";
    options.factor_mode = paper_literal ? photon_filter::FactorMode::kPaperLiteral
                                        : photon_filter::FactorMode::kExact;
    const auto summary = photon_filter::cli::run(config, options);
    std::cout << summary.manifest.dump(2) << "\n";
    return summary.exit_code;
  } catch (const Error& e) {
    std::cerr << photon_filter::cli::error_json(e).dump() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << photon_filter::cli::error_json(Error(ErrorCode::kInvalidArgument, e.what())).dump()
              << "\n";
    return static_cast<int>(ErrorCode::kInvalidArgument);
  }
}
