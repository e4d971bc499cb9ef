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

#pragma once

// Experiment runner behind the photon_filter CLI: parses a JSON run
// configuration, dispatches on the mode and writes the data files plus a
// manifest into the output directory.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "photon_filter/cavity.hpp"
#include "photon_filter/error.hpp"
#include "photon_filter/filter.hpp"
#include "photon_filter/fock.hpp"
#include "photon_filter/io.hpp"
#include "photon_filter/oracle.hpp"
#include "photon_filter/parallel.hpp"
#include "photon_filter/tomography.hpp"
#include "photon_filter/version.hpp"

namespace photon_filter::cli {

using io::json;

inline constexpr int kSchemaVersion = 1;

enum class Mode { kPrepareFock, kPrepareSuperposition, kEntangle, kScanPon, kSweep, kValidateOracle };

inline Mode parse_mode(const std::string& s) {
  if (s == "prepare-fock") return Mode::kPrepareFock;
  if (s == "prepare-superposition") return Mode::kPrepareSuperposition;
  if (s == "entangle") return Mode::kEntangle;
  if (s == "scan-pon") return Mode::kScanPon;
  if (s == "sweep") return Mode::kSweep;
  if (s == "validate-oracle") return Mode::kValidateOracle;
  throw Error(ErrorCode::kConfig, "unknown mode '" + s + "'");
}

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::kPrepareFock: return "prepare-fock";
    case Mode::kPrepareSuperposition: return "prepare-superposition";
    case Mode::kEntangle: return "entangle";
    case Mode::kScanPon: return "scan-pon";
    case Mode::kSweep: return "sweep";
    case Mode::kValidateOracle: return "validate-oracle";
  }
  return "unknown";
}

struct SignalSpec {
  enum class Kind { kCoherent, kFock, kMatrix } kind = Kind::kCoherent;
  std::optional<Complex> beta;  ///< unset for a designed superposition input
  std::size_t fock_n = 0;
  std::filesystem::path matrix_path;
};

struct SweepSpec {
  std::string parameter;
  std::vector<double> values;
};

struct SigmaGridSpec {
  std::size_t points = 0;
  double min_pi = -2.0;
  double max_pi = 2.0;
};

struct RunConfig {
  Mode mode = Mode::kPrepareFock;
  CavityParams cavity;
  Complex alpha{0.0, 0.0};
  SignalSpec signal;
  std::optional<SignalSpec> signal2;
  std::size_t n_trunc = 0;
  std::uint64_t seed = 0;
  std::optional<SuperpositionSpec> superposition;
  std::optional<std::size_t> target_fock;
  std::size_t scan_n_max = 0;
  std::int64_t scan_shots = kDefaultShots;
  std::optional<SweepSpec> sweep;
  std::size_t oracle_cases = 100;
  std::optional<SigmaGridSpec> sigma_grid;
  std::string preset;  ///< name the config was loaded from, if any
};

struct RunOptions {
  std::filesystem::path out_dir = "out";
  std::optional<std::uint64_t> seed;
  bool json_tables = false;
  FactorMode factor_mode = FactorMode::kExact;
};

struct RunSummary {
  int exit_code = 0;
  json manifest;
  std::vector<std::filesystem::path> files;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline Complex parse_complex(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorCode::kConfig, std::string(what) + " must be a number or [re, im]");
}

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline SignalSpec parse_signal(const json& j, const std::filesystem::path& base_dir) {
  SignalSpec s;
  const auto type = j.at("type").get<std::string>();
  if (type == "coherent") {
    s.kind = SignalSpec::Kind::kCoherent;
    if (j.contains("beta")) s.beta = parse_complex(j.at("beta"), "signal.beta");
  } else if (type == "fock") {
    s.kind = SignalSpec::Kind::kFock;
    s.fock_n = j.at("n").get<std::size_t>();
  } else if (type == "matrix") {
    s.kind = SignalSpec::Kind::kMatrix;
    std::filesystem::path p = j.at("path").get<std::string>();
    s.matrix_path = p.is_absolute() ? p : base_dir / p;
    if (!std::filesystem::exists(s.matrix_path)) {
      throw Error(ErrorCode::kConfig, "signal matrix file not found: " + s.matrix_path.string());
    }
  } else {
    throw Error(ErrorCode::kConfig, "unknown signal type '" + type + "'");
  }
  return s;
}

inline std::vector<double> sweep_values(const json& j) {
  if (j.contains("values")) return j.at("values").get<std::vector<double>>();
  const double lo = j.at("min").get<double>();
  const double hi = j.at("max").get<double>();
  const auto steps = j.at("steps").get<std::size_t>();
  const bool log_scale = j.value("scale", std::string("linear")) == "log";
  if (log_scale && !(lo > 0.0 && hi > 0.0)) {
    throw Error(ErrorCode::kConfig, "log sweeps need positive bounds");
  }
  std::vector<double> v;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
    v.push_back(log_scale ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                          : lo + t * (hi - lo));
  }
  return v;
}

inline bool valid_sweep_parameter(const std::string& p) {
  return p == "tau" || p == "eta" || p == "alpha_abs" || p == "psi" || p == "chi_t";
}

}  // namespace detail

inline RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir = ".") {
  try {
    const int version = doc.value("schema_version", kSchemaVersion);
    if (version != kSchemaVersion) {
      throw Error(ErrorCode::kConfig, "unsupported schema_version " + std::to_string(version));
    }
    RunConfig c;
    c.mode = parse_mode(doc.at("mode").get<std::string>());
    c.seed = doc.value("seed", std::uint64_t{0});
    c.preset = doc.value("preset", std::string{});

    if (doc.contains("superposition")) {
      const auto& s = doc.at("superposition");
      SuperpositionSpec spec;
      spec.n_star = s.at("n_star").get<std::size_t>();
      spec.l_star = s.at("l_star").get<std::size_t>();
      spec.phase = s.value("phase", 0.0);
      if (spec.l_star == 0) throw Error(ErrorCode::kConfig, "superposition.l_star must be >= 1");
      c.superposition = spec;
    }

    const json cavity = doc.value("cavity", json::object());
    c.cavity.tau = cavity.value("tau", c.cavity.tau);
    c.cavity.eta = cavity.value("eta", c.cavity.eta);
    c.cavity.n_kerr = cavity.value("n_kerr", c.mode == Mode::kEntangle ? 2 : 1);
    if (c.superposition) {
      // chi_t and psi follow from the requested comb unless given explicitly.
      const double chi = 2.0 * std::numbers::pi / static_cast<double>(c.superposition->l_star);
      c.cavity.chi_t = cavity.value("chi_t", chi);
      c.cavity.psi = cavity.value("psi", c.cavity.chi_t * static_cast<double>(c.superposition->n_star));
    } else {
      c.cavity.chi_t = cavity.value("chi_t", c.cavity.chi_t);
      c.cavity.psi = cavity.value("psi", c.cavity.psi);
    }
    c.cavity.validate();

    if (doc.contains("alpha")) c.alpha = detail::parse_complex(doc.at("alpha"), "alpha");
    require_finite(c.alpha, "alpha");

    if (c.mode != Mode::kValidateOracle) {
      c.signal = detail::parse_signal(doc.at("signal"), base_dir);
      if (c.signal.kind == SignalSpec::Kind::kCoherent && !c.signal.beta) {
        if (!c.superposition) {
          throw Error(ErrorCode::kConfig,
                      "coherent signal needs beta unless a superposition is designed");
        }
        c.signal.beta = design_superposition(*c.superposition);
      }
    }
    if (doc.contains("signal2")) {
      c.signal2 = detail::parse_signal(doc.at("signal2"), base_dir);
      if (c.signal2->kind == SignalSpec::Kind::kCoherent && !c.signal2->beta) {
        throw Error(ErrorCode::kConfig, "signal2 coherent input needs beta");
      }
    }
    if (c.mode == Mode::kEntangle && !c.signal2) {
      throw Error(ErrorCode::kConfig, "entangle mode needs signal2");
    }

    c.n_trunc = doc.value("n_trunc", std::size_t{0});
    if (c.mode != Mode::kValidateOracle && c.signal.kind != SignalSpec::Kind::kMatrix &&
        c.n_trunc < 2) {
      throw Error(ErrorCode::kConfig, "n_trunc must be >= 2");
    }

    if (doc.contains("target")) c.target_fock = doc.at("target").at("fock").get<std::size_t>();

    if (doc.contains("scan")) {
      c.scan_n_max = doc.at("scan").at("n_max").get<std::size_t>();
      c.scan_shots = doc.at("scan").value("shots", kDefaultShots);
    } else if (c.mode == Mode::kScanPon) {
      throw Error(ErrorCode::kConfig, "scan-pon mode needs a scan block");
    }

    if (doc.contains("sweep")) {
      SweepSpec sw;
      sw.parameter = doc.at("sweep").at("parameter").get<std::string>();
      if (!detail::valid_sweep_parameter(sw.parameter)) {
        throw Error(ErrorCode::kConfig, "invalid sweep axis '" + sw.parameter +
                                            "' (expected tau, eta, alpha_abs, psi or chi_t)");
      }
      sw.values = detail::sweep_values(doc.at("sweep"));
      c.sweep = std::move(sw);
    } else if (c.mode == Mode::kSweep) {
      throw Error(ErrorCode::kConfig, "sweep mode needs a sweep block");
    }

    if (doc.contains("oracle")) c.oracle_cases = doc.at("oracle").value("cases", c.oracle_cases);

    if (doc.contains("sigma_grid")) {
      SigmaGridSpec g;
      g.points = doc.at("sigma_grid").value("points", std::size_t{81});
      g.min_pi = doc.at("sigma_grid").value("min_pi", g.min_pi);
      g.max_pi = doc.at("sigma_grid").value("max_pi", g.max_pi);
      c.sigma_grid = g;
    }
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("config: ") + e.what());
  }
}

inline RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(io::read_json(path), path.parent_path());
}

// ---------------------------------------------------------------------------
// Running

namespace detail {

inline DensityMatrix build_signal(const SignalSpec& s, std::size_t n_trunc) {
  switch (s.kind) {
    case SignalSpec::Kind::kCoherent: return coherent_density(*s.beta, n_trunc);
    case SignalSpec::Kind::kFock: return DensityMatrix::fock(s.fock_n, n_trunc);
    case SignalSpec::Kind::kMatrix: {
      auto rho = io::read_density(s.matrix_path);
      if (rho.is_two_mode()) {
        throw Error(ErrorCode::kConfig, "signal matrix must be single-mode");
      }
      return rho;
    }
  }
  throw Error(ErrorCode::kConfig, "unreachable signal kind");
}

inline json signal_json(const SignalSpec& s) {
  switch (s.kind) {
    case SignalSpec::Kind::kCoherent:
      return {{"type", "coherent"}, {"beta", complex_json(*s.beta)}};
    case SignalSpec::Kind::kFock: return {{"type", "fock"}, {"n", s.fock_n}};
    case SignalSpec::Kind::kMatrix:
      return {{"type", "matrix"}, {"path", s.matrix_path.generic_string()}};
  }
  return {};
}

inline json cavity_json(const CavityParams& p) {
  const CombParams c = comb(p);
  return {{"tau", p.tau},       {"chi_t", p.chi_t},     {"psi", p.psi},
          {"eta", p.eta},       {"n_kerr", p.n_kerr},   {"l_star", c.l_star},
          {"n_star", c.n_star}};
}

/// Pure state the run is trying to make, for fidelity reporting.
inline std::optional<FockVector> single_mode_target(const RunConfig& c, const CavityParams& p,
                                                    std::size_t n_trunc) {
  if (c.target_fock) {
    if (*c.target_fock >= n_trunc) return std::nullopt;
    return FockVector::basis(*c.target_fock, n_trunc);
  }
  if (c.superposition) {
    if (c.superposition->n_star + c.superposition->l_star >= n_trunc) return std::nullopt;
    return superposition_target(*c.superposition, n_trunc);
  }
  const CombParams comb_params = comb(p);
  const double n = std::round(comb_params.n_star);
  if (n < 0.0 || n >= static_cast<double>(n_trunc)) return std::nullopt;
  return FockVector::basis(static_cast<std::size_t>(n), n_trunc);
}

class Writer {
 public:
  Writer(std::filesystem::path dir, bool json_tables)
      : dir_(std::move(dir)), json_tables_(json_tables) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir_.string() + ": " + ec.message());
  }

  void table(const std::string& stem, const io::Table& t) {
    if (json_tables_) {
      write(stem + ".json", t.to_json().dump(1) + "\n");
    } else {
      write(stem + ".csv", t.to_csv());
    }
  }

  void density(const std::string& name, const DensityMatrix& rho) {
    write(name, io::density_to_json(rho).dump() + "\n");
  }

  void write(const std::string& name, const std::string& content) {
    io::atomic_write(dir_ / name, content);
    files_.push_back(dir_ / name);
  }

  const std::vector<std::filesystem::path>& files() const { return files_; }

 private:
  std::filesystem::path dir_;
  bool json_tables_;
  std::vector<std::filesystem::path> files_;
};

inline json warnings_json(const std::vector<std::string>& w) {
  json out = json::array();
  for (const auto& s : w) out.push_back(s);
  return out;
}

inline void write_sigma_grid(Writer& w, const SigmaGridSpec& g, double tau) {
  io::Table t{{"phi_s_over_pi", "phi_sp_over_pi", "abs_sigma_product"}, {}};
  const auto at = [&](std::size_t i) {
    return g.points == 1 ? g.min_pi
                         : g.min_pi + (g.max_pi - g.min_pi) * static_cast<double>(i) /
                                          static_cast<double>(g.points - 1);
  };
  for (std::size_t i = 0; i < g.points; ++i) {
    for (std::size_t j = 0; j < g.points; ++j) {
      const double a = at(i), b = at(j);
      const double v = std::abs(sigma(a * std::numbers::pi, tau) *
                                std::conj(sigma(b * std::numbers::pi, tau)));
      t.rows.push_back({a, b, v});
    }
  }
  w.table("sigma_grid", t);
}

inline json run_single_mode(const RunConfig& c, const RunOptions& o, Writer& w) {
  const DensityMatrix nu = build_signal(c.signal, c.n_trunc);
  const FilterInput input{nu, c.alpha, c.cavity, nu.dimension()};
  const auto result = conditional_output(input, o.factor_mode);
  const auto dist = photon_number_distribution(result.rho_out);

  io::Table t{{"n", "probability"}, {}};
  std::size_t argmax = 0;
  for (std::size_t n = 0; n < dist.size(); ++n) {
    t.rows.push_back({static_cast<double>(n), dist[n]});
    if (dist[n] > dist[argmax]) argmax = n;
  }
  w.table("distribution", t);
  w.density("density_matrix.json", result.rho_out);

  json r = {{"p_on", result.p_on},
            {"p_on_closed_form", success_probability(input)},
            {"purity", purity(result.rho_out)},
            {"argmax_n", argmax},
            {"warnings", warnings_json(result.warnings)}};
  if (const auto target = single_mode_target(c, c.cavity, nu.dimension())) {
    r["fidelity"] = fidelity_with_pure(result.rho_out, *target);
  }
  if (c.superposition) {
    r["designed_beta"] = complex_json(design_superposition(*c.superposition));
  }
  return r;
}

inline json run_entangle(const RunConfig& c, const RunOptions& o, Writer& w) {
  const DensityMatrix nu1 = build_signal(c.signal, c.n_trunc);
  const DensityMatrix nu2 = build_signal(*c.signal2, c.n_trunc);
  const auto result = two_mode_conditional_output(nu1, nu2, c.alpha, c.cavity, o.factor_mode);
  const std::size_t d1 = nu1.dimension(), d2 = nu2.dimension();

  io::Table t{{"n1", "n2", "probability"}, {}};
  for (std::size_t a = 0; a < d1; ++a) {
    for (std::size_t b = 0; b < d2; ++b) {
      const double p = std::max(result.rho_out(a * d2 + b, a * d2 + b).real(), 0.0);
      t.rows.push_back({static_cast<double>(a), static_cast<double>(b), p});
    }
  }
  w.table("distribution", t);
  w.density("density_matrix.json", result.rho_out);

  json r = {{"p_on", result.p_on},
            {"purity", purity(result.rho_out)},
            {"marginal_purity", json::array({purity(partial_trace(result.rho_out, 0)),
                                             purity(partial_trace(result.rho_out, 1))})},
            {"warnings", warnings_json(result.warnings)}};
  // Fidelity with the ideal pure output is defined for pure coherent or Fock signals.
  const auto pure = [&](const SignalSpec& s, std::size_t n) -> std::optional<FockVector> {
    if (s.kind == SignalSpec::Kind::kCoherent) return coherent_fock_vector(*s.beta, n);
    if (s.kind == SignalSpec::Kind::kFock) return FockVector::basis(s.fock_n, n);
    return std::nullopt;
  };
  const CombParams comb_params = comb(c.cavity);
  const auto p1 = pure(c.signal, d1), p2 = pure(*c.signal2, d2);
  if (p1 && p2 && comb_is_integer(comb_params) && comb_params.n_star >= 0.0) {
    try {
      const auto ideal = ideal_entangled_state(
          *p1, *p2, static_cast<std::size_t>(std::llround(comb_params.n_star)));
      r["fidelity"] = fidelity_with_pure(result.rho_out, ideal);
    } catch (const Error&) {
      // No weight at n*: leave fidelity out.
    }
  }
  return r;
}

inline json run_scan(const RunConfig& c, Writer& w, std::uint64_t seed) {
  const DensityMatrix nu = build_signal(c.signal, c.n_trunc);
  const auto records = scan_distribution(nu, c.alpha, c.cavity, c.scan_n_max, c.scan_shots, seed);
  io::Table t{{"n_star_target", "psi", "p_on_exact", "clicks", "shots", "nu_exact", "nu_estimate"},
              {}};
  for (const auto& r : records) {
    t.rows.push_back({static_cast<double>(r.n_star_target), r.psi_used, r.p_on_exact,
                      static_cast<double>(r.clicks), static_cast<double>(r.shots), r.nu_exact,
                      r.nu_estimate});
  }
  w.table("scan", t);
  return {{"points", records.size()}, {"shots", c.scan_shots}};
}

inline json run_sweep(const RunConfig& c, const RunOptions& o, Writer& w) {
  const DensityMatrix nu = build_signal(c.signal, c.n_trunc);
  const auto& sw = *c.sweep;
  std::vector<std::vector<double>> rows(sw.values.size());
  parallel_for(sw.values.size(), [&](std::size_t i) {
    const double v = sw.values[i];
    CavityParams p = c.cavity;
    Complex alpha = c.alpha;
    if (sw.parameter == "tau") p.tau = v;
    else if (sw.parameter == "eta") p.eta = v;
    else if (sw.parameter == "psi") p.psi = v;
    else if (sw.parameter == "chi_t") p.chi_t = v;
    else alpha = std::abs(c.alpha) > 0.0 ? c.alpha / std::abs(c.alpha) * v : Complex{v, 0.0};
    const FilterInput input{nu, alpha, p, nu.dimension()};
    const double nan = std::nan("");
    try {
      const auto res = conditional_output(input, o.factor_mode);
      const auto target = single_mode_target(c, p, nu.dimension());
      rows[i] = {v, res.p_on, target ? fidelity_with_pure(res.rho_out, *target) : nan,
                 purity(res.rho_out)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNeverClicks) throw;
      rows[i] = {v, success_probability(input), nan, nan};
    }
  });
  w.table("sweep", io::Table{{sw.parameter, "p_on", "fidelity", "purity"}, std::move(rows)});
  return {{"parameter", sw.parameter}, {"steps", sw.values.size()}};
}

inline constexpr double kOracleRhoTol = 1e-8;
inline constexpr double kOraclePonTol = 1e-10;

inline std::pair<json, bool> run_validate(const RunConfig& c, Writer& w, std::uint64_t seed) {
  const auto cases = run_oracle_campaign(c.oracle_cases, seed);
  io::Table t{{"seed", "alpha_abs", "tau", "chi_t", "psi", "eta", "n_trunc", "b_trunc",
               "engine_vs_overlap", "engine_vs_tensor", "overlap_vs_tensor", "p_on_deviation"},
              {}};
  double worst_rho = 0.0, worst_p = 0.0;
  for (const auto& k : cases) {
    t.rows.push_back({static_cast<double>(k.seed), k.alpha_abs, k.tau, k.chi_t, k.psi, k.eta,
                      static_cast<double>(k.n_trunc), static_cast<double>(k.b_trunc),
                      k.engine_vs_overlap, k.engine_vs_tensor, k.overlap_vs_tensor,
                      k.p_on_max_deviation});
    worst_rho = std::max({worst_rho, k.engine_vs_overlap, k.engine_vs_tensor, k.overlap_vs_tensor});
    worst_p = std::max(worst_p, k.p_on_max_deviation);
  }
  w.table("oracle", t);
  const bool ok = worst_rho <= kOracleRhoTol && worst_p <= kOraclePonTol;
  return {{{"cases", cases.size()},
           {"max_rho_deviation", worst_rho},
           {"max_p_on_deviation", worst_p},
           {"rho_tolerance", kOracleRhoTol},
           {"p_on_tolerance", kOraclePonTol},
           {"passed", ok}},
          ok};
}

}  // namespace detail

/// Runs one configuration, writing all artifacts under options.out_dir.
/// Throws photon_filter::Error on failure.
inline RunSummary run(const RunConfig& config, const RunOptions& options) {
  const std::uint64_t seed = options.seed.value_or(config.seed);
  detail::Writer writer(options.out_dir, options.json_tables);
  RunSummary summary;

  json results;
  switch (config.mode) {
    case Mode::kPrepareFock:
    case Mode::kPrepareSuperposition:
      results = detail::run_single_mode(config, options, writer);
      break;
    case Mode::kEntangle: results = detail::run_entangle(config, options, writer); break;
    case Mode::kScanPon: results = detail::run_scan(config, writer, seed); break;
    case Mode::kSweep: results = detail::run_sweep(config, options, writer); break;
    case Mode::kValidateOracle: {
      auto [r, ok] = detail::run_validate(config, writer, seed);
      results = std::move(r);
      if (!ok) summary.exit_code = static_cast<int>(ErrorCode::kValidationFailed);
      break;
    }
  }
  if (config.sigma_grid) detail::write_sigma_grid(writer, *config.sigma_grid, config.cavity.tau);

  json params = {{"mode", to_string(config.mode)},
                 {"cavity", detail::cavity_json(config.cavity)},
                 {"alpha", detail::complex_json(config.alpha)},
                 {"n_trunc", config.n_trunc},
                 {"seed", seed},
                 {"factor_mode", options.factor_mode == FactorMode::kExact ? "exact" : "paper-literal"}};
  if (config.mode != Mode::kValidateOracle) params["signal"] = detail::signal_json(config.signal);
  if (config.signal2) params["signal2"] = detail::signal_json(*config.signal2);
  if (config.superposition) {
    params["superposition"] = {{"n_star", config.superposition->n_star},
                               {"l_star", config.superposition->l_star},
                               {"phase", config.superposition->phase}};
  }
  if (!config.preset.empty()) params["preset"] = config.preset;

  json files = json::array();
  for (const auto& f : writer.files()) files.push_back(f.filename().generic_string());
  files.push_back("manifest.json");

  summary.manifest = {{"schema_version", kSchemaVersion},
                      {"library_version", kVersion},
                      {"parameters", std::move(params)},
                      {"results", std::move(results)},
                      {"files", std::move(files)}};
  writer.write("manifest.json", summary.manifest.dump(2) + "\n");
  summary.files = writer.files();
  return summary;
}

/// Machine-readable error document printed on failure.
inline json error_json(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))},
                     {"exit_status", static_cast<int>(e.code())},
                     {"message", e.what()}}}};
}

}  // namespace photon_filter::cli
