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

// Photon-number tomography: tune psi so that the single transmission peak
// sits on n, record how often the detector clicks, and read the click rate
// as nu_nn after dividing out the on-peak click efficiency 1 - e^{-eta|alpha|^2}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "photon_filter/cavity.hpp"
#include "photon_filter/error.hpp"
#include "photon_filter/filter.hpp"
#include "photon_filter/fock.hpp"
#include "photon_filter/parallel.hpp"

namespace photon_filter {

inline constexpr std::int64_t kDefaultShots = 100000;

struct ScanRecord {
  std::size_t n_star_target = 0;
  double psi_used = 0.0;
  double p_on_exact = 0.0;
  std::int64_t clicks = 0;
  std::int64_t shots = 0;
  double nu_exact = 0.0;     ///< estimate from the exact click probability
  double nu_estimate = 0.0;  ///< estimate from sampled clicks (exact if shots == 0)
};

/// Binomial(shots, p_on) draw; deterministic for a given seed.
inline std::int64_t sample_clicks(double p_on, std::int64_t shots, std::uint64_t seed) {
  if (!std::isfinite(p_on) || p_on < 0.0 || p_on > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "p_on must lie in [0, 1]");
  }
  if (shots < 0) {
    throw Error(ErrorCode::kInvalidArgument, "shots must be non-negative");
  }
  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::int64_t> draw(shots, p_on);
  return draw(rng);
}

/// splitmix64 finalizer; gives each scan point its own stream.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::vector<ScanRecord> scan_distribution(const DensityMatrix& nu, Complex alpha,
                                                 const CavityParams& params_base,
                                                 std::size_t n_max,
                                                 std::int64_t shots = 0,
                                                 std::uint64_t seed = 0) {
  params_base.validate();
  require_finite(alpha, "pump amplitude");
  if (params_base.n_kerr != 1) {
    throw Error(ErrorCode::kInvalidArgument, "scans use a single Kerr crystal");
  }
  const double l_star = 2.0 * std::numbers::pi / params_base.chi_t;
  if (!(l_star > static_cast<double>(n_max))) {
    throw Error(ErrorCode::kCombAliasing,
                "peak spacing l* = " + std::to_string(l_star) +
                    " does not exceed n_max = " + std::to_string(n_max));
  }
  const double on_peak = -std::expm1(-params_base.eta * std::norm(alpha));
  if (!(on_peak > 0.0)) {
    throw Error(ErrorCode::kNeverClicks, "detector cannot click on the comb peak");
  }

  std::vector<ScanRecord> records(n_max + 1);
  parallel_for(records.size(), [&](std::size_t n) {
    CavityParams params = params_base;
    params.psi = params.chi_t * static_cast<double>(n);
    const FilterInput input{nu, alpha, params, nu.dimension()};
    ScanRecord& r = records[n];
    r.n_star_target = n;
    r.psi_used = params.psi;
    r.p_on_exact = std::clamp(success_probability(input), 0.0, 1.0);
    r.nu_exact = std::clamp(r.p_on_exact / on_peak, 0.0, 1.0);
    r.shots = shots;
    if (shots > 0) {
      r.clicks = sample_clicks(r.p_on_exact, shots, derive_seed(seed, n));
      r.nu_estimate = std::clamp(
          static_cast<double>(r.clicks) / static_cast<double>(shots) / on_peak, 0.0, 1.0);
    } else {
      r.nu_estimate = r.nu_exact;
    }
  });
  return records;
}

}  // namespace photon_filter
