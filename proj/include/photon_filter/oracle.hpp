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

// Independent references for the filtering engine.
//
// tensor_oracle expands every coherent label into a truncated Fock vector and
// contracts the b1 and b2 indices explicitly, applying the ON element of the
// detector POM term by term. overlap_oracle keeps the closed-form coherent
// overlaps but evaluates the detector through Pi_OFF, a different grouping
// from the engine. Neither calls into filter.hpp.

#include <algorithm>
#include <cmath>
#include <complex>
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

struct OracleReport {
  double max_abs_deviation = 0.0;
  double p_on_deviation = 0.0;
  std::vector<std::size_t> dims_used;
};

namespace detail {

struct CoherentLabels {
  std::vector<Complex> reflected;    // alpha kappa(phi_s), mode b1
  std::vector<Complex> transmitted;  // alpha e^{i phi_s} sigma(phi_s), mode b2
};

inline CoherentLabels coherent_labels(const FilterInput& input) {
  CoherentLabels labels;
  for (std::size_t s = 0; s < input.n_trunc; ++s) {
    const double phi = -input.params.chi_t * static_cast<double>(s) + input.params.psi;
    labels.reflected.push_back(input.alpha * kappa(phi, input.params.tau));
    labels.transmitted.push_back(input.alpha * std::exp(Complex{0.0, phi}) *
                                 sigma(phi, input.params.tau));
  }
  return labels;
}

inline void require_single_kerr(const FilterInput& input) {
  input.validate();
  if (input.params.n_kerr != 1) {
    throw Error(ErrorCode::kInvalidArgument, "oracles model a single Kerr crystal");
  }
}

inline ConditionalResult finish(Matrix unnormalized, const FilterInput& input) {
  const double p_on = unnormalized.trace().real();
  if (input.params.eta == 0.0 || !(p_on >= 1e-300)) {
    throw Error(ErrorCode::kNeverClicks, "ON probability is zero");
  }
  return {DensityMatrix::normalized(std::move(unnormalized), {input.n_trunc}), p_on,
          p_on, {}};
}

}  // namespace detail

/// Unnormalized Tr_{b1,b2}[Pi_ON rho_bd] by explicit Fock-space contraction.
/// Its trace is P_ON.
inline Matrix tensor_oracle_unnormalized(const FilterInput& input,
                                         std::size_t b_trunc) {
  detail::require_single_kerr(input);
  const auto labels = detail::coherent_labels(input);
  const std::size_t n = input.n_trunc;

  std::vector<FockVector> b1, b2;
  for (std::size_t s = 0; s < n; ++s) {
    b1.push_back(coherent_fock_vector(labels.reflected[s], b_trunc));
    b2.push_back(coherent_fock_vector(labels.transmitted[s], b_trunc));
    const double lost = std::max(1.0 - b1.back().squared_norm(),
                                 1.0 - b2.back().squared_norm());
    if (lost > 1e-10) {
      throw Error(ErrorCode::kTruncationTooSmall,
                  "b_trunc = " + std::to_string(b_trunc) +
                      " drops coherent norm " + std::to_string(lost));
    }
  }

  // Pi_ON = sum_k (1 - (1 - eta)^k) |k><k|
  std::vector<double> on_weight(b_trunc);
  for (std::size_t k = 0; k < b_trunc; ++k) {
    on_weight[k] = 1.0 - std::pow(1.0 - input.params.eta, static_cast<double>(k));
  }

  const auto dim = static_cast<Eigen::Index>(n);
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t sp = 0; sp < n; ++sp) {
      Complex trace_b1{0.0, 0.0};
      for (std::size_t j = 0; j < b_trunc; ++j) {
        trace_b1 += b1[s][j] * std::conj(b1[sp][j]);
      }
      Complex trace_b2{0.0, 0.0};
      for (std::size_t k = 0; k < b_trunc; ++k) {
        trace_b2 += on_weight[k] * b2[s][k] * std::conj(b2[sp][k]);
      }
      out(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(sp)) =
          input.nu(s, sp) * trace_b1 * trace_b2;
    }
  }
  return out;
}

inline ConditionalResult tensor_oracle(const FilterInput& input,
                                       std::size_t b_trunc) {
  return detail::finish(tensor_oracle_unnormalized(input, b_trunc), input);
}

/// Tr[Pi_OFF |gamma><gamma'|] = exp(-(|gamma|^2 + |gamma'|^2)/2 + (1-eta) conj(gamma') gamma).
inline Complex off_trace(Complex gamma, Complex gamma_prime, double eta) {
  const Complex exponent = -0.5 * (std::norm(gamma) + std::norm(gamma_prime)) +
                           (1.0 - eta) * std::conj(gamma_prime) * gamma;
  return std::exp(exponent);
}

inline ConditionalResult overlap_oracle(const FilterInput& input) {
  detail::require_single_kerr(input);
  const auto labels = detail::coherent_labels(input);
  const auto dim = static_cast<Eigen::Index>(input.n_trunc);
  Matrix out = Matrix::Zero(dim, dim);
  for (std::size_t s = 0; s < input.n_trunc; ++s) {
    for (std::size_t sp = 0; sp < input.n_trunc; ++sp) {
      const Complex& g = labels.transmitted[s];
      const Complex& gp = labels.transmitted[sp];
      const Complex on = coherent_overlap(g, gp) - off_trace(g, gp, input.params.eta);
      const Complex b1 = coherent_overlap(labels.reflected[s], labels.reflected[sp]);
      out(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(sp)) =
          input.nu(s, sp) * b1 * on;
    }
  }
  return detail::finish(std::move(out), input);
}

inline OracleReport compare(const ConditionalResult& engine,
                            const ConditionalResult& reference) {
  if (engine.rho_out.mode_dims() != reference.rho_out.mode_dims()) {
    throw Error(ErrorCode::kDimensionMismatch, "compared states differ in shape");
  }
  OracleReport report;
  report.max_abs_deviation =
      (engine.rho_out.entries() - reference.rho_out.entries()).cwiseAbs().maxCoeff();
  report.p_on_deviation = std::abs(engine.p_on - reference.p_on);
  report.dims_used = engine.rho_out.mode_dims();
  return report;
}

// ---------------------------------------------------------------------------
// Randomized three-way campaign.

struct CampaignCase {
  std::uint64_t seed = 0;
  double alpha_abs = 0.0;
  double tau = 0.0;
  double chi_t = 0.0;
  double psi = 0.0;
  double eta = 0.0;
  std::size_t n_trunc = 0;
  std::size_t b_trunc = 0;
  double engine_vs_overlap = 0.0;     // max |d rho|
  double engine_vs_tensor = 0.0;      // max |d rho|
  double overlap_vs_tensor = 0.0;     // max |d rho|
  double p_on_max_deviation = 0.0;    // over all three pairs
};

/// Random signal state of dimension d: Ginibre matrix of random rank,
/// G G^dagger / tr.
inline DensityMatrix random_density_matrix(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> rank_dist(1, d);
  const auto rank = static_cast<Eigen::Index>(rank_dist(rng));
  const auto n = static_cast<Eigen::Index>(d);
  Matrix g(n, rank);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < rank; ++j) g(i, j) = Complex{gauss(rng), gauss(rng)};
  Matrix m = g * g.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix::normalized(std::move(m), {d});
}

inline CampaignCase run_campaign_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CampaignCase c;
  c.seed = seed;
  c.alpha_abs = 0.5 + 2.5 * unit(rng);
  const double alpha_arg = 2.0 * std::numbers::pi * unit(rng);
  c.tau = 0.02 + 0.48 * unit(rng);
  c.chi_t = 0.05 + 1.95 * unit(rng);
  c.psi = std::numbers::pi * (2.0 * unit(rng) - 1.0);
  c.eta = 0.05 + 0.95 * unit(rng);
  c.n_trunc = 2 + static_cast<std::size_t>(unit(rng) * 11.0);  // 2..12
  const Complex alpha = std::polar(c.alpha_abs, alpha_arg);
  c.b_trunc = suggest_truncation(alpha);

  FilterInput input{random_density_matrix(c.n_trunc, rng), alpha,
                    CavityParams{c.tau, c.chi_t, c.psi, c.eta, 1}, c.n_trunc};
  const auto engine = conditional_output(input);
  const auto overlap = overlap_oracle(input);
  const auto tensor = tensor_oracle(input, c.b_trunc);
  const auto eo = compare(engine, overlap);
  const auto et = compare(engine, tensor);
  const auto ot = compare(overlap, tensor);
  c.engine_vs_overlap = eo.max_abs_deviation;
  c.engine_vs_tensor = et.max_abs_deviation;
  c.overlap_vs_tensor = ot.max_abs_deviation;
  c.p_on_max_deviation =
      std::max({eo.p_on_deviation, et.p_on_deviation, ot.p_on_deviation});
  return c;
}

/// Case i uses seed base_seed + i, so results do not depend on scheduling.
inline std::vector<CampaignCase> run_oracle_campaign(std::size_t cases,
                                                     std::uint64_t base_seed) {
  std::vector<CampaignCase> out(cases);
  parallel_for(cases, [&](std::size_t i) { out[i] = run_campaign_case(base_seed + i); });
  return out;
}

}  // namespace photon_filter
