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

// Conditional filtering engine. A coherent pump |alpha> enters the cavity,
// the signal state nu sets the round-trip phase photon by photon, output b1
// is discarded and output b2 hits an ON-OFF detector of efficiency eta. On
// an ON click the signal collapses onto the photon numbers the cavity
// transmits.
//
// For each pair of signal photon numbers (s, s') the output picks up
//
//   T(s, s') = <alpha kappa_s' | alpha kappa_s>          (trace over b1)
//   M(s, s') = Tr[Pi_ON |gamma_s><gamma_s'|]             (detector)
//            = <gamma_s'|gamma_s> (1 - exp(-eta conj(gamma_s') gamma_s))
//
// with gamma_s = alpha e^{i phi_s} sigma(phi_s). The b-modes are never
// truncated; everything is carried by closed-form coherent overlaps.

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "photon_filter/cavity.hpp"
#include "photon_filter/error.hpp"
#include "photon_filter/fock.hpp"

namespace photon_filter {

struct FilterInput {
  DensityMatrix nu;  ///< signal state on mode d1
  Complex alpha;     ///< cavity pump amplitude
  CavityParams params;
  std::size_t n_trunc;

  void validate() const {
    if (nu.is_two_mode()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "single-mode filtering needs a single-mode signal");
    }
    if (n_trunc != nu.dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "n_trunc does not match the signal dimension");
    }
    require_finite(alpha, "pump amplitude");
    params.validate();
  }
};

struct ConditionalResult {
  DensityMatrix rho_out;
  double p_on = 0.0;
  double normalizer = 0.0;  ///< trace of the unnormalized conditional state
  std::vector<std::string> warnings;
};

/// kExact evaluates the detector factor with the full coherent labels;
/// kPaperLiteral drops the e^{i(phi_s - phi_s')} phase inside the ON factor,
/// i.e. uses 1 - exp(-eta |alpha|^2 sigma_s conj(sigma_s')).
enum class FactorMode { kExact, kPaperLiteral };

struct SuperpositionSpec {
  std::size_t n_star = 0;
  std::size_t l_star = 1;
  double phase = 0.0;  ///< relative phase Phi of the upper component
};

namespace detail {

/// e^z - 1 without cancellation for small |z|.
inline Complex expm1(Complex z) {
  const double x = z.real(), y = z.imag();
  const double s = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

inline std::vector<std::string> comb_warnings(const CavityParams& params) {
  std::vector<std::string> w;
  const CombParams c = comb(params);
  if (!comb_is_integer(c)) {
    w.push_back("n* = " + std::to_string(c.n_star) +
                " is not an integer; no photon number sits on a transmission peak");
  }
  return w;
}

inline ConditionalResult filter_core(const Matrix& nu,
                                     std::vector<std::size_t> dims,
                                     Complex alpha, const CavityParams& params,
                                     const std::vector<double>& phases,
                                     FactorMode mode) {
  if (params.eta == 0.0) {
    throw Error(ErrorCode::kNeverClicks,
                "eta = 0: the detector never clicks, the conditional state is undefined");
  }
  const auto n = static_cast<Eigen::Index>(phases.size());
  const double pump = std::norm(alpha);

  std::vector<Complex> reflected(phases.size()), transmitted(phases.size()),
      sig(phases.size());
  std::vector<double> label_norm(phases.size());
  for (std::size_t s = 0; s < phases.size(); ++s) {
    sig[s] = sigma(phases[s], params.tau);
    reflected[s] = alpha * kappa(phases[s], params.tau);
    transmitted[s] = alpha * std::polar(1.0, phases[s]) * sig[s];
    label_norm[s] = std::norm(reflected[s]) + std::norm(transmitted[s]);
  }

  Matrix unnormalized = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Complex weight = nu(i, j);
      if (weight == Complex{0.0, 0.0}) continue;
      const auto si = static_cast<std::size_t>(i);
      const auto sj = static_cast<std::size_t>(j);
      const Complex cross_transmitted = std::conj(transmitted[sj]) * transmitted[si];
      const Complex log_overlap = -0.5 * (label_norm[si] + label_norm[sj]) +
                                  std::conj(reflected[sj]) * reflected[si] +
                                  cross_transmitted;
      const Complex click_exponent =
          mode == FactorMode::kExact
              ? -params.eta * cross_transmitted
              : -params.eta * pump * sig[si] * std::conj(sig[sj]);
      const Complex value = weight * std::exp(log_overlap) * -expm1(click_exponent);
      unnormalized(i, j) = value;
      if (i != j) unnormalized(j, i) = std::conj(value);
      else unnormalized(i, i) = value.real();
    }
  }

  const double trace = unnormalized.trace().real();
  if (!(trace >= 1e-300)) {
    throw Error(ErrorCode::kNeverClicks,
                "ON probability underflows (" + std::to_string(trace) +
                    "); the conditional state is undefined");
  }
  ConditionalResult result{
      DensityMatrix::normalized(std::move(unnormalized), std::move(dims)), trace,
      trace, comb_warnings(params)};
  return result;
}

inline std::vector<double> single_mode_phases(std::size_t n_trunc,
                                              const CavityParams& params) {
  std::vector<double> phases(n_trunc);
  for (std::size_t s = 0; s < n_trunc; ++s) phases[s] = phase_shift(s, params);
  return phases;
}

}  // namespace detail

/// Conditional state of the signal after an ON click, renormalized, with the
/// click probability.
inline ConditionalResult conditional_output(const FilterInput& input,
                                            FactorMode mode = FactorMode::kExact) {
  input.validate();
  if (input.params.n_kerr != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "conditional_output models a single Kerr crystal");
  }
  return detail::filter_core(input.nu.entries(), {input.n_trunc}, input.alpha,
                             input.params,
                             detail::single_mode_phases(input.n_trunc, input.params),
                             mode);
}

/// P_ON = sum_k nu_kk (1 - exp(-eta |alpha|^2 |sigma(phi_k)|^2)).
inline double success_probability(const FilterInput& input) {
  input.validate();
  const double pump = std::norm(input.alpha);
  double p = 0.0;
  for (std::size_t k = 0; k < input.n_trunc; ++k) {
    const double s2 = std::norm(sigma(phase_shift(k, input.params), input.params.tau));
    p += input.nu(k, k).real() * -std::expm1(-input.params.eta * pump * s2);
  }
  return p;
}

/// Coherent signal amplitude giving equal weight to |n*> and |n*+l*>:
/// |beta|^2 = ((n*+l*)! / n*!)^{1/l*}, arg beta = Phi / l*.
inline Complex design_superposition(const SuperpositionSpec& spec) {
  if (spec.l_star == 0) {
    throw Error(ErrorCode::kInvalidArgument, "l* must be >= 1");
  }
  const double lo = static_cast<double>(spec.n_star);
  const double l = static_cast<double>(spec.l_star);
  const double log_mean = (std::lgamma(lo + l + 1.0) - std::lgamma(lo + 1.0)) / l;
  return std::polar(std::exp(0.5 * log_mean), spec.phase / l);
}

/// (|n*> + e^{i Phi} |n*+l*>) / sqrt(2) on n_trunc levels.
inline FockVector superposition_target(const SuperpositionSpec& spec,
                                       std::size_t n_trunc) {
  if (spec.n_star + spec.l_star >= n_trunc) {
    throw Error(ErrorCode::kInvalidArgument,
                "superposition lies outside the truncation");
  }
  std::vector<Complex> c(n_trunc, Complex{0.0, 0.0});
  c[spec.n_star] = std::sqrt(0.5);
  c[spec.n_star + spec.l_star] = std::polar(std::sqrt(0.5), spec.phase);
  return FockVector(std::move(c));
}

/// Two signal modes, each through its own Kerr crystal in the same cavity.
/// The output lives on d2(1) ⊗ d2(2), row-major.
inline ConditionalResult two_mode_conditional_output(
    const DensityMatrix& nu1, const DensityMatrix& nu2, Complex alpha,
    const CavityParams& params, FactorMode mode = FactorMode::kExact) {
  params.validate();
  require_finite(alpha, "pump amplitude");
  if (params.n_kerr != 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "two-mode filtering needs n_kerr = 2");
  }
  const DensityMatrix joint = DensityMatrix::product(nu1, nu2);
  const std::size_t d1 = nu1.dimension(), d2 = nu2.dimension();
  std::vector<double> phases(d1 * d2);
  for (std::size_t a = 0; a < d1; ++a)
    for (std::size_t b = 0; b < d2; ++b) phases[a * d2 + b] = phase_shift(a + b, params);
  return detail::filter_core(joint.entries(), {d1, d2}, alpha, params, phases, mode);
}

/// Normalized sum_k c1_k c2_{n*-k} |k>|n*-k>: the ideal two-mode output for
/// pure signals in the narrow-comb limit.
inline FockVector ideal_entangled_state(const FockVector& signal1,
                                        const FockVector& signal2,
                                        std::size_t n_star) {
  const std::size_t d1 = signal1.n_trunc(), d2 = signal2.n_trunc();
  std::vector<Complex> c(d1 * d2, Complex{0.0, 0.0});
  double norm = 0.0;
  for (std::size_t k = 0; k <= n_star && k < d1; ++k) {
    if (n_star - k >= d2) continue;
    c[k * d2 + (n_star - k)] = signal1[k] * signal2[n_star - k];
    norm += std::norm(c[k * d2 + (n_star - k)]);
  }
  if (norm == 0.0) {
    throw Error(ErrorCode::kInvalidState, "signals have no weight at n*");
  }
  for (auto& v : c) v /= std::sqrt(norm);
  return FockVector(std::move(c));
}

}  // namespace photon_filter
