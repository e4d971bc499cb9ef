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

// Single-mode model of the ring cavity: two beam splitters of transmissivity
// tau closed on themselves through a cross-Kerr medium and a phase shifter.
// The signal photon number n enters only through the round-trip phase
// phi_n = -chi_t n + psi, which sets the effective reflection kappa(phi) and
// transmission sigma(phi) seen by the pump.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "photon_filter/error.hpp"
#include "photon_filter/fock.hpp"

namespace photon_filter {

struct CavityParams {
  double tau = 0.01;   ///< beam-splitter transmissivity, (0, 1]
  double chi_t = 0.05; ///< Kerr phase per signal photon, radians
  double psi = 0.0;    ///< phase-shifter setting, radians
  double eta = 1.0;    ///< detector quantum efficiency, [0, 1]
  int n_kerr = 1;      ///< number of Kerr crystals in the loop (1 or 2)

  void validate() const {
    if (!std::isfinite(tau) || !std::isfinite(chi_t) || !std::isfinite(psi) ||
        !std::isfinite(eta)) {
      throw Error(ErrorCode::kNonFinite, "cavity parameters must be finite");
    }
    if (!(tau > 0.0 && tau <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0, 1]");
    }
    if (!(chi_t > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "chi_t must be positive");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument, "eta must lie in [0, 1]");
    }
    if (n_kerr != 1 && n_kerr != 2) {
      throw Error(ErrorCode::kInvalidArgument, "n_kerr must be 1 or 2");
    }
  }
};

/// Peak spacing and first-peak position of the transmission comb.
struct CombParams {
  double l_star = 0.0;
  double n_star = 0.0;
};

namespace detail {
inline void require_tau(double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0, 1]");
  }
}

// 1 - (1 - tau) e^{i phi}, with the real part kept away from cancellation.
inline Complex cavity_denominator(double phi, double tau) {
  const double s = std::sin(0.5 * phi);
  return {tau + 2.0 * (1.0 - tau) * s * s, -(1.0 - tau) * std::sin(phi)};
}
}  // namespace detail

/// Round-trip phase for signal photon number n. With two crystals, n is the
/// joint number n1 + n2 and each crystal imparts 2 chi_t per photon, so that
/// l* = pi / chi_t and n* = psi / (2 chi_t).
inline double phase_shift(std::size_t n, const CavityParams& params) {
  const double per_photon = params.n_kerr == 2 ? 2.0 * params.chi_t : params.chi_t;
  return -per_photon * static_cast<double>(n) + params.psi;
}

/// kappa(phi) = sqrt(1 - tau) (e^{i phi} - 1) / (1 - (1 - tau) e^{i phi}).
inline Complex kappa(double phi, double tau) {
  detail::require_tau(tau);
  const double s = std::sin(0.5 * phi);
  const Complex numerator{-2.0 * s * s, std::sin(phi)};
  return std::sqrt(1.0 - tau) * numerator / detail::cavity_denominator(phi, tau);
}

/// sigma(phi) = tau / (1 - (1 - tau) e^{i phi}).
inline Complex sigma(double phi, double tau) {
  detail::require_tau(tau);
  return tau / detail::cavity_denominator(phi, tau);
}

inline CombParams comb(const CavityParams& params) {
  if (!(params.chi_t > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "chi_t must be positive");
  }
  if (params.n_kerr == 2) {
    return {std::numbers::pi / params.chi_t, params.psi / (2.0 * params.chi_t)};
  }
  return {2.0 * std::numbers::pi / params.chi_t, params.psi / params.chi_t};
}

/// True when the first comb peak falls on an integer photon number.
inline bool comb_is_integer(const CombParams& c, double tol = 1e-9) {
  return std::abs(c.n_star - std::round(c.n_star)) <= tol;
}

}  // namespace photon_filter
