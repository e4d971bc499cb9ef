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

#include <cmath>
#include <numbers>
#include <random>

#include "photon_filter/filter.hpp"

namespace photon_filter {
namespace {

constexpr double kPi = std::numbers::pi;

CavityParams fig7_params(double eta) {
  return {0.2, 2.0 * kPi / 5.0, 6.0 * kPi / 5.0, eta, 1};
}

DensityMatrix fig7_signal() {
  return coherent_density(design_superposition({3, 5, 0.0}), 40);
}

double off_comb_population(const DensityMatrix& rho, std::size_t n_star, std::size_t l_star) {
  double p = 0.0;
  for (std::size_t n = 0; n < rho.dimension(); ++n) {
    if (n < n_star || (n - n_star) % l_star != 0) p += rho(n, n).real();
  }
  return p;
}

TEST(ConditionalOutput, FockStateIsFixedPoint) {
  for (std::size_t n : {0u, 3u, 7u}) {
    const FilterInput input{DensityMatrix::fock(n, 10), {4.0, 1.0}, {0.05, 0.3, 0.7, 0.4, 1}, 10};
    const auto r = conditional_output(input);
    EXPECT_EQ(r.rho_out(n, n), Complex(1.0, 0.0));
    EXPECT_EQ(r.rho_out.entries().cwiseAbs().sum(), 1.0);
  }
}

TEST(ConditionalOutput, Fig7ClickProbabilities) {
  // Frozen from an independent dense evaluation of the exact conditional state.
  const FilterInput hi{fig7_signal(), {8.0, 0.0}, fig7_params(1.0), 40};
  const FilterInput lo{fig7_signal(), {8.0, 0.0}, fig7_params(0.01), 40};
  const auto r_hi = conditional_output(hi);
  const auto r_lo = conditional_output(lo);
  EXPECT_NEAR(r_hi.p_on, 0.789, 0.02);
  EXPECT_NEAR(r_lo.p_on, 0.106, 0.02);
  EXPECT_NEAR(r_hi.p_on, 0.78914086341424, 1e-9);
  EXPECT_NEAR(r_lo.p_on, 0.10617870755146, 1e-9);
  EXPECT_GT(purity(r_lo.rho_out), purity(r_hi.rho_out));
  EXPECT_TRUE(r_hi.warnings.empty());
}

TEST(ConditionalOutput, Fig3PeaksAtEight) {
  const FilterInput input{coherent_density({3.0, 0.0}, 48), {3.0, 0.0}, {0.01, 0.05, 0.4, 0.1, 1}, 48};
  const auto r = conditional_output(input);
  const auto dist = photon_number_distribution(r.rho_out);
  EXPECT_EQ(std::max_element(dist.begin(), dist.end()) - dist.begin(), 8);
  EXPECT_GE(fidelity_with_pure(r.rho_out, FockVector::basis(8, 48)), 0.8);
}

TEST(ConditionalOutput, NeverClicks) {
  const FilterInput input{coherent_density({1.0, 0.0}, 10), {3.0, 0.0}, {0.1, 0.3, 0.0, 0.0, 1}, 10};
  EXPECT_THROW(
      {
        try {
          conditional_output(input);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kNeverClicks);
          throw;
        }
      },
      Error);
  EXPECT_EQ(success_probability(input), 0.0);
  const FilterInput dark{coherent_density({1.0, 0.0}, 10), {0.0, 0.0}, {0.1, 0.3, 0.0, 1.0, 1}, 10};
  EXPECT_THROW(conditional_output(dark), Error);
}

TEST(ConditionalOutput, OffCombPsiWarns) {
  const FilterInput input{coherent_density({1.0, 0.0}, 10), {3.0, 0.0}, {0.1, 0.3, 0.45, 1.0, 1}, 10};
  const auto r = conditional_output(input);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(ConditionalOutput, RejectsMismatchedInput) {
  const FilterInput input{coherent_density({1.0, 0.0}, 10), {3.0, 0.0}, {0.1, 0.3, 0.0, 1.0, 1}, 9};
  EXPECT_THROW(conditional_output(input), Error);
}

TEST(SuccessProbability, MatchesEngineTrace) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const CavityParams p{0.01 + 0.5 * u(rng), 0.05 + u(rng), 3.0 * u(rng), 0.05 + 0.95 * u(rng), 1};
    const FilterInput input{coherent_density({2.0 * u(rng), 2.0 * u(rng)}, 20),
                            std::polar(1.0 + 7.0 * u(rng), 6.0 * u(rng)), p, 20};
    const auto r = conditional_output(input);
    EXPECT_NEAR(success_probability(input), r.p_on, 1e-12);
    EXPECT_NEAR(r.normalizer, r.p_on, 0.0);
  }
}

TEST(SuccessProbability, NarrowCavityLimit) {
  // tau -> 0, |alpha| = 10: P_ON -> sum_k nu_{5k+3, 5k+3} for a Poisson signal of mean 4.
  const std::size_t n = 40;
  double comb_weight = 0.0, term = std::exp(-4.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (k >= 3 && (k - 3) % 5 == 0) comb_weight += term;
    term *= 4.0 / static_cast<double>(k + 1);
  }
  const FilterInput input{coherent_density({2.0, 0.0}, n), {10.0, 0.0},
                          {1e-4, 2.0 * kPi / 5.0, 6.0 * kPi / 5.0, 1.0, 1}, n};
  EXPECT_NEAR(success_probability(input), comb_weight, 1e-3);
}

TEST(SuccessProbability, SingleOnPeakTerm) {
  const FilterInput input{DensityMatrix::fock(4, 8), {3.0, 0.0}, {0.05, 0.25, 1.0, 0.3, 1}, 8};
  EXPECT_NEAR(success_probability(input), 1.0 - std::exp(-0.3 * 9.0), 1e-14);
}

TEST(DesignSuperposition, EqualAmplitudes) {
  const Complex beta = design_superposition({3, 5, 0.0});
  EXPECT_NEAR(std::norm(beta), std::pow(6720.0, 0.2), 1e-12);
  EXPECT_NEAR(std::norm(beta), 5.827, 1e-3);
  EXPECT_EQ(beta.imag(), 0.0);
  EXPECT_GT(beta.real(), 0.0);
  const auto v = coherent_fock_vector(beta, 20);
  EXPECT_NEAR(std::abs(v[3]), std::abs(v[8]), 1e-10);
  const Complex rotated = design_superposition({3, 5, 1.0});
  EXPECT_NEAR(std::arg(rotated), 0.2, 1e-15);
  for (std::size_t lo : {0u, 2u, 50u, 200u}) {
    const Complex b = design_superposition({lo, 4, 0.0});
    const auto w = coherent_fock_vector(b, lo + 10);
    EXPECT_NEAR(std::abs(w[lo]) / std::abs(w[lo + 4]), 1.0, 1e-9) << lo;
  }
  EXPECT_THROW(design_superposition({3, 0, 0.0}), Error);
}

TEST(ConditionalOutput, Fig4SuperpositionShape) {
  const FilterInput input{fig7_signal(), {8.0, 0.0}, {0.06, 2.0 * kPi / 5.0, 6.0 * kPi / 5.0, 0.1, 1}, 40};
  const auto dist = photon_number_distribution(conditional_output(input).rho_out);
  EXPECT_NEAR(dist[3] / dist[8], 1.0, 0.1);
  EXPECT_LT(dist[13], std::min(dist[3], dist[8]));
  EXPECT_GT(dist[13], dist[12]);
}

TEST(ConditionalOutput, SupportOnComb) {
  for (double alpha : {8.0, 10.0}) {
    const FilterInput input{fig7_signal(), {alpha, 0.0}, {1e-3, 2.0 * kPi / 5.0, 6.0 * kPi / 5.0, 0.5, 1}, 40};
    EXPECT_LE(off_comb_population(conditional_output(input).rho_out, 3, 5), 1e-3);
  }
}

TEST(ConditionalOutput, FockLimitImprovesMonotonically) {
  // l* = 40 pi exceeds the signal support, so only n* = 8 survives as tau -> 0.
  double previous = 0.0;
  for (double tau : {0.1, 0.03, 0.01, 0.003}) {
    const FilterInput input{coherent_density({3.0, 0.0}, 40), {10.0, 0.0}, {tau, 0.05, 0.4, 0.5, 1}, 40};
    const double f = fidelity_with_pure(conditional_output(input).rho_out, FockVector::basis(8, 40));
    EXPECT_GT(f, previous) << tau;
    previous = f;
  }
  const FilterInput tight{coherent_density({3.0, 0.0}, 40), {10.0, 0.0}, {1e-5, 0.05, 0.4, 0.5, 1}, 40};
  EXPECT_GT(fidelity_with_pure(conditional_output(tight).rho_out, FockVector::basis(8, 40)), 0.99);
}

TEST(ConditionalOutput, InvariantUnderPumpPhase) {
  const auto nu = coherent_density({1.3, -0.6}, 16);
  const CavityParams p{0.08, 0.7, 1.1, 0.6, 1};
  const auto a = conditional_output({nu, {2.5, 0.0}, p, 16});
  for (double theta : {0.3, 1.7, -2.9}) {
    const auto b = conditional_output({nu, std::polar(2.5, theta), p, 16});
    EXPECT_LE((a.rho_out.entries() - b.rho_out.entries()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(ConditionalOutput, PaperLiteralFactorsInWorkingRegime) {
  struct Case {
    DensityMatrix nu;
    Complex alpha;
    CavityParams params;
  };
  const std::vector<Case> cases = {
      {coherent_density({3.0, 0.0}, 48), {3.0, 0.0}, {0.01, 0.05, 0.4, 0.1, 1}},
      {fig7_signal(), {8.0, 0.0}, {0.06, 2.0 * kPi / 5.0, 6.0 * kPi / 5.0, 0.1, 1}},
      {fig7_signal(), {8.0, 0.0}, fig7_params(0.01)},
  };
  for (const auto& c : cases) {
    const FilterInput input{c.nu, c.alpha, c.params, c.nu.dimension()};
    const auto exact = conditional_output(input, FactorMode::kExact);
    const auto literal = conditional_output(input, FactorMode::kPaperLiteral);
    EXPECT_LE((exact.rho_out.entries() - literal.rho_out.entries()).cwiseAbs().maxCoeff(), 0.02);
    EXPECT_NEAR(exact.p_on, literal.p_on, 1e-14);
  }
}

TEST(TwoMode, VacuumAndSingleJointTerm) {
  const CavityParams zero{0.01, 0.05, 0.0, 1.0, 2};
  const auto vac = two_mode_conditional_output(DensityMatrix::fock(0, 3), DensityMatrix::fock(0, 3),
                                               {10.0, 0.0}, zero);
  EXPECT_EQ(vac.rho_out(0, 0), Complex(1.0, 0.0));
  EXPECT_EQ(vac.rho_out.mode_dims(), (std::vector<std::size_t>{3, 3}));

  const CavityParams one{0.01, 0.05, 0.1, 1.0, 2};  // n* = 1
  const auto r = two_mode_conditional_output(DensityMatrix::fock(1, 3), DensityMatrix::fock(0, 3),
                                             {10.0, 0.0}, one);
  EXPECT_EQ(r.rho_out(3, 3), Complex(1.0, 0.0));  // |1,0> has index 1*3+0
  EXPECT_THROW(two_mode_conditional_output(DensityMatrix::fock(1, 3), DensityMatrix::fock(0, 3),
                                           {10.0, 0.0}, {0.01, 0.05, 0.1, 1.0, 1}),
               Error);
}

TEST(TwoMode, CoherentInputsApproachIdealEntangledState) {
  const Complex b1{1.0, 0.0}, b2{0.6, 0.5};
  for (std::size_t n_star : {1u, 2u, 3u}) {
    const double chi = 0.2;
    const CavityParams p{1e-3, chi, 2.0 * chi * static_cast<double>(n_star), 1.0, 2};
    const auto r = two_mode_conditional_output(coherent_density(b1, 10), coherent_density(b2, 10),
                                               {10.0, 0.0}, p);
    const auto ideal = ideal_entangled_state(coherent_fock_vector(b1, 10), coherent_fock_vector(b2, 10), n_star);
    EXPECT_GE(fidelity_with_pure(r.rho_out, ideal), 0.99) << n_star;
    const auto marginal = partial_trace(r.rho_out, 0);
    EXPECT_NEAR(marginal.entries().trace().real(), 1.0, 1e-10);
  }
}

}  // namespace
}  // namespace photon_filter
