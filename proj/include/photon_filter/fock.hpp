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

// Truncated Fock-space primitives: coherent-state expansions, density
// matrices on one or two modes, and the metrics used to grade conditional
// states.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "photon_filter/error.hpp"

namespace photon_filter {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline void require_finite(Complex value, const char* what) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw Error(ErrorCode::kNonFinite, std::string(what) + " is not finite");
  }
}

/// Pure-state coefficients on the photon-number basis 0..n_trunc-1.
///
/// Truncation may lose norm but never gain it, so the squared norm is
/// bounded by 1 (plus round-off).
class FockVector {
 public:
  static constexpr double kNormSlack = 1e-12;

  explicit FockVector(std::vector<Complex> coefficients)
      : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "FockVector needs n_trunc >= 1");
    }
    for (const auto& c : coefficients_) require_finite(c, "Fock coefficient");
    if (squared_norm() > 1.0 + kNormSlack) {
      throw Error(ErrorCode::kInvalidState,
                  "FockVector squared norm exceeds 1");
    }
  }

  /// Number state |n> truncated to n_trunc levels.
  static FockVector basis(std::size_t n, std::size_t n_trunc) {
    if (n >= n_trunc) {
      throw Error(ErrorCode::kInvalidArgument,
                  "basis state lies outside the truncation");
    }
    std::vector<Complex> c(n_trunc, Complex{0.0, 0.0});
    c[n] = 1.0;
    return FockVector(std::move(c));
  }

  std::size_t n_trunc() const noexcept { return coefficients_.size(); }
  std::span<const Complex> coefficients() const noexcept {
    return coefficients_;
  }
  const Complex& operator[](std::size_t k) const { return coefficients_[k]; }

  double squared_norm() const noexcept {
    double s = 0.0;
    for (const auto& c : coefficients_) s += std::norm(c);
    return s;
  }

 private:
  std::vector<Complex> coefficients_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on one mode or on two
/// modes with row-major (mode-0 major) ordering: index = n0 * dim1 + n1.
class DensityMatrix {
 public:
  static constexpr double kHermiticityTol = 1e-10;
  static constexpr double kTraceTol = 1e-8;
  static constexpr double kEigenTol = 1e-8;

  DensityMatrix(Matrix entries, std::vector<std::size_t> mode_dims)
      : entries_(std::move(entries)), mode_dims_(std::move(mode_dims)) {
    validate();
  }

  explicit DensityMatrix(Matrix entries)
      : DensityMatrix(entries, {static_cast<std::size_t>(entries.rows())}) {}

  /// Divides by the trace, then validates.
  static DensityMatrix normalized(Matrix entries,
                                  std::vector<std::size_t> mode_dims) {
    const Complex tr = entries.trace();
    if (!(tr.real() > 0.0) || !std::isfinite(tr.real())) {
      throw Error(ErrorCode::kInvalidState,
                  "cannot normalize a matrix with non-positive trace");
    }
    entries /= tr.real();
    return DensityMatrix(std::move(entries), std::move(mode_dims));
  }

  static DensityMatrix from_pure(const FockVector& psi) {
    const auto n = static_cast<Eigen::Index>(psi.n_trunc());
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = psi[static_cast<std::size_t>(i)];
    return normalized(v * v.adjoint(), {psi.n_trunc()});
  }

  static DensityMatrix fock(std::size_t n, std::size_t n_trunc) {
    return from_pure(FockVector::basis(n, n_trunc));
  }

  static DensityMatrix maximally_mixed(std::size_t d) {
    const auto n = static_cast<Eigen::Index>(d);
    Matrix m = Matrix::Identity(n, n) / static_cast<double>(d);
    return DensityMatrix(std::move(m), {d});
  }

  /// Two-mode product state first ⊗ second.
  static DensityMatrix product(const DensityMatrix& first,
                               const DensityMatrix& second) {
    if (first.is_two_mode() || second.is_two_mode()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "product expects two single-mode states");
    }
    const auto& a = first.entries();
    const auto& b = second.entries();
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      for (Eigen::Index j = 0; j < a.cols(); ++j) {
        m.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
      }
    }
    return DensityMatrix(std::move(m), {first.dimension(), second.dimension()});
  }

  const Matrix& entries() const noexcept { return entries_; }
  const std::vector<std::size_t>& mode_dims() const noexcept {
    return mode_dims_;
  }
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(entries_.rows());
  }
  bool is_two_mode() const noexcept { return mode_dims_.size() == 2; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  double min_eigenvalue() const {
    const Matrix h = 0.5 * (entries_ + entries_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
  }

 private:
  void validate() const {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "density matrix must be square and non-empty");
    }
    if (mode_dims_.empty() || mode_dims_.size() > 2) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "density matrix supports one or two modes");
    }
    std::size_t total = 1;
    for (auto d : mode_dims_) {
      if (d == 0) {
        throw Error(ErrorCode::kDimensionMismatch, "zero mode dimension");
      }
      total *= d;
    }
    if (total != dimension()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "mode_dims do not multiply to the matrix size");
    }
    if (!entries_.allFinite()) {
      throw Error(ErrorCode::kNonFinite, "density matrix has non-finite entries");
    }
    const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > kHermiticityTol) {
      throw Error(ErrorCode::kInvalidState,
                  "density matrix is not Hermitian (deviation " +
                      std::to_string(herm) + ")");
    }
    const double tr = entries_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
      throw Error(ErrorCode::kInvalidState,
                  "density matrix trace is " + std::to_string(tr));
    }
    const double lmin = min_eigenvalue();
    if (lmin < -kEigenTol) {
      throw Error(ErrorCode::kInvalidState,
                  "density matrix is not positive semidefinite (min eigenvalue " +
                      std::to_string(lmin) + ")");
    }
  }

  Matrix entries_;
  std::vector<std::size_t> mode_dims_;
};

/// Truncation keeping the Poisson tail of |alpha> below ~1e-10.
inline std::size_t suggest_truncation(Complex alpha) {
  require_finite(alpha, "coherent amplitude");
  const double a = std::abs(alpha);
  return static_cast<std::size_t>(std::ceil(a * a + 8.0 * a + 10.0));
}

/// c_k = exp(-|alpha|^2/2) alpha^k / sqrt(k!), evaluated in the log domain.
inline FockVector coherent_fock_vector(Complex alpha, std::size_t n_trunc) {
  require_finite(alpha, "coherent amplitude");
  if (n_trunc == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_trunc must be >= 1");
  }
  std::vector<Complex> c(n_trunc, Complex{0.0, 0.0});
  const double r = std::abs(alpha);
  const double theta = std::arg(alpha);
  const double half_mean = -0.5 * r * r;
  if (r == 0.0) {
    c[0] = 1.0;
    return FockVector(std::move(c));
  }
  const double log_r = std::log(r);
  for (std::size_t k = 0; k < n_trunc; ++k) {
    const double kd = static_cast<double>(k);
    const double log_mag = half_mean + kd * log_r - 0.5 * std::lgamma(kd + 1.0);
    c[k] = std::polar(std::exp(log_mag), kd * theta);
  }
  return FockVector(std::move(c));
}

inline DensityMatrix coherent_density(Complex alpha, std::size_t n_trunc) {
  return DensityMatrix::from_pure(coherent_fock_vector(alpha, n_trunc));
}

/// <gamma'|gamma> = exp(-|gamma|^2/2 - |gamma'|^2/2 + conj(gamma') gamma).
///
/// Written out component-wise so that swapping the arguments yields the
/// exact complex conjugate.
inline Complex coherent_overlap(Complex gamma, Complex gamma_prime) {
  require_finite(gamma, "gamma");
  require_finite(gamma_prime, "gamma_prime");
  const double gr = gamma.real(), gi = gamma.imag();
  const double pr = gamma_prime.real(), pi = gamma_prime.imag();
  const double cross_re = gr * pr + gi * pi;
  const double cross_im = pr * gi - pi * gr;
  const double norms = (gr * gr + gi * gi) + (pr * pr + pi * pi);
  const double mag = std::exp(-0.5 * norms + cross_re);
  return {mag * std::cos(cross_im), mag * std::sin(cross_im)};
}

/// Diagonal of a single-mode state. Round-off negativity down to -1e-10 is
/// clamped to zero; anything more negative is an error.
inline std::vector<double> photon_number_distribution(const DensityMatrix& rho) {
  if (rho.is_two_mode()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "photon_number_distribution expects a single-mode state");
  }
  std::vector<double> p(rho.dimension());
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double v = rho(n, n).real();
    if (v < -1e-10) {
      throw Error(ErrorCode::kInvalidState, "negative photon-number probability");
    }
    p[n] = std::max(v, 0.0);
  }
  return p;
}

/// <psi|rho|psi> / (<psi|psi> tr rho).
inline double fidelity_with_pure(const DensityMatrix& rho, const FockVector& psi) {
  if (psi.n_trunc() != rho.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "state and density matrix dimensions differ");
  }
  const double norm = psi.squared_norm();
  if (norm == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "fidelity with a zero vector");
  }
  const auto n = static_cast<Eigen::Index>(psi.n_trunc());
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = psi[static_cast<std::size_t>(i)];
  const Complex num = v.dot(rho.entries() * v);
  return num.real() / (norm * rho.entries().trace().real());
}

inline double purity(const DensityMatrix& rho) {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.entries().cwiseAbs2().sum();
}

/// Reduces a two-mode state to the marginal of `keep_mode` (0 or 1).
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep_mode) {
  if (!rho.is_two_mode()) {
    throw Error(ErrorCode::kDimensionMismatch, "partial_trace expects two modes");
  }
  if (keep_mode > 1) {
    throw Error(ErrorCode::kInvalidArgument, "mode index must be 0 or 1");
  }
  const auto d0 = static_cast<Eigen::Index>(rho.mode_dims()[0]);
  const auto d1 = static_cast<Eigen::Index>(rho.mode_dims()[1]);
  const Matrix& m = rho.entries();
  if (keep_mode == 0) {
    Matrix out = Matrix::Zero(d0, d0);
    for (Eigen::Index a = 0; a < d0; ++a)
      for (Eigen::Index ap = 0; ap < d0; ++ap)
        for (Eigen::Index b = 0; b < d1; ++b) out(a, ap) += m(a * d1 + b, ap * d1 + b);
    return DensityMatrix(std::move(out), {rho.mode_dims()[0]});
  }
  Matrix out = Matrix::Zero(d1, d1);
  for (Eigen::Index b = 0; b < d1; ++b)
    for (Eigen::Index bp = 0; bp < d1; ++bp)
      for (Eigen::Index a = 0; a < d0; ++a) out(b, bp) += m(a * d1 + b, a * d1 + bp);
  return DensityMatrix(std::move(out), {rho.mode_dims()[1]});
}

}  // namespace photon_filter
