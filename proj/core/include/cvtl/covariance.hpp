// Copyright 2026 The cvtl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "cvtl/symplectic.hpp"

namespace cvtl {

/// Minimum eigenvalue allowed for V + (i/2) Omega.
inline constexpr double kUncertaintyTol = 1e-10;
/// Allowed asymmetry of a covariance matrix.
inline constexpr double kSymmetryTol = 1e-12;

/// Covariance matrices use vacuum variance 1/2 ([x, p] = i) and the symmetrized
/// second moments <{dx_k, dx_l}>.

/// Smallest eigenvalue of the Hermitian matrix V + (i/2) Omega (2x2 or 4x4).
double uncertainty_margin(const Eigen::Ref<const Eigen::MatrixXd>& v);

/// Symmetric to kSymmetryTol and uncertainty margin >= -tol.
bool satisfies_uncertainty(const Eigen::Ref<const Eigen::MatrixXd>& v,
                           double tol = kUncertaintyTol);

/// Single-mode covariance matrix.
class SingleModeCovariance {
 public:
  /// Throws InvalidState if `v` is not a physical covariance matrix.
  explicit SingleModeCovariance(const Mat2& v);

  /// Coherent states (and the vacuum): I/2.
  static SingleModeCovariance coherent();

  const Mat2& matrix() const { return v_; }

 private:
  Mat2 v_;
};

/// Two-mode covariance V_AB = [[A, C], [C^T, B]] ordered (x_A, p_A, x_B, p_B).
class CovarianceMatrix2Mode {
 public:
  /// Throws InvalidState if `v` is asymmetric or violates the uncertainty
  /// relation.
  explicit CovarianceMatrix2Mode(const Mat4& v);

  /// Two vacua: I/2.
  static CovarianceMatrix2Mode vacuum();

  const Mat4& matrix() const { return v_; }
  Mat2 a() const { return v_.topLeftCorner<2, 2>(); }
  Mat2 b() const { return v_.bottomRightCorner<2, 2>(); }
  Mat2 c() const { return v_.topRightCorner<2, 2>(); }

  /// M V M^T, symmetrized against rounding.
  CovarianceMatrix2Mode transformed(const SymplecticMat4& m) const;

 private:
  struct Unchecked {};
  CovarianceMatrix2Mode(Unchecked, const Mat4& v) : v_(v) {}
  Mat4 v_;
};

/// Local symplectic reduction of a pure two-mode state to the two-mode
/// squeezed vacuum pattern
///   [[a, 0, -c, 0], [0, a, 0, c], [-c, 0, a, 0], [0, c, 0, a]].
struct StandardFormResult {
  SymplecticMat2 m_a;
  SymplecticMat2 m_b;
  Mat4 v_tms;
  double a = 0.5;
  double c = 0.0;
  /// Two-mode squeezing: a = cosh(2 kappa) / 2, c = sinh(2 kappa) / 2.
  double kappa = 0.0;

  /// EPR-sum variance 2 (a - c) = e^(-2 kappa).
  double epr_variance() const { return 2.0 * (a - c); }
};

struct StandardFormOptions {
  /// Allowed |det V - 1/16|, scaled by max(1, |V|_max^4).
  double purity_tol = 1e-8;
};

/// Throws UnsupportedState for mixed input and InvalidState for unphysical
/// input. Product states give c = 0 and kappa = 0.
StandardFormResult two_mode_standard_form(const CovarianceMatrix2Mode& v,
                                          const StandardFormOptions& opts = {});

/// Purity 1 / (2 sqrt(det V)) of a single-mode Gaussian state. A determinant
/// that undershoots 1/4 by at most `tol` is clamped; anything lower throws
/// InvalidState.
double purity(const Mat2& v_reduced, double tol = 1e-12);

}  // namespace cvtl
