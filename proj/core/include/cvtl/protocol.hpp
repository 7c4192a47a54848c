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

#include <variant>

#include "cvtl/covariance.hpp"
#include "cvtl/symplectic.hpp"

namespace cvtl {

// Bell-measurement interactions between Alice's mode A and the input mode.

/// QND coupling kappa' x_A p_in, g' = kappa' t'.
struct BellQnd {
  double g_prime = 1.0;
};

/// Unbalanced beam splitter; the effective asymmetry is g' = R / T.
struct BellBeamSplitter {
  double transmissivity = 1.0 / 1.4142135623730951;
  double reflectivity = 1.0 / 1.4142135623730951;

  /// Beam splitter with R / T = g_prime.
  static BellBeamSplitter from_asymmetry(double g_prime);
};

/// Any two-mode symplectic interaction on (x_A, p_A, x_in, p_in).
struct BellGeneric {
  SymplecticMat4 matrix;
};

using BellInteraction = std::variant<BellQnd, BellBeamSplitter, BellGeneric>;

/// Throws std::invalid_argument if the interaction parameters are illegal.
void validate(const BellInteraction& bell);

/// 4x4 matrix R of the interaction.
SymplecticMat4 bell_matrix(const BellInteraction& bell);

// Feed-forward gains applied by Bob to the measured record (x_in', p_A'').

/// Unnormalized gain matrix Y^-1: restores the input first moments.
struct UnityGain {};
/// Normalized gains G_x, G_p; the unnormalized matrix is diag(G_x, G_p) Y^-1.
struct ScalarGain {
  double gx = 1.0;
  double gp = 1.0;
};
/// Explicit unnormalized gain matrix.
struct MatrixGain {
  Mat2 g = Mat2::Identity();
};

using GainPolicy = std::variant<UnityGain, ScalarGain, MatrixGain>;

struct ProtocolConfig {
  /// QND entangling strength g = kappa t of the shared state.
  double g = 1.0;
  BellInteraction bell = BellQnd{};
  SymplecticMat2 s_a;
  SymplecticMat2 s_b;
  GainPolicy gains = UnityGain{};

  void validate() const;
};

/// Second moments 2N of the added noises (X, P), i.e. V_out - V_in at unity
/// gain. Symmetric and positive semidefinite.
class AddedNoiseMatrix {
 public:
  explicit AddedNoiseMatrix(const Mat2& two_n);

  const Mat2& two_n() const { return two_n_; }
  Mat2 n() const { return 0.5 * two_n_; }
  double var_x() const { return two_n_(0, 0); }
  double var_p() const { return two_n_(1, 1); }

 private:
  Mat2 two_n_;
};

/// Detected quadratures xi_d = Y xi_in + Z xi_A'.
struct BellMatrices {
  Mat2 y;
  Mat2 z;
};

/// Throws SingularBellMatrix when |det Y| <= 1e-10 |Y|_F^2.
BellMatrices extract_yz(const SymplecticMat4& r);

/// Unnormalized gain matrix for a policy. Throws SingularBellMatrix when the
/// policy needs Y^-1 and Y is singular.
Mat2 gain_matrix(const Mat2& y, const GainPolicy& policy);

/// Sigma = sigma_3 Y^-1 Z, the effective symplectic map the Bell interaction
/// applies to mode A.
SymplecticMat2 sigma_matrix(const Mat2& y, const Mat2& z);

struct QuadratureNoise {
  double var_x = 0.0;
  double var_p = 0.0;
};

/// Closed-form added-noise variances for the QND-entangled state measured
/// with a QND (or R/T = g') Bell interaction and normalized gains:
///   <X^2> = [(G_x g' - g)^2 + 1] / 2,
///   <P^2> = [(G_p / g')^2 + (1 - G_p g / g')^2] / 2.
QuadratureNoise added_noise_qnd_scalar(double g, double g_prime, double gx,
                                       double gp);

/// Covariance of the QND coupling applied to two vacua.
CovarianceMatrix2Mode shared_state_qnd(double g);

struct ProtocolResult {
  AddedNoiseMatrix noise;
  Mat2 v_out;
  /// <xi_out> = first_moment_map <xi_in>; identity at unity gain.
  Mat2 first_moment_map;
};

/// Runs the protocol on an arbitrary shared state.
ProtocolResult run_protocol(const CovarianceMatrix2Mode& shared,
                            const BellInteraction& bell,
                            const SymplecticMat2& s_a,
                            const SymplecticMat2& s_b, const GainPolicy& gains,
                            const SingleModeCovariance& v_in =
                                SingleModeCovariance::coherent());

/// Runs the protocol on the QND-entangled state of `config.g`.
ProtocolResult run_protocol(const ProtocolConfig& config,
                            const SingleModeCovariance& v_in =
                                SingleModeCovariance::coherent());

}  // namespace cvtl
