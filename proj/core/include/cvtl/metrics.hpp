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

#include "cvtl/protocol.hpp"

namespace cvtl {

// Classical benchmarks: without entanglement V >= 1/4, T <= 1, F <= 1/2.
inline constexpr double kClassicalV = 0.25;
inline constexpr double kClassicalT = 1.0;
inline constexpr double kClassicalF = 0.5;

/// Conditional variance product V = <X^2> <P^2>. The added noises are
/// uncorrelated with the input, so conditional variances equal the added
/// noise variances.
double cond_var_product(double var_x, double var_p);

/// Signal transfer T = G_x^2 / (G_x^2 + 2 <X^2>) + G_p^2 / (G_p^2 + 2 <P^2>)
/// for coherent inputs.
double signal_transfer(double gx, double gp, double var_x, double var_p);

/// Coherent-state fidelity 1 / sqrt((1 + <X^2>)(1 + <P^2>)) for mutually
/// uncorrelated added noises at unity gain.
double fidelity_uncorrelated(double var_x, double var_p);

/// Overlap 1 / sqrt(det(V_out + V_in)) of two Gaussian states with equal
/// first moments. Throws InvalidState if the determinant is not positive.
double fidelity_gaussian(const Mat2& v_in, const Mat2& v_out);

/// Coherent input: 1 / sqrt(1 + 2 Tr N + 4 det N).
double fidelity_coherent(const AddedNoiseMatrix& noise);

/// Photon noise Tr N: mean photon number added to the input state.
double photon_noise(const AddedNoiseMatrix& noise);

/// Unity-gain fidelity of the QND-entangled scheme with Bell asymmetry g':
///   F = 2 / sqrt([2 + 1/g'^2 + (g/g' - 1)^2] [3 + (g - g')^2]).
double qnd_fidelity(double g, double g_prime);

/// g' = g special case of qnd_fidelity: 2 / sqrt(3 (2 + 1/g^2)).
double hk_fidelity(double g);

/// Fidelity with the improved local squeezers: 1 / (1 + sqrt(1+g^2) - g).
double improved_fidelity(double g);

/// Two-mode-squeezed EPR resource: 1 / (1 + e^(-2 kappa)).
double epr_fidelity(double kappa);

/// Squeezing parameter whose EPR variance equals sqrt(1+g^2) - g.
double qnd_equivalent_kappa(double g);

struct RegimeFlags {
  bool quantum_v = false;
  bool quantum_t = false;
  bool quantum_f = false;

  /// Quantum regime in the (V, T) sense requires both flags.
  bool quantum_vt() const { return quantum_v && quantum_t; }
};

/// Figures of merit for one configuration, evaluated at its own gains.
struct MetricsReport {
  /// Effective normalized gains (diagonal of the first-moment map).
  double gx = 1.0;
  double gp = 1.0;
  double v = 0.0;
  double t = 0.0;
  /// Gaussian overlap of input and output. At non-unity gain this is the
  /// overlap for a zero-amplitude input.
  double f = 0.0;
  double photon_noise = 0.0;
  RegimeFlags flags;
};

MetricsReport evaluate_metrics(const ProtocolResult& result,
                               const SingleModeCovariance& v_in =
                                   SingleModeCovariance::coherent());

MetricsReport evaluate_metrics(const ProtocolConfig& config,
                               const SingleModeCovariance& v_in =
                                   SingleModeCovariance::coherent());

}  // namespace cvtl
