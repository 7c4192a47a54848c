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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cvtl/covariance.hpp"
#include "cvtl/protocol.hpp"
#include "cvtl/symplectic.hpp"

namespace cvtl {

enum class OptimumMethod { kClosedForm, kNumericOracle };

const char* to_string(OptimumMethod m);

/// Location and value of an optimum, plus the residuals against the other
/// route when both a closed form and an oracle were evaluated.
struct OptimumResult {
  std::string name;
  std::vector<std::pair<std::string, double>> parameters;
  double value = 0.0;
  OptimumMethod method = OptimumMethod::kClosedForm;
  /// max |closed-form parameter - oracle parameter|
  std::optional<double> parameter_residual;
  /// |closed-form value - oracle value|
  std::optional<double> value_residual;
  std::optional<std::uint64_t> seed;

  /// Value of a named parameter; throws std::out_of_range if absent.
  double parameter(const std::string& key) const;
};

// ---------------------------------------------------------------------------
// Non-unity gain regime (QND-entangled state, Bell asymmetry g').

struct GainPair {
  double gx = 1.0;
  double gp = 1.0;
};

/// V = <X^2><P^2> as a function of the normalized gains.
double gain_objective_v(double g, double g_prime, double gx, double gp);
/// T as a function of the normalized gains.
double gain_objective_t(double g, double g_prime, double gx, double gp);

/// Minimizer of V: G_x = g/g', G_p = g g' / (1 + g^2).
GainPair gains_min_v(double g, double g_prime);
/// Maximizer of T: G_x = (1 + g^2) / (g g'), G_p = g' / g.
GainPair gains_max_t(double g, double g_prime);

/// V_min = 1 / (4 (1 + g^2)), independent of g'.
double v_min(double g);
/// T at the V-minimizing gains.
double t_at_v_min(double g, double g_prime);
/// T_max = 1 + g^2 g'^2 / ((1 + g'^2)(1 + g^2 + g'^2)).
double t_max(double g, double g_prime);
/// V at the T-maximizing gains: (1/g^2 + 1/g^4) / 4.
double v_at_t_max(double g);

/// Bell asymmetry that extremizes both T(V_min) and T_max: (1 + g^2)^(1/4).
double optimal_gprime(double g);
/// 2 g^2 / (g^2 + sqrt(1 + g^2)).
double t_v_min_opt(double g);
/// 2 sqrt(1 + g^2) / (1 + sqrt(1 + g^2)).
double t_max_opt(double g);
/// Squeezing r_A on Alice's mode that moves a fixed g' to the optimum:
/// e^(r_A) = (1 + g^2)^(1/4) / g'.
double compensating_squeeze(double g, double g_prime);

/// Entanglement above which V(T_max) < 1/4 and T(V_min) > 1:
/// sqrt((sqrt(5) + 1) / 2).
double vt_quantum_threshold();
/// Entanglement above which the g' = g fidelity exceeds 1/2: sqrt(3/10).
double hk_quantum_threshold();

struct GprimeSearchOptions {
  double lo = 0.01;
  double hi = 10.0;
  int grid_points = 400;
  double tol = 1e-8;
};

/// argmax over g' of the unity-gain fidelity qnd_fidelity(g, g'). The closed
/// form 4/3 is known only at g = 1.
OptimumResult optimal_gprime_fidelity(double g,
                                      const GprimeSearchOptions& opts = {});

/// Golden-section oracle for optimal_gprime: argmax over g' of T_max(g, g').
OptimumResult oracle_gprime_search(double g, const GprimeSearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Unity gain: local operations.

struct LocalOps {
  SymplecticMat2 s_a;
  SymplecticMat2 s_b;
};

/// S_A = diag(a/g', g'/a), S_B = diag(1/a, a) with a = (1 + g^2)^(1/4).
LocalOps improved_squeezers(double g, double g_prime);

struct OptimalLocalOps {
  SymplecticMat2 s_a;
  SymplecticMat2 s_b;
  /// 2 (sqrt(det A) - sqrt(|det C|)) = e^(-2 kappa).
  double noise_min = 1.0;
  StandardFormResult standard_form;
};

/// S_A = Sigma^-1 m_A and S_B = m_B, where (m_A, m_B) bring the shared pure
/// state to standard form. Throws SingularBellMatrix or UnsupportedState.
OptimalLocalOps optimal_local_ops(const CovarianceMatrix2Mode& shared,
                                  const SymplecticMat4& bell);

/// Photon noise of a standard-form state (a, c) under s_A, s_B:
///   (a/2) Tr(s~A s~A^T + sB sB^T) - c Tr(s~A sB^T),  s~A = s3 sA s3.
/// Throws std::invalid_argument unless a >= 1/2, c >= 0, a^2 - c^2 = 1/4.
double noise_standard_form(double a, double c, const SymplecticMat2& s_a,
                           const SymplecticMat2& s_b);

/// The same noise after Bloch-Messiah substitution s~A = P(alpha) S(rA) P(beta),
/// sB = P(gamma) S(rB) P(delta):
///   2a cosh r+ cosh r- - c [(cosh r+ + cosh r-) cos t+ + (cosh r+ - cosh r-) cos t-]
/// with r+- = rA +- rB and t+- = alpha +- beta - gamma -+ delta.
double noise_bloch_messiah(double a, double c, double r_a, double r_b,
                           double theta_plus, double theta_minus);

/// Noise on the boundary cosh r+ = cosh r-: 2 cosh r+ (a cosh r+ - c cos t+).
double noise_boundary(double a, double c, double r_plus, double theta_plus);

/// (a, c) of a pure standard form with squeezing kappa.
std::pair<double, double> tms_parameters(double kappa);

// ---------------------------------------------------------------------------
// Numeric oracles.

enum class GainObjective { kMinV, kMaxT };

const char* to_string(GainObjective o);

struct GainSearchOptions {
  double lo = 0.01;
  double hi = 10.0;
  int grid = 200;
};

/// Coarse log-spaced grid over (G_x, G_p) followed by Nelder-Mead refinement
/// in log-gain coordinates. Residuals are reported against the closed form.
OptimumResult oracle_gain_search(double g, double g_prime,
                                 GainObjective objective,
                                 const GainSearchOptions& opts = {});

struct LocalOpsSearchOptions {
  int starts = 64;
  std::uint64_t seed = 20050101;
  double r_range = 2.0;
};

/// Multi-start Nelder-Mead over the six Bloch-Messiah parameters
/// (r_A, r_B, alpha, beta, gamma, delta) of noise_standard_form. The result
/// carries r_A, r_B, theta_plus (wrapped to (-pi, pi]) and the residual
/// against 2 (a - c).
OptimumResult oracle_local_ops_search(double a, double c,
                                      const LocalOpsSearchOptions& opts = {});

}  // namespace cvtl
