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

#include "cvtl/metrics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cvtl/errors.hpp"

namespace cvtl {
namespace {

void require_variance(double v, const char* what) {
  if (!(std::isfinite(v) && v >= 0.0)) {
    std::ostringstream os;
    os << what << " must be a finite non-negative variance, got " << v;
    throw std::invalid_argument(os.str());
  }
}

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive, got " << v;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

double cond_var_product(double var_x, double var_p) {
  require_variance(var_x, "<X^2>");
  require_variance(var_p, "<P^2>");
  return var_x * var_p;
}

double signal_transfer(double gx, double gp, double var_x, double var_p) {
  require_variance(var_x, "<X^2>");
  require_variance(var_p, "<P^2>");
  if (gx == 0.0 || gp == 0.0 || !std::isfinite(gx) || !std::isfinite(gp)) {
    throw std::invalid_argument(
        "signal transfer needs nonzero finite gains (output SNR undefined)");
  }
  const double gx2 = gx * gx;
  const double gp2 = gp * gp;
  return gx2 / (gx2 + 2.0 * var_x) + gp2 / (gp2 + 2.0 * var_p);
}

double fidelity_uncorrelated(double var_x, double var_p) {
  require_variance(var_x, "<X^2>");
  require_variance(var_p, "<P^2>");
  return 1.0 / std::sqrt((1.0 + var_x) * (1.0 + var_p));
}

double fidelity_gaussian(const Mat2& v_in, const Mat2& v_out) {
  const double det = (v_out + v_in).determinant();
  if (!(std::isfinite(det) && det > 0.0)) {
    std::ostringstream os;
    os << "det(V_out + V_in) = " << det << " is not positive";
    throw InvalidState(os.str());
  }
  return 1.0 / std::sqrt(det);
}

double fidelity_coherent(const AddedNoiseMatrix& noise) {
  const Mat2 n = noise.n();
  return 1.0 / std::sqrt(1.0 + 2.0 * n.trace() + 4.0 * n.determinant());
}

double photon_noise(const AddedNoiseMatrix& noise) { return noise.n().trace(); }

double qnd_fidelity(double g, double g_prime) {
  require_positive(g_prime, "g'");
  if (!(std::isfinite(g) && g >= 0.0)) {
    throw std::invalid_argument("g must be finite and >= 0");
  }
  const double inv = 1.0 / g_prime;
  const double u = g / g_prime - 1.0;
  const double d = g - g_prime;
  return 2.0 / std::sqrt((2.0 + inv * inv + u * u) * (3.0 + d * d));
}

double hk_fidelity(double g) {
  require_positive(g, "g");
  return 2.0 / std::sqrt(3.0 * (2.0 + 1.0 / (g * g)));
}

double improved_fidelity(double g) {
  if (!(std::isfinite(g) && g >= 0.0)) {
    throw std::invalid_argument("g must be finite and >= 0");
  }
  return 1.0 / (1.0 + std::hypot(1.0, g) - g);
}

double epr_fidelity(double kappa) { return 1.0 / (1.0 + std::exp(-2.0 * kappa)); }

double qnd_equivalent_kappa(double g) {
  return -0.5 * std::log(std::hypot(1.0, g) - g);
}

MetricsReport evaluate_metrics(const ProtocolResult& result,
                               const SingleModeCovariance& v_in) {
  MetricsReport r;
  r.gx = result.first_moment_map(0, 0);
  r.gp = result.first_moment_map(1, 1);
  const double vx = result.noise.var_x();
  const double vp = result.noise.var_p();
  r.v = cond_var_product(vx, vp);
  r.t = signal_transfer(r.gx, r.gp, vx, vp);
  r.f = fidelity_gaussian(v_in.matrix(), result.v_out);
  r.photon_noise = photon_noise(result.noise);
  r.flags.quantum_v = r.v < kClassicalV;
  r.flags.quantum_t = r.t > kClassicalT;
  r.flags.quantum_f = r.f > kClassicalF;
  return r;
}

MetricsReport evaluate_metrics(const ProtocolConfig& config,
                               const SingleModeCovariance& v_in) {
  return evaluate_metrics(run_protocol(config, v_in), v_in);
}

}  // namespace cvtl
