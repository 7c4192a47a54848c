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

#include "cvtl/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cvtl/errors.hpp"

namespace cvtl {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) {
    std::ostringstream os;
    os << what << " must be positive and finite, got " << v;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

BellBeamSplitter BellBeamSplitter::from_asymmetry(double g_prime) {
  require_positive(g_prime, "beam splitter asymmetry R/T");
  const double norm = std::hypot(1.0, g_prime);
  return {1.0 / norm, g_prime / norm};
}

void validate(const BellInteraction& bell) {
  std::visit(
      Overloaded{
          [](const BellQnd& q) { require_positive(q.g_prime, "g'"); },
          [](const BellBeamSplitter& bs) {
            if (!(bs.transmissivity > 0.0 && bs.transmissivity < 1.0)) {
              std::ostringstream os;
              os << "Bell beam splitter needs 0 < T < 1, got T="
                 << bs.transmissivity;
              throw std::invalid_argument(os.str());
            }
            // Checks T^2 + R^2 = 1.
            (void)make_beamsplitter(bs.transmissivity, bs.reflectivity);
          },
          [](const BellGeneric& gen) { (void)extract_yz(gen.matrix); },
      },
      bell);
}

SymplecticMat4 bell_matrix(const BellInteraction& bell) {
  return std::visit(
      Overloaded{
          [](const BellQnd& q) { return make_bell_qnd(q.g_prime); },
          [](const BellBeamSplitter& bs) {
            return make_beamsplitter(bs.transmissivity, bs.reflectivity);
          },
          [](const BellGeneric& gen) { return gen.matrix; },
      },
      bell);
}

void ProtocolConfig::validate() const {
  if (!(std::isfinite(g) && g >= 0.0)) {
    std::ostringstream os;
    os << "entangling strength g must be finite and >= 0, got " << g;
    throw std::invalid_argument(os.str());
  }
  cvtl::validate(bell);
  if (const auto* s = std::get_if<ScalarGain>(&gains)) {
    if (!std::isfinite(s->gx) || !std::isfinite(s->gp)) {
      throw std::invalid_argument("scalar gains must be finite");
    }
  } else if (const auto* m = std::get_if<MatrixGain>(&gains)) {
    if (!m->g.allFinite()) {
      throw std::invalid_argument("gain matrix must be finite");
    }
  }
}

AddedNoiseMatrix::AddedNoiseMatrix(const Mat2& two_n) : two_n_(two_n) {
  if (!two_n.allFinite()) {
    throw InvalidState("added-noise matrix has non-finite entries");
  }
  const double scale = std::max(1.0, two_n.cwiseAbs().maxCoeff());
  if (std::abs(two_n(0, 1) - two_n(1, 0)) > kSymmetryTol * scale) {
    throw InvalidState("added-noise matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Mat2> es(two_n, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10 * scale) {
    std::ostringstream os;
    os << "added-noise matrix is not positive semidefinite (min eigenvalue "
       << es.eigenvalues().minCoeff() << ")";
    throw InvalidState(os.str());
  }
}

BellMatrices extract_yz(const SymplecticMat4& r) {
  // Rows: 3 -> x'_in, 2 -> p''_A; columns 3,4 -> (x_in, p_in), 1,2 -> mode A.
  BellMatrices out;
  out.y << r(2, 2), r(2, 3), r(1, 2), r(1, 3);
  out.z << r(2, 0), r(2, 1), r(1, 0), r(1, 1);
  const double scale = out.y.squaredNorm();
  if (!(std::abs(out.y.determinant()) > 1e-10 * scale) || scale == 0.0) {
    std::ostringstream os;
    os << "Bell interaction has singular detected-quadrature matrix Y "
       << "(det Y = " << out.y.determinant() << "); the measurement does not "
       << "resolve both input quadratures";
    throw SingularBellMatrix(os.str());
  }
  return out;
}

namespace {

Mat2 unity_gain(const Mat2& y) {
  const double det = y(1, 1) * y(0, 0) - y(1, 0) * y(0, 1);
  const double scale = y.squaredNorm();
  if (!(std::abs(det) > 1e-10 * scale) || scale == 0.0) {
    throw SingularBellMatrix("unity gain needs a regular Y");
  }
  Mat2 g;
  g << y(1, 1), -y(0, 1), -y(1, 0), y(0, 0);
  return g / det;
}

}  // namespace

Mat2 gain_matrix(const Mat2& y, const GainPolicy& policy) {
  return std::visit(
      Overloaded{
          [&](const UnityGain&) { return unity_gain(y); },
          [&](const ScalarGain& s) -> Mat2 {
            return Eigen::Vector2d(s.gx, s.gp).asDiagonal() * unity_gain(y);
          },
          [](const MatrixGain& m) { return m.g; },
      },
      policy);
}

SymplecticMat2 sigma_matrix(const Mat2& y, const Mat2& z) {
  const Mat2 sigma = pauli_z() * unity_gain(y) * z;
  const double scale = std::max(1.0, sigma.cwiseAbs().maxCoeff());
  return SymplecticMat2(sigma, 1e-10 * scale * scale);
}

QuadratureNoise added_noise_qnd_scalar(double g, double g_prime, double gx,
                                       double gp) {
  if (!(std::isfinite(g) && g >= 0.0)) {
    throw std::invalid_argument("g must be finite and >= 0");
  }
  require_positive(g_prime, "g'");
  const double dx = gx * g_prime - g;
  const double px = gp / g_prime;
  const double pb = 1.0 - gp * g / g_prime;
  return {(dx * dx + 1.0) / 2.0, (px * px + pb * pb) / 2.0};
}

CovarianceMatrix2Mode shared_state_qnd(double g) {
  if (!(std::isfinite(g) && g >= 0.0)) {
    throw std::invalid_argument("g must be finite and >= 0");
  }
  return CovarianceMatrix2Mode::vacuum().transformed(make_qnd(g));
}

ProtocolResult run_protocol(const CovarianceMatrix2Mode& shared,
                            const BellInteraction& bell,
                            const SymplecticMat2& s_a,
                            const SymplecticMat2& s_b, const GainPolicy& gains,
                            const SingleModeCovariance& v_in) {
  const BellMatrices yz = extract_yz(bell_matrix(bell));
  const Mat2 a = shared.a();
  const Mat2 b = shared.b();
  const Mat2 c = shared.c();
  const Mat2& sb = s_b.matrix();

  Mat2 two_n;
  Mat2 moments;
  if (std::holds_alternative<UnityGain>(gains)) {
    // 2N = s3 S~A A S~A^T s3 + SB B SB^T + s3 S~A C SB^T + SB C^T S~A^T s3
    const Mat2 s3 = pauli_z();
    const Mat2 st_a = (sigma_matrix(yz.y, yz.z) * s_a).matrix();
    const Mat2 cross = s3 * st_a * c * sb.transpose();
    two_n = s3 * st_a * a * st_a.transpose() * s3 + sb * b * sb.transpose() +
            cross + cross.transpose();
    moments = Mat2::Identity();
  } else {
    // Added noise G Z S_A xi_A + S_B xi_B for a general gain matrix G.
    const Mat2 gain = gain_matrix(yz.y, gains);
    Eigen::Matrix<double, 2, 4> l;
    l << gain * yz.z * s_a.matrix(), sb;
    two_n = l * shared.matrix() * l.transpose();
    moments = gain * yz.y;
  }
  two_n = 0.5 * (two_n + two_n.transpose()).eval();

  const Mat2 v_out =
      moments * v_in.matrix() * moments.transpose() + two_n;
  return {AddedNoiseMatrix(two_n), v_out, moments};
}

ProtocolResult run_protocol(const ProtocolConfig& config,
                            const SingleModeCovariance& v_in) {
  config.validate();
  return run_protocol(shared_state_qnd(config.g), config.bell, config.s_a,
                      config.s_b, config.gains, v_in);
}

}  // namespace cvtl
