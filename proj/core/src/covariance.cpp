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

#include "cvtl/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "cvtl/errors.hpp"

namespace cvtl {
namespace {

Eigen::MatrixXd form_for(Eigen::Index n) {
  if (n == 2) return symplectic_form2();
  if (n == 4) return symplectic_form4();
  std::ostringstream os;
  os << "covariance matrix must be 2x2 or 4x4, got dimension " << n;
  throw std::invalid_argument(os.str());
}

void validate_covariance(const Eigen::Ref<const Eigen::MatrixXd>& v,
                         const char* what) {
  if (!v.allFinite()) {
    throw InvalidState(std::string(what) + " has non-finite entries");
  }
  const double asym = (v - v.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTol) {
    std::ostringstream os;
    os << what << " is not symmetric (asymmetry " << asym << ")";
    throw InvalidState(os.str());
  }
  const double margin = uncertainty_margin(v);
  if (margin < -kUncertaintyTol) {
    std::ostringstream os;
    os << what << " violates the uncertainty relation (min eigenvalue of "
       << "V + i Omega / 2 is " << margin << ")";
    throw InvalidState(os.str());
  }
}

// Symmetric inverse square root of a 2x2 positive-definite matrix.
Mat2 inverse_sqrt(const Mat2& m) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(m);
  return es.operatorInverseSqrt();
}

}  // namespace

double uncertainty_margin(const Eigen::Ref<const Eigen::MatrixXd>& v) {
  const Eigen::MatrixXd omega = form_for(v.rows());
  const Eigen::MatrixXcd h =
      v.cast<std::complex<double>>() +
      std::complex<double>(0.0, 0.5) * omega.cast<std::complex<double>>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool satisfies_uncertainty(const Eigen::Ref<const Eigen::MatrixXd>& v,
                           double tol) {
  if (!v.allFinite()) return false;
  if ((v - v.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) return false;
  return uncertainty_margin(v) >= -tol;
}

SingleModeCovariance::SingleModeCovariance(const Mat2& v) : v_(v) {
  validate_covariance(v, "single-mode covariance");
}

SingleModeCovariance SingleModeCovariance::coherent() {
  return SingleModeCovariance(0.5 * Mat2::Identity());
}

CovarianceMatrix2Mode::CovarianceMatrix2Mode(const Mat4& v) : v_(v) {
  validate_covariance(v, "two-mode covariance");
}

CovarianceMatrix2Mode CovarianceMatrix2Mode::vacuum() {
  return CovarianceMatrix2Mode(Unchecked{}, 0.5 * Mat4::Identity());
}

CovarianceMatrix2Mode CovarianceMatrix2Mode::transformed(
    const SymplecticMat4& m) const {
  const Mat4 out = m.matrix() * v_ * m.matrix().transpose();
  return CovarianceMatrix2Mode(Unchecked{}, 0.5 * (out + out.transpose()));
}

StandardFormResult two_mode_standard_form(const CovarianceMatrix2Mode& v,
                                          const StandardFormOptions& opts) {
  const Mat4& m = v.matrix();
  const double scale = std::max(1.0, std::pow(m.cwiseAbs().maxCoeff(), 4));
  const double det = m.determinant();
  if (std::abs(det - 1.0 / 16.0) > opts.purity_tol * scale) {
    std::ostringstream os;
    os << "standard form needs a pure state (det V = 1/16), got det V = "
       << det;
    if (det > 1.0 / 16.0) throw UnsupportedState(os.str());
    throw InvalidState(os.str());
  }

  const Mat2 block_a = v.a();
  const Mat2 block_b = v.b();
  const double a = std::sqrt(block_a.determinant());
  const double a_b = std::sqrt(block_b.determinant());

  // sqrt(a) A^(-1/2) has unit determinant and maps A to a I.
  const Mat2 sym_a = std::sqrt(a) * inverse_sqrt(block_a);
  const Mat2 sym_b = std::sqrt(a_b) * inverse_sqrt(block_b);

  // For a pure state the rotated C' = m_A C m_B^T is c times an orthogonal
  // matrix; a phase on A turns it into c diag(-1, 1).
  const Mat2 c_prime = sym_a * v.c() * sym_b.transpose();
  const double c = std::sqrt(std::abs(v.c().determinant()));
  Mat2 phase_a = Mat2::Identity();
  if (c > 1e-14) {
    Eigen::JacobiSVD<Mat2> svd(c_prime, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Mat2 polar = svd.matrixU() * svd.matrixV().transpose();
    const Mat2 target = Eigen::Vector2d(-1.0, 1.0).asDiagonal();
    phase_a = target * polar.transpose();
    if (phase_a.determinant() < 0.0) {
      // C' with positive determinant only occurs off the pure manifold.
      throw UnsupportedState("cross-correlation block has the wrong sign "
                             "structure for a pure two-mode state");
    }
  }

  StandardFormResult out;
  out.m_a = SymplecticMat2(phase_a * sym_a, 1e-9);
  out.m_b = SymplecticMat2(sym_b, 1e-9);
  out.v_tms = v.transformed(direct_sum(out.m_a, out.m_b)).matrix();
  out.a = a;
  out.c = c;
  out.kappa = 0.5 * std::acosh(std::max(1.0, 2.0 * a));
  return out;
}

double purity(const Mat2& v_reduced, double tol) {
  if ((v_reduced - v_reduced.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol) {
    throw InvalidState("reduced covariance is not symmetric");
  }
  double det = v_reduced.determinant();
  if (det < 0.25 - tol || !std::isfinite(det)) {
    std::ostringstream os;
    os << "reduced covariance has det " << det << " < 1/4";
    throw InvalidState(os.str());
  }
  det = std::max(det, 0.25);
  return 1.0 / (2.0 * std::sqrt(det));
}

}  // namespace cvtl
