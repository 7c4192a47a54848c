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

#include "cvtl/symplectic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cvtl {
namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << what << " must be finite, got " << v;
    throw std::invalid_argument(os.str());
  }
}

// Wraps an angle into (-pi, pi].
double wrap_angle(double u) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double w = std::remainder(u, kTwoPi);
  if (w <= -std::numbers::pi) w += kTwoPi;
  return w;
}

}  // namespace

Mat2 symplectic_form2() {
  Mat2 j;
  j << 0.0, 1.0, -1.0, 0.0;
  return j;
}

Mat4 symplectic_form4() {
  Mat4 omega = Mat4::Zero();
  omega.topLeftCorner<2, 2>() = symplectic_form2();
  omega.bottomRightCorner<2, 2>() = symplectic_form2();
  return omega;
}

Mat2 pauli_z() { return Eigen::Vector2d(1.0, -1.0).asDiagonal(); }

double symplectic_defect(const Eigen::Ref<const Eigen::MatrixXd>& m) {
  if (m.rows() == 2 && m.cols() == 2) {
    const Mat2 j = symplectic_form2();
    return (m * j * m.transpose() - j).cwiseAbs().maxCoeff();
  }
  if (m.rows() == 4 && m.cols() == 4) {
    const Mat4 omega = symplectic_form4();
    return (m * omega * m.transpose() - omega).cwiseAbs().maxCoeff();
  }
  std::ostringstream os;
  os << "symplectic check needs a 2x2 or 4x4 matrix, got " << m.rows() << "x"
     << m.cols();
  throw std::invalid_argument(os.str());
}

bool is_symplectic(const Eigen::Ref<const Eigen::MatrixXd>& m, double tol) {
  const double defect = symplectic_defect(m);
  return std::isfinite(defect) && defect <= tol;
}

SymplecticMat2::SymplecticMat2(const Mat2& m, double tol) : m_(m) {
  if (!is_symplectic(m, tol)) {
    std::ostringstream os;
    os << "matrix is not symplectic (defect " << symplectic_defect(m)
       << " > " << tol << ")";
    throw std::invalid_argument(os.str());
  }
}

SymplecticMat2 SymplecticMat2::inverse() const {
  const Mat2 j = symplectic_form2();
  return SymplecticMat2(Unchecked{}, -j * m_.transpose() * j);
}

SymplecticMat2 SymplecticMat2::transpose() const {
  return SymplecticMat2(Unchecked{}, m_.transpose());
}

SymplecticMat4::SymplecticMat4(const Mat4& m, double tol) : m_(m) {
  if (!is_symplectic(m, tol)) {
    std::ostringstream os;
    os << "matrix is not symplectic (defect " << symplectic_defect(m)
       << " > " << tol << ")";
    throw std::invalid_argument(os.str());
  }
}

SymplecticMat4 SymplecticMat4::inverse() const {
  const Mat4 omega = symplectic_form4();
  return SymplecticMat4(Unchecked{}, -omega * m_.transpose() * omega);
}

SymplecticMat4 direct_sum(const SymplecticMat2& a, const SymplecticMat2& b) {
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<2, 2>() = a.matrix();
  m.bottomRightCorner<2, 2>() = b.matrix();
  return SymplecticMat4(SymplecticMat4::Unchecked{}, m);
}

SymplecticMat2 make_squeezer(double r) {
  require_finite(r, "squeezing parameter");
  return SymplecticMat2(Eigen::Vector2d(std::exp(r), std::exp(-r)).asDiagonal());
}

SymplecticMat2 make_phase(double u) {
  require_finite(u, "phase");
  const double c = std::cos(u);
  const double s = std::sin(u);
  Mat2 m;
  m << c, -s, s, c;
  return SymplecticMat2(m);
}

SymplecticMat4 make_qnd(double g) {
  require_finite(g, "QND coupling");
  Mat4 m = Mat4::Identity();
  m(1, 3) = g;
  m(2, 0) = -g;
  return SymplecticMat4(m);
}

SymplecticMat4 make_bell_qnd(double g_prime) {
  require_finite(g_prime, "Bell QND coupling");
  Mat4 m = Mat4::Identity();
  m(1, 3) = -g_prime;  // p''_A = p_A - g' p_in
  m(2, 0) = g_prime;   // x'_in = x_in + g' x_A
  return SymplecticMat4(m);
}

SymplecticMat4 make_beamsplitter(double transmissivity, double reflectivity) {
  require_finite(transmissivity, "transmissivity");
  require_finite(reflectivity, "reflectivity");
  const double norm = std::hypot(transmissivity, reflectivity);
  const double t = transmissivity / norm;
  const double r = reflectivity / norm;
  if (std::abs(transmissivity * transmissivity + reflectivity * reflectivity - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "beam splitter needs T^2 + R^2 = 1, got T=" << transmissivity
       << " R=" << reflectivity;
    throw std::invalid_argument(os.str());
  }
  if (!(t > 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "beam splitter transmissivity must lie in (0, 1], got " << t;
    throw std::invalid_argument(os.str());
  }
  Mat4 m;
  // clang-format off
  m << t,  0.0, -r,  0.0,
       0.0, t,   0.0, -r,
       r,   0.0, t,   0.0,
       0.0, r,   0.0, t;
  // clang-format on
  return SymplecticMat4(m);
}

SymplecticMat2 BlochMessiahFactors::compose() const {
  return make_phase(alpha) * make_squeezer(r) * make_phase(beta);
}

BlochMessiahFactors bloch_messiah_2x2(const SymplecticMat2& s) {
  Eigen::JacobiSVD<Mat2> svd(s.matrix(), Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat2 u = svd.matrixU();
  Mat2 v = svd.matrixV();
  const Vec2 sv = svd.singularValues();

  BlochMessiahFactors f;
  // sv(0) * sv(1) = 1 for symplectic input; the ratio form is symmetric in
  // rounding between the two singular values.
  f.r = 0.5 * std::log(sv(0) / sv(1));
  if (!(f.r > 1e-13)) {
    f.r = 0.0;
    f.alpha = std::atan2(s(1, 0) - s(0, 1), s(0, 0) + s(1, 1));
    f.beta = 0.0;
    return f;
  }
  // det S = 1 forces det U = det V; flip both second columns if reflections.
  if (u.determinant() < 0.0) {
    u.col(1) *= -1.0;
    v.col(1) *= -1.0;
  }
  f.alpha = std::atan2(u(1, 0), u(0, 0));
  f.beta = -std::atan2(v(1, 0), v(0, 0));  // V^T = P(beta)

  // (U, V) -> (-U, -V) leaves S invariant and shifts both angles by pi.
  if (f.alpha <= -std::numbers::pi / 2 || f.alpha > std::numbers::pi / 2) {
    f.alpha = wrap_angle(f.alpha + std::numbers::pi);
    f.beta = wrap_angle(f.beta + std::numbers::pi);
  }
  f.beta = wrap_angle(f.beta);
  return f;
}

BlochMessiahFactors bloch_messiah_2x2(const Mat2& s, double tol) {
  return bloch_messiah_2x2(SymplecticMat2(s, tol));
}

}  // namespace cvtl
