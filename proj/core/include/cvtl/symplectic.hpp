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

#include <Eigen/Dense>

namespace cvtl {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Vec2 = Eigen::Vector2d;

/// Default entrywise tolerance for the symplectic condition.
inline constexpr double kSymplecticTol = 1e-12;

/// J = [[0, 1], [-1, 0]].
Mat2 symplectic_form2();
/// Omega = J (+) J for quadrature ordering (x1, p1, x2, p2).
Mat4 symplectic_form4();
/// sigma_3 = diag(1, -1). Not symplectic; used to flip the momentum sign.
Mat2 pauli_z();

/// Largest entrywise deviation of M Omega M^T from Omega (M is 2x2 or 4x4).
double symplectic_defect(const Eigen::Ref<const Eigen::MatrixXd>& m);

/// True iff M is 2x2 or 4x4 and M Omega M^T matches Omega entrywise to `tol`.
/// Throws std::invalid_argument for any other shape.
bool is_symplectic(const Eigen::Ref<const Eigen::MatrixXd>& m,
                   double tol = kSymplecticTol);

/// Single-mode symplectic matrix (det = 1). Construction from a raw matrix
/// validates the symplectic condition; products and inverses stay closed.
class SymplecticMat2 {
 public:
  SymplecticMat2() : m_(Mat2::Identity()) {}
  explicit SymplecticMat2(const Mat2& m, double tol = kSymplecticTol);

  static SymplecticMat2 identity() { return SymplecticMat2(); }

  const Mat2& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  /// S^-1 = -J S^T J.
  SymplecticMat2 inverse() const;
  SymplecticMat2 transpose() const;

  friend SymplecticMat2 operator*(const SymplecticMat2& a,
                                  const SymplecticMat2& b) {
    return SymplecticMat2(Unchecked{}, a.m_ * b.m_);
  }

 private:
  struct Unchecked {};
  SymplecticMat2(Unchecked, const Mat2& m) : m_(m) {}
  Mat2 m_;
};

/// Two-mode symplectic matrix acting on (x1, p1, x2, p2).
class SymplecticMat4 {
 public:
  SymplecticMat4() : m_(Mat4::Identity()) {}
  explicit SymplecticMat4(const Mat4& m, double tol = kSymplecticTol);

  static SymplecticMat4 identity() { return SymplecticMat4(); }

  const Mat4& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  SymplecticMat4 inverse() const;

  friend SymplecticMat4 operator*(const SymplecticMat4& a,
                                  const SymplecticMat4& b) {
    return SymplecticMat4(Unchecked{}, a.m_ * b.m_);
  }

  friend SymplecticMat4 direct_sum(const SymplecticMat2& a,
                                   const SymplecticMat2& b);

 private:
  struct Unchecked {};
  SymplecticMat4(Unchecked, const Mat4& m) : m_(m) {}
  Mat4 m_;
};

/// Local operation S_A (+) S_B on modes (A, B).
SymplecticMat4 direct_sum(const SymplecticMat2& a, const SymplecticMat2& b);

/// Squeezer S(r) = diag(e^r, e^-r).
SymplecticMat2 make_squeezer(double r);

/// Phase shift P(u) = [[cos u, -sin u], [sin u, cos u]].
SymplecticMat2 make_phase(double u);

/// Heisenberg map of the QND coupling -kappa x_A p_B with g = kappa t:
///   x_A -> x_A, p_A -> p_A + g p_B, x_B -> x_B - g x_A, p_B -> p_B.
SymplecticMat4 make_qnd(double g);

/// Bell-stage QND coupling on (x_A, p_A, x_in, p_in), built from its detected
/// outputs x'_in = x_in + g' x_A and p''_A = p_A - g' p_in.
SymplecticMat4 make_bell_qnd(double g_prime);

/// Unbalanced beam splitter on (x_A, p_A, x_in, p_in) with transmissivity T
/// and reflectivity R (T^2 + R^2 = 1, 0 < T <= 1). Detected rows:
///   x'_in = R x_A + T x_in,   p''_A = T p_A - R p_in;
/// undetected rows complete an orthogonal mixer:
///   x''_A = T x_A - R x_in,   p'_in = R p_A + T p_in.
SymplecticMat4 make_beamsplitter(double transmissivity, double reflectivity);

/// S = P(alpha) S(r) P(beta).
struct BlochMessiahFactors {
  double alpha = 0.0;
  double r = 0.0;
  double beta = 0.0;

  SymplecticMat2 compose() const;
};

/// Bloch-Messiah (SVD) factorization of a single-mode symplectic matrix.
/// Canonical branch: r >= 0 with the larger singular value along x,
/// alpha in (-pi/2, pi/2], beta in (-pi, pi]. A pure rotation (r = 0) puts
/// the whole angle in alpha and sets beta = 0.
BlochMessiahFactors bloch_messiah_2x2(const SymplecticMat2& s);
/// Validating overload; throws std::invalid_argument if `s` is not symplectic.
BlochMessiahFactors bloch_messiah_2x2(const Mat2& s, double tol = 1e-10);

}  // namespace cvtl
