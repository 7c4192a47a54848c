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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "cvtl/covariance.hpp"
#include "cvtl/random.hpp"
#include "cvtl/symplectic.hpp"
#include "oracles.hpp"

namespace cvtl {
namespace {

using testing::symplectic_residual;

constexpr double kPi = std::numbers::pi;

TEST(Squeezer, IdentityAtZero) {
  EXPECT_EQ(make_squeezer(0.0).matrix(), Mat2::Identity());
}

TEST(Squeezer, LnTwoGivesTwoAndHalf) {
  const Mat2 s = make_squeezer(std::log(2.0)).matrix();
  EXPECT_NEAR(s(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(s(1, 1), 0.5, 1e-15);
  EXPECT_EQ(s(0, 1), 0.0);
  EXPECT_EQ(s(1, 0), 0.0);
}

TEST(Squeezer, OppositeSqueezingCancels) {
  for (double r : {-2.0, -0.3, 0.7, 3.0}) {
    const Mat2 p = (make_squeezer(r) * make_squeezer(-r)).matrix();
    EXPECT_LT((p - Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-12) << r;
  }
}

TEST(Squeezer, RejectsNonFinite) {
  EXPECT_THROW(make_squeezer(std::numeric_limits<double>::infinity()), std::invalid_argument);
  EXPECT_THROW(make_squeezer(std::nan("")), std::invalid_argument);
}

TEST(Phase, QuarterTurn) {
  Mat2 expected;
  expected << 0, -1, 1, 0;
  EXPECT_LT((make_phase(kPi / 2).matrix() - expected).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(make_phase(0.0).matrix(), Mat2::Identity());
}

TEST(Phase, GroupProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    const Mat2 lhs = (make_phase(a) * make_phase(b)).matrix();
    EXPECT_LT((lhs - make_phase(a + b).matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Phase, RejectsNonFinite) {
  EXPECT_THROW(make_phase(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(Qnd, ZeroCouplingIsIdentity) { EXPECT_EQ(make_qnd(0.0).matrix(), Mat4::Identity()); }

TEST(Qnd, HeisenbergRows) {
  const double g = 1.7;
  const Mat4 m = make_qnd(g).matrix();
  // (x_A, p_A, x_B, p_B) -> (x_A, p_A + g p_B, x_B - g x_A, p_B)
  Mat4 expected = Mat4::Identity();
  expected(1, 3) = g;
  expected(2, 0) = -g;
  EXPECT_EQ(m, expected);
}

TEST(Qnd, SymplecticForSampledCouplings) {
  for (double g : {0.5, 1.0, 2.5}) {
    EXPECT_LT(symplectic_residual(make_qnd(g).matrix()), 1e-12);
    EXPECT_TRUE(is_symplectic(make_qnd(g).matrix(), 1e-12));
  }
}

TEST(Qnd, UnitCouplingReducedPurity) {
  const auto v = CovarianceMatrix2Mode::vacuum().transformed(make_qnd(1.0));
  const Mat2 a = v.a();
  const double oracle = 1.0 / (2.0 * std::sqrt(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)));
  EXPECT_NEAR(oracle, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(purity(a), oracle, 1e-15);
}

TEST(BeamSplitter, TransparentIsIdentity) {
  EXPECT_LT((make_beamsplitter(1.0, 0.0).matrix() - Mat4::Identity()).cwiseAbs().maxCoeff(),
            1e-15);
}

TEST(BeamSplitter, DetectedRowsMatchMixingRelations) {
  const double t = 0.6, r = 0.8;
  const Mat4 m = make_beamsplitter(t, r).matrix();
  // x_in' = R x_A + T x_in ; p_A' = -R p_in + T p_A
  Eigen::RowVector4d x_in_row(r, 0, t, 0), p_a_row(0, t, 0, -r);
  EXPECT_LT((m.row(2) - x_in_row).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((m.row(1) - p_a_row).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(symplectic_residual(m), 1e-12);
}

TEST(BeamSplitter, AsymmetryRatio) {
  const double h = std::sqrt(0.5);
  const Mat4 bal = make_beamsplitter(h, h).matrix();
  EXPECT_NEAR(bal(2, 0) / bal(2, 2), 1.0, 1e-15);
  const Mat4 m = make_beamsplitter(0.6, 0.8).matrix();
  EXPECT_NEAR(m(2, 0) / m(2, 2), 4.0 / 3.0, 1e-15);
}

TEST(BeamSplitter, RejectsNonUnitNorm) {
  EXPECT_THROW(make_beamsplitter(0.6, 0.7), std::invalid_argument);
  EXPECT_THROW(make_beamsplitter(0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(make_beamsplitter(-0.6, 0.8), std::invalid_argument);
  EXPECT_NO_THROW(make_beamsplitter(0.6, 0.8 + 1e-11));
}

TEST(IsSymplectic, Examples) {
  EXPECT_TRUE(is_symplectic(Mat4::Identity(), 1e-12));
  EXPECT_FALSE(is_symplectic(Mat2(2.0 * Mat2::Identity()), 1e-12));
  EXPECT_TRUE(is_symplectic(make_qnd(2.5).matrix(), 1e-12));
}

TEST(IsSymplectic, WrongDimensionThrows) {
  EXPECT_THROW(is_symplectic(Eigen::Matrix3d::Identity(), 1e-12), std::invalid_argument);
  EXPECT_THROW(symplectic_defect(Eigen::MatrixXd::Identity(4, 2)), std::invalid_argument);
}

TEST(IsSymplectic, AgreesWithLocalResidual) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    Mat4 m;
    for (int k = 0; k < 16; ++k) m(k / 4, k % 4) = n(rng);
    EXPECT_NEAR(symplectic_defect(m), symplectic_residual(m), 1e-12);
  }
}

TEST(SymplecticMat2, ValidatingConstructor) {
  EXPECT_THROW(SymplecticMat2(Mat2(2.0 * Mat2::Identity())), std::invalid_argument);
  Mat2 shear;
  shear << 1, 3, 0, 1;
  EXPECT_NO_THROW(SymplecticMat2{shear});
}

TEST(SymplecticMat, InverseUndoes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto s2 = random_symplectic2(rng, 1.5);
    EXPECT_LT(((s2 * s2.inverse()).matrix() - Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-10);
    const auto s4 = random_symplectic4(rng);
    EXPECT_LT(((s4 * s4.inverse()).matrix() - Mat4::Identity()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Constructors, AllPassSymplecticCheck) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    EXPECT_LT(symplectic_residual(make_squeezer(x).matrix()), 1e-12 * std::exp(2 * std::abs(x)));
    EXPECT_LT(symplectic_residual(make_phase(x).matrix()), 1e-12);
    EXPECT_LT(symplectic_residual(make_qnd(x).matrix()), 1e-12);
    EXPECT_LT(symplectic_residual(make_bell_qnd(x).matrix()), 1e-12);
    const double th = 0.5 * (x + 3.0) / 6.0 * kPi;
    if (std::cos(th) > 0.0) {
      EXPECT_LT(symplectic_residual(make_beamsplitter(std::cos(th), std::sin(th)).matrix()),
                1e-12);
    }
  }
}

TEST(BlochMessiah, Identity) {
  const auto f = bloch_messiah_2x2(SymplecticMat2());
  EXPECT_NEAR(f.r, 0.0, 1e-15);
  EXPECT_NEAR(std::remainder(f.alpha + f.beta, 2 * kPi), 0.0, 1e-15);
}

TEST(BlochMessiah, DiagonalSqueezerIsCanonical) {
  const auto f = bloch_messiah_2x2(make_squeezer(std::log(2.0)));
  EXPECT_NEAR(f.r, std::log(2.0), 1e-14);
  EXPECT_NEAR(f.alpha, 0.0, 1e-14);
  EXPECT_NEAR(f.beta, 0.0, 1e-14);
}

TEST(BlochMessiah, NegativeSqueezingMovesToPositiveBranch) {
  const auto f = bloch_messiah_2x2(make_squeezer(-0.8));
  EXPECT_NEAR(f.r, 0.8, 1e-14);
  EXPECT_LT((f.compose().matrix() - make_squeezer(-0.8).matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BlochMessiah, PureRotationReconstructs) {
  const auto f = bloch_messiah_2x2(make_phase(2.2));
  EXPECT_NEAR(f.r, 0.0, 1e-12);
  EXPECT_LT((f.compose().matrix() - make_phase(2.2).matrix()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(BlochMessiah, RejectsNonSymplectic) {
  EXPECT_THROW(bloch_messiah_2x2(Mat2(2.0 * Mat2::Identity())), std::invalid_argument);
}

TEST(BlochMessiah, RandomRoundTrip) {
  std::mt19937_64 rng(20050101);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> sq(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = angle(rng), r = sq(rng), b = angle(rng);
    const Mat2 s = (make_phase(a) * make_squeezer(r) * make_phase(b)).matrix();
    const auto f = bloch_messiah_2x2(s);
    ASSERT_GE(f.r, 0.0);
    EXPECT_NEAR(f.r, std::abs(r), 1e-10);
    EXPECT_GT(f.alpha, -kPi / 2 - 1e-12);
    EXPECT_LE(f.alpha, kPi / 2 + 1e-12);
    EXPECT_LT((f.compose().matrix() - s).cwiseAbs().maxCoeff(), 1e-10);
  }
}

}  // namespace
}  // namespace cvtl
