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
#include <functional>
#include <optional>

// Reference computations used as independent oracles by the test suites.
// Nothing here calls into the library under test.
namespace cvtl::testing {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

/// Residual max|M Omega M^T - Omega| with Omega built locally.
double symplectic_residual(const Eigen::MatrixXd& m);

struct Propagation {
  Mat2 v_out;
  Mat2 first_moment_map;
  Mat2 two_n;
};

/// Heisenberg-picture propagation of the three modes (A, B, in). The shared
/// state comes from a QND coupling of two vacua, followed by local maps s_a,
/// s_b and the Bell interaction `bell` on (x_A, p_A, x_in, p_in). The detected
/// pair is (x_in', p_A'). Bob adds gain * detected to (x_B, p_B). Without an
/// explicit gain the unity-gain matrix is formed from the propagated rows.
Propagation propagate_three_modes(double g, const Mat2& s_a, const Mat2& s_b, const Mat4& bell,
                                  const std::optional<Mat2>& gain, const Mat2& v_in);

/// Input/output overlap 2 pi \int W_1 W_2 dx dp by tensor-product trapezoid
/// quadrature on [-half_width, half_width]^2.
double gaussian_overlap_quadrature(const Mat2& v1, const Mat2& v2, int points = 801,
                                   double half_width = 12.0);

struct GridMinimum {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Repeated grid refinement over log-spaced (x, y) in [lo, hi]^2: each round
/// keeps a window of +-2 cells around the best point.
GridMinimum log_grid_zoom_minimize(const std::function<double(double, double)>& f, double lo,
                                   double hi, int points = 41, int rounds = 30);

/// One-dimensional version of log_grid_zoom_minimize.
double log_grid_zoom_argmin(const std::function<double(double)>& f, double lo, double hi,
                            int points = 201, int rounds = 40);

/// Plain bisection for a sign change of f on [lo, hi].
double bisect_root(const std::function<double(double)>& f, double lo, double hi);

/// Richardson-extrapolated central difference.
double derivative(const std::function<double(double)>& f, double x, double h = 1e-3);

}  // namespace cvtl::testing
