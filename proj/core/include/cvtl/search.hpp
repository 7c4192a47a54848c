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

#include <functional>

#include <Eigen/Dense>

namespace cvtl::search {

struct ScalarMinimum {
  double x = 0.0;
  double fx = 0.0;
  int evaluations = 0;
};

struct GoldenOptions {
  /// Stop once the bracket width is below tol * (1 + |x|).
  double tol = 1e-8;
  int max_iterations = 500;
};

/// Golden-section minimization of a unimodal f on [lo, hi].
ScalarMinimum golden_section(const std::function<double(double)>& f, double lo,
                             double hi, const GoldenOptions& opts = {});

/// Scans `points` grid nodes on [lo, hi] (log-spaced if `log_spaced`), brackets
/// the best node by its neighbours and refines with golden section.
ScalarMinimum bracket_and_minimize(const std::function<double(double)>& f,
                                   double lo, double hi, int points,
                                   bool log_spaced,
                                   const GoldenOptions& opts = {});

struct NelderMeadOptions {
  double initial_step = 0.25;
  /// Converged when the simplex spread in f and in x both fall below these.
  double f_tol = 1e-15;
  double x_tol = 1e-10;
  int max_evaluations = 20000;
  /// Restart from the best vertex this many times to escape collapse.
  int restarts = 2;
};

struct VectorMinimum {
  Eigen::VectorXd x;
  double fx = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Nelder-Mead simplex minimization (standard coefficients 1, 2, 1/2, 1/2).
VectorMinimum nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0,
                          const NelderMeadOptions& opts = {});

/// Central-difference gradient with step h.
Eigen::VectorXd central_gradient(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double h);

}  // namespace cvtl::search
