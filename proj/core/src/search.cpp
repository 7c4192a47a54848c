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

#include "cvtl/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cvtl::search {

ScalarMinimum golden_section(const std::function<double(double)>& f, double lo,
                             double hi, const GoldenOptions& opts) {
  if (!(lo < hi)) throw std::invalid_argument("golden section needs lo < hi");
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;

  ScalarMinimum out;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  out.evaluations = 2;
  for (int it = 0; it < opts.max_iterations; ++it) {
    const double mid = 0.5 * (a + b);
    if (b - a <= opts.tol * (1.0 + std::abs(mid))) break;
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
    ++out.evaluations;
  }
  if (f1 <= f2) {
    out.x = x1;
    out.fx = f1;
  } else {
    out.x = x2;
    out.fx = f2;
  }
  return out;
}

ScalarMinimum bracket_and_minimize(const std::function<double(double)>& f,
                                   double lo, double hi, int points,
                                   bool log_spaced, const GoldenOptions& opts) {
  if (points < 3) throw std::invalid_argument("bracketing grid needs >= 3 points");
  if (log_spaced && !(lo > 0.0)) {
    throw std::invalid_argument("log-spaced grid needs lo > 0");
  }
  std::vector<double> xs(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    xs[i] = log_spaced ? lo * std::pow(hi / lo, t) : lo + t * (hi - lo);
  }
  std::vector<double> fs(points);
  std::transform(xs.begin(), xs.end(), fs.begin(), f);
  const auto best = std::distance(
      fs.begin(), std::min_element(fs.begin(), fs.end()));
  const int left = std::max<int>(0, static_cast<int>(best) - 1);
  const int right = std::min<int>(points - 1, static_cast<int>(best) + 1);

  ScalarMinimum out = golden_section(f, xs[left], xs[right], opts);
  out.evaluations += points;
  if (fs[best] < out.fx) {
    out.x = xs[best];
    out.fx = fs[best];
  }
  return out;
}

namespace {

struct Simplex {
  std::vector<Eigen::VectorXd> x;
  std::vector<double> f;

  void sort() {
    std::vector<std::size_t> idx(x.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return f[i] < f[j]; });
    std::vector<Eigen::VectorXd> xs;
    std::vector<double> fs;
    for (auto i : idx) {
      xs.push_back(x[i]);
      fs.push_back(f[i]);
    }
    x = std::move(xs);
    f = std::move(fs);
  }

  double f_spread() const { return std::abs(f.back() - f.front()); }

  double x_spread() const {
    double d = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
      d = std::max(d, (x[i] - x[0]).cwiseAbs().maxCoeff());
    }
    return d;
  }
};

}  // namespace

VectorMinimum nelder_mead(const std::function<double(const Eigen::VectorXd&)>& f,
                          const Eigen::VectorXd& x0,
                          const NelderMeadOptions& opts) {
  const auto n = x0.size();
  if (n == 0) throw std::invalid_argument("Nelder-Mead needs at least one variable");

  VectorMinimum out;
  out.x = x0;
  out.fx = f(x0);
  out.evaluations = 1;

  for (int round = 0; round <= opts.restarts; ++round) {
    Simplex s;
    s.x.push_back(out.x);
    s.f.push_back(out.fx);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::VectorXd v = out.x;
      v(i) += opts.initial_step;
      s.x.push_back(v);
      s.f.push_back(f(v));
      ++out.evaluations;
    }

    bool converged = false;
    while (out.evaluations < opts.max_evaluations) {
      s.sort();
      if (s.f_spread() <= opts.f_tol && s.x_spread() <= opts.x_tol) {
        converged = true;
        break;
      }
      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
      for (Eigen::Index i = 0; i < n; ++i) centroid += s.x[i];
      centroid /= static_cast<double>(n);

      const Eigen::VectorXd& worst = s.x[n];
      const Eigen::VectorXd xr = centroid + (centroid - worst);
      const double fr = f(xr);
      ++out.evaluations;

      if (fr < s.f[0]) {
        const Eigen::VectorXd xe = centroid + 2.0 * (centroid - worst);
        const double fe = f(xe);
        ++out.evaluations;
        if (fe < fr) {
          s.x[n] = xe;
          s.f[n] = fe;
        } else {
          s.x[n] = xr;
          s.f[n] = fr;
        }
        continue;
      }
      if (fr < s.f[n - 1]) {
        s.x[n] = xr;
        s.f[n] = fr;
        continue;
      }
      // Contraction: outside if the reflection improved on the worst point.
      const bool outside = fr < s.f[n];
      const Eigen::VectorXd xc = outside ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                                         : Eigen::VectorXd(centroid + 0.5 * (worst - centroid));
      const double fc = f(xc);
      ++out.evaluations;
      if (fc < (outside ? fr : s.f[n])) {
        s.x[n] = xc;
        s.f[n] = fc;
        continue;
      }
      // Shrink towards the best vertex.
      for (Eigen::Index i = 1; i <= n; ++i) {
        s.x[i] = s.x[0] + 0.5 * (s.x[i] - s.x[0]);
        s.f[i] = f(s.x[i]);
        ++out.evaluations;
      }
    }
    s.sort();
    const bool improved = s.f[0] < out.fx;
    if (s.f[0] <= out.fx) {
      out.x = s.x[0];
      out.fx = s.f[0];
    }
    out.converged = converged;
    if (!improved && round > 0) break;
  }
  return out;
}

Eigen::VectorXd central_gradient(
    const std::function<double(const Eigen::VectorXd&)>& f,
    const Eigen::VectorXd& x, double h) {
  Eigen::VectorXd grad(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x;
    Eigen::VectorXd xm = x;
    xp(i) += h;
    xm(i) -= h;
    grad(i) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return grad;
}

}  // namespace cvtl::search
