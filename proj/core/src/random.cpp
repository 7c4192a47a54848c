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

#include "cvtl/random.hpp"

#include <cmath>
#include <numbers>

namespace cvtl {

SymplecticMat2 random_symplectic2(std::mt19937_64& rng, double r_max) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(-r_max, r_max);
  const double alpha = angle(rng);
  const double r = squeeze(rng);
  const double beta = angle(rng);
  return make_phase(alpha) * make_squeezer(r) * make_phase(beta);
}

SymplecticMat4 random_symplectic4(std::mt19937_64& rng, double r_max) {
  std::uniform_real_distribution<double> mix(-1.4, 1.4);
  std::uniform_real_distribution<double> coupling(-1.0, 1.0);
  const double theta = mix(rng);
  const auto l1 = direct_sum(random_symplectic2(rng, r_max), random_symplectic2(rng, r_max));
  const auto bs = make_beamsplitter(std::cos(theta), std::sin(theta));
  const auto l2 = direct_sum(random_symplectic2(rng, r_max), random_symplectic2(rng, r_max));
  const auto qnd = make_qnd(coupling(rng));
  const auto l3 = direct_sum(random_symplectic2(rng, r_max), random_symplectic2(rng, r_max));
  return l1 * bs * l2 * qnd * l3;
}

SymplecticMat4 random_bell_interaction(std::mt19937_64& rng, double r_max) {
  for (;;) {
    const SymplecticMat4 r = random_symplectic4(rng, r_max);
    Mat2 y;
    y << r(2, 2), r(2, 3), r(1, 2), r(1, 3);
    if (std::abs(y.determinant()) > 1e-3 * y.squaredNorm()) return r;
  }
}

}  // namespace cvtl
