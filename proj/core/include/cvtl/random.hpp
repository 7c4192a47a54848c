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

#include <random>

#include "cvtl/symplectic.hpp"

namespace cvtl {

/// P(alpha) S(r) P(beta) with alpha, beta uniform on [-pi, pi) and r uniform
/// on [-r_max, r_max].
SymplecticMat2 random_symplectic2(std::mt19937_64& rng, double r_max = 1.0);

/// Local operations, a beam splitter and a QND coupling composed in random
/// order-fixed layers. Entries stay O(e^(2 r_max)).
SymplecticMat4 random_symplectic4(std::mt19937_64& rng, double r_max = 0.5);

/// Random two-mode interaction whose detected-quadrature block Y is regular
/// (|det Y| > 1e-3 |Y|_F^2).
SymplecticMat4 random_bell_interaction(std::mt19937_64& rng, double r_max = 0.5);

}  // namespace cvtl
