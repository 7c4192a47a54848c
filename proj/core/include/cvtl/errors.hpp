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

#include <stdexcept>
#include <string>

namespace cvtl {

/// A covariance matrix that violates the uncertainty relation or is
/// otherwise not a physical Gaussian state.
class InvalidState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A physical state outside what an algorithm supports (mixed input to
/// the two-mode standard form).
class UnsupportedState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The detected-quadrature matrix Y of a Bell interaction is singular, so
/// no gain matrix can restore the input first moments.
class SingularBellMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cvtl
