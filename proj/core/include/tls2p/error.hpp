// Copyright 2026 The tls2p Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TLS2P_ERROR_HPP_
#define TLS2P_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tls2p {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sampling grid does not cover the support a computation needs.
class GridTooShort : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its panel budget.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// A configuration value is missing, malformed or incompatible with the mode.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A density scale was requested that does not apply to the field.
class ScaleMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace tls2p

#endif  // TLS2P_ERROR_HPP_
