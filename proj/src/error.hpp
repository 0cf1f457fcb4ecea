// Copyright 2026 The mpinli Authors
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

#ifndef MPINLI_ERROR_HPP_
#define MPINLI_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mpinli {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension or rank mismatch between tensors.
struct ShapeError : Error {
  using Error::Error;
};

// NaN/Inf produced by an operation; never propagated silently.
struct NumericError : Error {
  using Error::Error;
};

// Invalid configuration value or combination.
struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Malformed input data (JSONL, config file, checkpoint).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace mpinli

#endif  // MPINLI_ERROR_HPP_
