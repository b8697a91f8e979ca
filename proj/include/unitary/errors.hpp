// Copyright 2026 The unitary authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace unitary {

/// Input outside an operation's domain (zero, malformed text, missing data).
class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured capacity bound (memory, enumeration size).
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A multiplicative function was evaluated at a prime power outside its support.
class UnsupportedVertexError : public DomainError {
 public:
  explicit UnsupportedVertexError(uint64_t prime_power)
      : DomainError("multiplicative function has no value at prime power " +
                    std::to_string(prime_power)),
        prime_power_(prime_power) {}

  uint64_t prime_power() const noexcept { return prime_power_; }

 private:
  uint64_t prime_power_;
};

}  // namespace unitary
