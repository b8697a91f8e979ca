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

// Exact arbitrary-precision integers and rationals. All arithmetic that
// decides an order, a tie, or an argmax goes through these types; doubles
// appear only at output boundaries.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace unitary {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders q as "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

/// Parses "7", "-3/4", "1.25", "2.5e-3" into an exact rational.
/// Decimal inputs convert verbatim (1.25 becomes 5/4). Throws DomainError.
Rational rational_from_string(std::string_view text);

/// Binomial coefficient; zero when k > n.
Int binomial(uint64_t n, uint64_t k);

Rational rational_pow(const Rational& base, uint64_t exponent);

double rational_to_double(const Rational& q);

/// Formats a double with 15 significant digits.
std::string format_real(double x);

}  // namespace unitary
