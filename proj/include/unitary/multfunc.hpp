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

// Multiplicative arithmetic functions, modeled by their exact rational
// values on prime powers. g(1) = 1 implicitly; g(m) is the product of the
// values at the unitary components of m.

#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "unitary/arith.hpp"
#include "unitary/ideal.hpp"
#include "unitary/rational.hpp"

namespace unitary {

class MultiplicativeFunction {
 public:
    using Generator = std::function<Rational(const PrimePower&)>;

    /// Explicit finite support: map from prime-power value to g(p^a).
    /// Keys are validated to be prime powers.
    static MultiplicativeFunction from_values(std::map<uint64_t, Rational> values,
                                              std::string name = {});

    /// Total function backed by a pure generator (value computed on demand
    /// for any prime power).
    static MultiplicativeFunction from_generator(Generator gen, std::string name);

    /// Built-ins: "two_omega" (g(p^a) = 2), "sigma_over_n"
    /// (g(p^a) = (p^{a+1}-1) / (p^a (p-1))), "const:c" (g(p^a) = c).
    static MultiplicativeFunction builtin(std::string_view name);

    /// Parses the newline-delimited function file format: one "p^a = value"
    /// entry per line ("p" alone means exponent 1); values are exact
    /// rationals ("3/2") or decimals; '#' starts a comment.
    static MultiplicativeFunction parse(std::string_view text);

    /// Serializes an explicit-support function back to the file format.
    std::string to_text() const;

    const std::string& name() const noexcept { return name_; }
    bool generator_backed() const noexcept { return static_cast<bool>(generator_); }

    /// Value at a prime power; UnsupportedVertexError when outside the
    /// support of an explicit-map function.
    Rational at_prime_power(const PrimePower& q) const;
    Rational at_prime_power_value(uint64_t q) const;

    /// g(m) = product over the unitary components of m. evaluate(1) = 1.
    Rational evaluate(uint64_t m) const;

    /// Value at a face given by its vertex prime powers.
    Rational evaluate_face(std::span<const PrimePower> vertices) const;

 private:
    std::map<uint64_t, Rational> values_;  // keyed by prime-power value
    Generator generator_;
    std::string name_;
};

struct Classification {
    bool log_positive = false;           // g >= 1 on every vertex of S
    bool strictly_log_positive = false;  // g > 1 on every vertex of S
    bool injective_on_s = false;         // no two elements of S share a value
};

/// Classifies g relative to an ideal. Injectivity is decided by evaluating
/// g on all elements, so S must be materializable.
Classification classify(const MultiplicativeFunction& g, const UnitaryIdeal& s);

/// The facet-separating function: 2 on the given vertices, 1 + epsilon
/// elsewhere. With epsilon = 0 it is log-positive and attains its strict
/// maximum exactly on the chosen facet; a small positive epsilon (1/100 is
/// plenty below any realistic facet size) makes it strictly log-positive
/// while keeping that property.
MultiplicativeFunction facet_separator(std::span<const uint64_t> facet_vertices,
                                       const Rational& epsilon = Rational(0));

}  // namespace unitary
