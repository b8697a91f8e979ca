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

#include "unitary/multfunc.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "unitary/errors.hpp"

namespace unitary {

MultiplicativeFunction MultiplicativeFunction::from_values(std::map<uint64_t, Rational> values,
                                                           std::string name) {
    for (const auto& [q, v] : values) {
        prime_power_from_value(q);  // validates
        (void)v;
    }
    MultiplicativeFunction f;
    f.values_ = std::move(values);
    f.name_ = std::move(name);
    return f;
}

MultiplicativeFunction MultiplicativeFunction::from_generator(Generator gen, std::string name) {
    MultiplicativeFunction f;
    f.generator_ = std::move(gen);
    f.name_ = std::move(name);
    return f;
}

MultiplicativeFunction MultiplicativeFunction::builtin(std::string_view name) {
    if (name == "two_omega") {
        return from_generator([](const PrimePower&) { return Rational(2); }, "two_omega");
    }
    if (name == "sigma_over_n") {
        return from_generator(
            [](const PrimePower& q) {
                const Int p = q.prime;
                const Int pa = boost::multiprecision::pow(p, q.exponent);
                return Rational(pa * p - 1, pa * (p - 1));
            },
            "sigma_over_n");
    }
    constexpr std::string_view kConstPrefix = "const:";
    if (name.substr(0, kConstPrefix.size()) == kConstPrefix) {
        const Rational c = rational_from_string(name.substr(kConstPrefix.size()));
        return from_generator([c](const PrimePower&) { return c; }, std::string(name));
    }
    throw DomainError("unknown builtin function '" + std::string(name) +
                      "' (expected two_omega, sigma_over_n, or const:c)");
}

MultiplicativeFunction MultiplicativeFunction::parse(std::string_view text) {
    std::map<uint64_t, Rational> values;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("function file line " + std::to_string(lineno) +
                              ": expected 'p^a = value'");
        std::string lhs = line.substr(0, eq);
        std::string rhs = line.substr(eq + 1);
        auto strip = [](std::string& s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        strip(lhs);
        strip(rhs);

        uint64_t p = 0, value = 0;
        uint32_t a = 1;
        try {
            if (auto caret = lhs.find('^'); caret != std::string::npos) {
                p = std::stoull(lhs.substr(0, caret));
                a = static_cast<uint32_t>(std::stoul(lhs.substr(caret + 1)));
            } else {
                p = std::stoull(lhs);
            }
        } catch (const std::exception&) {
            throw DomainError("function file line " + std::to_string(lineno) +
                              ": bad prime power '" + lhs + "'");
        }
        if (!is_prime(p) || a < 1)
            throw DomainError("function file line " + std::to_string(lineno) + ": '" + lhs +
                              "' is not a prime power");
        value = 1;
        for (uint32_t i = 0; i < a; ++i) {
            if (value > UINT64_MAX / p)
                throw DomainError("function file line " + std::to_string(lineno) +
                                  ": prime power overflows 64 bits");
            value *= p;
        }
        if (values.count(value))
            throw DomainError("function file line " + std::to_string(lineno) +
                              ": duplicate entry for " + std::to_string(value));
        values.emplace(value, rational_from_string(rhs));
    }
    return from_values(std::move(values));
}

std::string MultiplicativeFunction::to_text() const {
    if (generator_backed())
        throw DomainError("generator-backed function has no finite listing");
    std::ostringstream out;
    for (const auto& [q, v] : values_) {
        const auto pp = prime_power_from_value(q);
        out << pp.prime;
        if (pp.exponent > 1) out << '^' << pp.exponent;
        out << " = " << rational_to_string(v) << '\n';
    }
    return out.str();
}

Rational MultiplicativeFunction::at_prime_power(const PrimePower& q) const {
    if (auto it = values_.find(q.value); it != values_.end()) return it->second;
    if (generator_) return generator_(q);
    throw UnsupportedVertexError(q.value);
}

Rational MultiplicativeFunction::at_prime_power_value(uint64_t q) const {
    return at_prime_power(prime_power_from_value(q));
}

Rational MultiplicativeFunction::evaluate(uint64_t m) const {
    if (m == 0) throw DomainError("multiplicative functions are defined on positive integers");
    Rational result = 1;
    for (const auto& q : unitary_components(m)) result *= at_prime_power(q);
    return result;
}

Rational MultiplicativeFunction::evaluate_face(std::span<const PrimePower> vertices) const {
    Rational result = 1;
    for (const auto& q : vertices) result *= at_prime_power(q);
    return result;
}

Classification classify(const MultiplicativeFunction& g, const UnitaryIdeal& s) {
    Classification c;
    c.log_positive = true;
    c.strictly_log_positive = true;
    for (const auto& q : s.vertices()) {
        const Rational v = g.at_prime_power(q);
        if (v < 1) c.log_positive = false;
        if (v <= 1) c.strictly_log_positive = false;
    }
    std::vector<Rational> seen;
    seen.reserve(s.size());
    for (uint64_t m : s.elements()) seen.push_back(g.evaluate(m));
    std::sort(seen.begin(), seen.end());
    c.injective_on_s = std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    return c;
}

MultiplicativeFunction facet_separator(std::span<const uint64_t> facet_vertices,
                                       const Rational& epsilon) {
    if (epsilon < 0) throw DomainError("facet separator epsilon must be nonnegative");
    std::set<uint64_t> inside(facet_vertices.begin(), facet_vertices.end());
    const Rational off = 1 + epsilon;
    return MultiplicativeFunction::from_generator(
        [inside = std::move(inside), off](const PrimePower& q) {
            return inside.count(q.value) ? Rational(2) : off;
        },
        "facet_separator");
}

}  // namespace unitary
