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

#include "unitary/rational.hpp"

#include <cctype>
#include <cstdio>

#include "unitary/errors.hpp"

namespace unitary {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Int parse_int(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw DomainError("not a rational number: '" + std::string(whole) + "'");
    Int v{std::string(s)};
    return negative ? Int(-v) : v;
}

}  // namespace

std::string rational_to_string(const Rational& q) {
    const Int num = numerator(q);
    const Int den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw DomainError("empty rational literal");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Int num = parse_int(s.substr(0, slash), s);
        Int den = parse_int(s.substr(slash + 1), s);
        if (den == 0) throw DomainError("zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    }

    // Decimal form: [sign] digits [. digits] [e|E [sign] digits]
    std::string_view mantissa = s;
    long long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = s.substr(0, e);
        Int ev = parse_int(s.substr(e + 1), s);
        if (ev < -18 * 1024 || ev > 18 * 1024)
            throw DomainError("exponent out of range in '" + std::string(s) + "'");
        exp10 = static_cast<long long>(ev);
    }

    std::string digits;
    bool negative = false;
    std::string_view m = mantissa;
    if (!m.empty() && (m.front() == '+' || m.front() == '-')) {
        negative = m.front() == '-';
        m.remove_prefix(1);
    }
    size_t frac_len = 0;
    if (auto dot = m.find('.'); dot != std::string_view::npos) {
        std::string_view ip = m.substr(0, dot);
        std::string_view fp = m.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw DomainError("not a rational number: '" + std::string(s) + "'");
        if (!ip.empty() && !all_digits(ip))
            throw DomainError("not a rational number: '" + std::string(s) + "'");
        if (!fp.empty() && !all_digits(fp))
            throw DomainError("not a rational number: '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_len = fp.size();
    } else {
        if (!all_digits(m))
            throw DomainError("not a rational number: '" + std::string(s) + "'");
        digits = std::string(m);
    }
    if (digits.empty()) throw DomainError("not a rational number: '" + std::string(s) + "'");

    Int num(digits);
    if (negative) num = -num;
    Int den = 1;
    long long shift = exp10 - static_cast<long long>(frac_len);
    if (shift >= 0) {
        num *= boost::multiprecision::pow(Int(10), static_cast<unsigned>(shift));
    } else {
        den = boost::multiprecision::pow(Int(10), static_cast<unsigned>(-shift));
    }
    return Rational(num, den);
}

Int binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        result *= Int(n - k + i);
        result /= Int(i);
    }
    return result;
}

Rational rational_pow(const Rational& base, uint64_t exponent) {
    Rational result = 1;
    Rational b = base;
    uint64_t e = exponent;
    while (e) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

std::string format_real(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

}  // namespace unitary
