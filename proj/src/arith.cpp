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

#include "unitary/arith.hpp"

#include <algorithm>
#include <cmath>
#include <new>
#include <numeric>
#include <string>

#include "unitary/errors.hpp"

namespace unitary {

namespace {

// Product of the first 16 primes exceeds 2^64, so every 64-bit integer
// misses at least one of them.
constexpr uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                     23, 29, 31, 37, 41, 43, 47, 53};

// Trial division never walks past this bound; a composite cofactor whose
// factors all exceed it is rejected as out of range.
constexpr uint64_t kTrialDivisionLimit = 100'000'000;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t mod) {
    uint64_t result = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

uint64_t integer_root(uint64_t n, uint32_t k) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
    // std::pow can be off by one in either direction.
    while (r > 1) {
        __uint128_t p = 1;
        for (uint32_t i = 0; i < k && p <= n; ++i) p *= r;
        if (p <= n) break;
        --r;
    }
    while (true) {
        __uint128_t p = 1;
        for (uint32_t i = 0; i < k && p <= n; ++i) p *= (r + 1);
        if (p > n) break;
        ++r;
    }
    return r;
}

void push_component(std::vector<PrimePower>& out, uint64_t p, uint32_t a) {
    uint64_t v = 1;
    for (uint32_t i = 0; i < a; ++i) v *= p;
    out.push_back(PrimePower{p, a, v});
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // Deterministic witness set for the 64-bit range.
    const uint64_t d0 = n - 1;
    uint64_t d = d0;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == d0) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == d0) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint32_t> primes_up_to(uint32_t n) {
    std::vector<uint32_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (uint32_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            for (uint64_t j = static_cast<uint64_t>(i) * i; j <= n; j += i) composite[j] = true;
        }
    }
    return primes;
}

std::vector<PrimePower> prime_powers_up_to(uint64_t n) {
    std::vector<PrimePower> out;
    if (n < 2) return out;
    if (n > (uint64_t(1) << 32))
        throw CapacityError("prime power enumeration capped at 2^32, got " + std::to_string(n));
    const auto primes = primes_up_to(static_cast<uint32_t>(n));
    for (uint32_t p : primes) {
        uint64_t v = p;
        uint32_t a = 1;
        while (v <= n) {
            out.push_back(PrimePower{p, a, v});
            if (v > n / p) break;
            v *= p;
            ++a;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
    return out;
}

uint64_t smallest_prime_not_dividing(uint64_t m) {
    if (m == 0) throw DomainError("smallest_prime_not_dividing: m must be positive");
    for (uint64_t p : kSmallPrimes)
        if (m % p != 0) return p;
    // Unreachable for 64-bit m: the primorial of the table exceeds 2^64.
    throw CapacityError("smallest_prime_not_dividing: table exhausted");
}

SpfTable SpfTable::build(uint64_t limit) {
    if (limit < 2) throw DomainError("SpfTable limit must be at least 2");
    if (limit >= (uint64_t(1) << 32))
        throw CapacityError("SpfTable limit capped below 2^32, got " + std::to_string(limit));
    SpfTable t;
    t.limit_ = limit;
    try {
        t.spf_.assign(limit + 1, 0);
    } catch (const std::bad_alloc&) {
        throw CapacityError("SpfTable of limit " + std::to_string(limit) + " does not fit in memory");
    }
    std::vector<uint32_t> primes;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (t.spf_[i] == 0) {
            t.spf_[i] = static_cast<uint32_t>(i);
            primes.push_back(static_cast<uint32_t>(i));
        }
        for (uint32_t p : primes) {
            if (p > t.spf_[i] || i * p > limit) break;
            t.spf_[i * p] = p;
        }
    }
    return t;
}

std::vector<PrimePower> unitary_components(uint64_t m) {
    if (m == 0) throw DomainError("unitary_components: m must be positive");
    std::vector<PrimePower> out;
    if (m == 1) return out;

    uint64_t rest = m;
    auto strip = [&](uint64_t p) {
        if (rest % p != 0) return;
        uint32_t a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        push_component(out, p, a);
    };

    for (uint64_t p : kSmallPrimes) {
        strip(p);
        if (rest == 1) break;
    }
    if (rest > 1 && !is_prime(rest)) {
        for (uint64_t d = 59; d * d <= rest && d <= kTrialDivisionLimit; d += 2) {
            if (rest % d != 0) continue;
            strip(d);
            if (rest == 1 || is_prime(rest)) break;
        }
    }
    if (rest > 1) {
        if (is_prime(rest)) {
            push_component(out, rest, 1);
        } else {
            // Composite cofactor with all prime factors beyond the trial
            // range; only a perfect prime power can still be resolved.
            bool resolved = false;
            for (uint32_t k = 2; k <= 6 && !resolved; ++k) {
                uint64_t r = integer_root(rest, k);
                __uint128_t p = 1;
                for (uint32_t i = 0; i < k; ++i) p *= r;
                if (p == rest && is_prime(r)) {
                    push_component(out, r, k);
                    resolved = true;
                }
            }
            if (!resolved)
                throw CapacityError("factorization of " + std::to_string(m) +
                                    " exceeds the trial-division range");
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
    return out;
}

std::vector<PrimePower> unitary_components(uint64_t m, const SpfTable& table) {
    if (m == 0) throw DomainError("unitary_components: m must be positive");
    std::vector<PrimePower> out;
    if (m == 1) return out;
    if (!table.covers(m)) return unitary_components(m);
    uint64_t rest = m;
    while (rest > 1) {
        const uint64_t p = table.spf(rest);
        uint32_t a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        push_component(out, p, a);
    }
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.value < b.value; });
    return out;
}

bool is_unitary_divisor(uint64_t d, uint64_t m) {
    if (d == 0 || m == 0) throw DomainError("is_unitary_divisor: arguments must be positive");
    if (m % d != 0) return false;
    return std::gcd(d, m / d) == 1;
}

std::vector<uint64_t> unitary_divisors(uint64_t m) {
    const auto components = unitary_components(m);
    std::vector<uint64_t> divisors{1};
    divisors.reserve(size_t(1) << components.size());
    for (const auto& c : components) {
        const size_t n = divisors.size();
        for (size_t i = 0; i < n; ++i) divisors.push_back(divisors[i] * c.value);
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

PrimePower prime_power_from_value(uint64_t v) {
    const auto components = unitary_components(v);
    if (components.size() != 1 || components[0].value != v)
        throw DomainError(std::to_string(v) + " is not a prime power");
    return components[0];
}

}  // namespace unitary
