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

// Integer kernels: deterministic primality, sieves, factorization into
// pairwise-coprime prime-power components, unitary divisibility.

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace unitary {

/// A prime power p^a with a >= 1. The number 1 is not a prime power.
struct PrimePower {
    uint64_t prime = 0;
    uint32_t exponent = 0;
    uint64_t value = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
    friend auto operator<=>(const PrimePower& a, const PrimePower& b) {
        return a.value <=> b.value;
    }
};

/// Smallest-prime-factor table for every integer in [2, limit].
/// Immutable once built; safe for concurrent reads.
class SpfTable {
 public:
    /// Builds the table with a linear sieve. limit must be >= 2; an
    /// allocation failure surfaces as CapacityError.
    static SpfTable build(uint64_t limit);

    uint64_t limit() const noexcept { return limit_; }
    uint32_t spf(uint64_t m) const { return spf_[m]; }
    bool covers(uint64_t m) const noexcept { return m >= 2 && m <= limit_; }

 private:
    uint64_t limit_ = 0;
    std::vector<uint32_t> spf_;
};

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(uint64_t n);

/// All primes <= n, ascending.
std::vector<uint32_t> primes_up_to(uint32_t n);

/// All prime powers <= n, ascending by value.
std::vector<PrimePower> prime_powers_up_to(uint64_t n);

/// The least prime p with p not dividing m. Defined for every m >= 1
/// (the answer is at most 53 for any 64-bit m).
uint64_t smallest_prime_not_dividing(uint64_t m);

/// Factors m into its prime-power components p^a with p^a || m, ascending
/// by value. m = 1 yields the empty set; m = 0 is a domain error. Inputs
/// whose factorization needs trial division past 10^8 raise CapacityError.
std::vector<PrimePower> unitary_components(uint64_t m);

/// Fast path: same result, using an SPF table that covers m.
std::vector<PrimePower> unitary_components(uint64_t m, const SpfTable& table);

/// True iff d | m and gcd(d, m/d) = 1.
bool is_unitary_divisor(uint64_t d, uint64_t m);

/// All unitary divisors of m (the 2^omega(m) subset products of its
/// components), ascending. Contains 1 and m.
std::vector<uint64_t> unitary_divisors(uint64_t m);

/// Interprets v as a prime power; throws DomainError if it is not one.
PrimePower prime_power_from_value(uint64_t v);

}  // namespace unitary
