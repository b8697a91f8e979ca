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

#include "unitary/summation.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "unitary/errors.hpp"

namespace unitary {

Rational g_sum_direct(const UnitaryIdeal& s, const MultiplicativeFunction& g) {
    Rational total = 0;
    for (uint64_t m : s.elements()) total += g.evaluate(m);
    return total;
}

Rational g_sum_fvector(const FVector& f, const Rational& c) {
    Rational total = 1;
    Rational power = c;
    for (uint64_t entry : f.entries) {
        total += power * Int(entry);
        power *= c;
    }
    return total;
}

Rational g_sum_inclusion_exclusion(const std::vector<std::vector<uint64_t>>& facets,
                                   const MultiplicativeFunction& g, size_t facet_cap) {
    const size_t ell = facets.size();
    if (ell == 0) return 0;
    if (ell > facet_cap)
        throw CapacityError("inclusion-exclusion over " + std::to_string(ell) +
                            " facets exceeds the cap of " + std::to_string(facet_cap) +
                            " (the walk visits 2^ell subsets)");

    // Distinct vertices across all facets, as bit positions.
    std::map<uint64_t, size_t> column;
    for (const auto& w : facets)
        for (uint64_t q : w) column.emplace(q, 0);
    size_t idx = 0;
    std::vector<Rational> weight(column.size());  // 1 + g(q) per vertex
    for (auto& [q, col] : column) {
        col = idx;
        weight[idx] = 1 + g.at_prime_power_value(q);
        ++idx;
    }
    const size_t words = (column.size() + 63) / 64;

    std::vector<uint64_t> facet_bits(ell * words, 0);
    for (size_t i = 0; i < ell; ++i)
        for (uint64_t q : facets[i]) {
            const size_t c = column.at(q);
            facet_bits[i * words + c / 64] |= uint64_t(1) << (c % 64);
        }

    // inter[mask] = intersection of the chosen facets' vertex sets,
    // built from inter[mask without lowest bit].
    std::vector<uint64_t> inter((size_t(1) << ell) * words);
    Rational total = 0;
    for (uint64_t mask = 1; mask < (uint64_t(1) << ell); ++mask) {
        const uint64_t rest = mask & (mask - 1);
        const int low = std::countr_zero(mask);
        uint64_t* dst = &inter[mask * words];
        const uint64_t* lowbits = &facet_bits[size_t(low) * words];
        if (rest == 0) {
            std::copy(lowbits, lowbits + words, dst);
        } else {
            const uint64_t* prev = &inter[rest * words];
            for (size_t w = 0; w < words; ++w) dst[w] = prev[w] & lowbits[w];
        }
        Rational product = 1;
        for (size_t w = 0; w < words; ++w) {
            uint64_t bits = dst[w];
            while (bits) {
                product *= weight[w * 64 + std::countr_zero(bits)];
                bits &= bits - 1;
            }
        }
        if (std::popcount(mask) % 2 == 1)
            total += product;
        else
            total -= product;
    }
    return total;
}

KozlovVertex kozlov_vertex(uint64_t r, uint64_t level) {
    if (r < 1) throw DomainError("kozlov_vertex needs r >= 1");
    if (level < 1 || level > r)
        throw DomainError("kozlov_vertex level must lie in [1, r], got " + std::to_string(level));
    KozlovVertex v;
    v.r = r;
    v.level = level;
    v.entries.resize(r);
    for (uint64_t i = 1; i <= level; ++i) v.entries[i - 1] = binomial(r, i);
    return v;
}

PsiResult psi(uint64_t r, const Rational& c) {
    if (r < 1) throw DomainError("psi needs r >= 1");
    PsiResult result;
    result.k_values.reserve(r);
    Rational k = 0;
    Rational power = 1;
    for (uint64_t i = 1; i <= r; ++i) {
        power *= c;
        k += power * binomial(r, i);
        result.k_values.push_back(k);
    }
    result.argmax_level = 1;
    for (uint64_t i = 2; i <= r; ++i)
        if (result.k_values[i - 1] > result.k_values[result.argmax_level - 1])
            result.argmax_level = i;
    result.value = 1 + result.k_values[result.argmax_level - 1];
    return result;
}

Rational psi_piecewise(uint64_t r, const Rational& c) {
    if (r < 1) throw DomainError("psi_piecewise needs r >= 1");
    uint64_t level;
    if (c > 0) {
        level = r;
    } else if (c == 0) {
        throw DomainError("psi_piecewise: c = 0 lies on an interval boundary");
    } else {
        // For c < 0 the maximum sits on the even-indexed chain K_2, K_4, ...
        // K_{2i+2} overtakes K_{2i} exactly below the threshold
        // -(2i+2)/(r-2i-1), and the thresholds decrease with i.
        const uint64_t m = r / 2;
        if (m == 0) {
            level = 1;  // r = 1: K_1 is the only candidate
        } else {
            uint64_t crossed = 0;
            for (uint64_t i = 1; i + 1 <= m; ++i) {
                const Rational threshold(-Int(2 * i + 2), Int(r - 2 * i - 1));
                if (c == threshold)
                    throw DomainError("psi_piecewise: c = " + rational_to_string(c) +
                                      " lies on an interval boundary");
                if (c < threshold) ++crossed;
            }
            level = 2 * (crossed + 1);
        }
    }
    Rational total = 1;
    Rational power = 1;
    for (uint64_t i = 1; i <= level; ++i) {
        power *= c;
        total += power * binomial(r, i);
    }
    return total;
}

Rational psi_bruteforce(uint64_t r, const Rational& c) {
    if (r < 1) throw DomainError("psi_bruteforce needs r >= 1");
    if (r > 5)
        throw CapacityError("psi_bruteforce enumerates all complexes; r capped at 5");

    // Faces of size >= 2, ordered by (size, value); a face may only be
    // chosen once all its one-smaller subfaces of size >= 2 are chosen.
    std::vector<uint32_t> candidates;
    for (uint32_t mask = 0; mask < (1u << r); ++mask)
        if (std::popcount(mask) >= 2) candidates.push_back(mask);
    std::sort(candidates.begin(), candidates.end(), [](uint32_t a, uint32_t b) {
        if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
        return a < b;
    });
    std::vector<size_t> pos(size_t(1) << r, 0);
    for (size_t i = 0; i < candidates.size(); ++i) pos[candidates[i]] = i;

    std::vector<Rational> c_pow(r + 1);
    c_pow[0] = 1;
    for (uint64_t i = 1; i <= r; ++i) c_pow[i] = c_pow[i - 1] * c;

    const Rational base = 1 + Rational(Int(r)) * c;  // empty face + singletons
    Rational best = base;
    std::vector<bool> chosen(candidates.size(), false);
    auto rec = [&](auto&& self, size_t idx, const Rational& current) -> void {
        if (idx == candidates.size()) {
            if (current > best) best = current;
            return;
        }
        self(self, idx + 1, current);
        const uint32_t mask = candidates[idx];
        for (uint32_t v = 0; v < r; ++v) {
            if (!(mask >> v & 1)) continue;
            const uint32_t sub = mask ^ (1u << v);
            if (std::popcount(sub) >= 2 && !chosen[pos[sub]]) return;
        }
        chosen[idx] = true;
        self(self, idx + 1, current + c_pow[std::popcount(mask)]);
        chosen[idx] = false;
    };
    rec(rec, 0, base);
    return best;
}

}  // namespace unitary
