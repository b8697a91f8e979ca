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

#include "unitary/facets.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <unordered_map>

#include "unitary/errors.hpp"

namespace unitary {

namespace {

// m is a facet of [1..n] iff m * (smallest prime not dividing m) > n.
inline bool facet_test(uint64_t m, uint64_t n) {
    const uint64_t p = smallest_prime_not_dividing(m);
    return static_cast<__uint128_t>(m) * p > n;
}

uint64_t count_block(uint64_t lo, uint64_t hi, uint64_t n) {
    uint64_t count = 0;
    for (uint64_t m = lo; m < hi; ++m)
        if (facet_test(m, n)) ++count;
    return count;
}

}  // namespace

bool is_facet_in_interval(uint64_t m, uint64_t n) {
    if (m == 0 || n == 0) throw DomainError("is_facet_in_interval needs positive integers");
    if (m > n)
        throw DomainError(std::to_string(m) + " is not in [1.." + std::to_string(n) + "]");
    return facet_test(m, n);
}

void for_each_facet(uint64_t n, const std::function<void(uint64_t)>& visit) {
    if (n == 0) throw DomainError("for_each_facet needs n >= 1");
    for (uint64_t m = 1; m <= n; ++m)
        if (facet_test(m, n)) visit(m);
}

std::vector<uint64_t> enumerate_facets(uint64_t n) {
    if (n > kFacetListCap)
        throw CapacityError("facet list capped at n = " + std::to_string(kFacetListCap) +
                            "; use the streaming visitor");
    std::vector<uint64_t> out;
    for_each_facet(n, [&](uint64_t m) { out.push_back(m); });
    return out;
}

uint64_t count_facets(uint64_t n, unsigned threads) {
    if (n == 0) throw DomainError("count_facets needs n >= 1");
    if (threads <= 1 || n < 1u << 16) return count_block(1, n + 1, n);
    const uint64_t block = (n + threads - 1) / threads;
    std::vector<std::future<uint64_t>> parts;
    for (uint64_t lo = 1; lo <= n; lo += block) {
        const uint64_t hi = std::min(n + 1, lo + block);
        parts.push_back(std::async(std::launch::async, count_block, lo, hi, n));
    }
    uint64_t total = 0;
    for (auto& p : parts) total += p.get();
    return total;
}

Rational facet_density(uint64_t n, unsigned threads) {
    return Rational(Int(count_facets(n, threads)), Int(n));
}

GammaEstimate gamma_constant(double truncation_bound) {
    if (!(truncation_bound > 0)) throw DomainError("truncation bound must be positive");
    const Rational bound(truncation_bound);

    GammaEstimate est;
    est.truncation_bound = truncation_bound;
    est.series_value = Rational(1, 2);

    // More than enough primes: the i-th term is below 1/primorial(i).
    const auto primes = primes_up_to(1000);
    Rational primorial = 1;
    for (size_t i = 0; i + 1 < primes.size(); ++i) {
        primorial *= primes[i];
        const Rational term =
            (Rational(1, primes[i]) - Rational(1, primes[i + 1])) / primorial;
        if (term < bound) break;
        est.series_value += term;
        ++est.terms_used;
    }
    return est;
}

FacetMatrix facet_matrix(uint64_t n, uint64_t cap) {
    if (n == 0) throw DomainError("facet_matrix needs n >= 1");
    if (n > cap)
        throw CapacityError("facet matrix capped at n = " + std::to_string(cap));

    FacetMatrix m;
    m.n = n;
    for (const auto& q : prime_powers_up_to(n)) m.prime_powers.push_back(q.value);
    std::unordered_map<uint64_t, uint32_t> column;
    column.reserve(m.prime_powers.size() * 2);
    for (uint32_t j = 0; j < m.prime_powers.size(); ++j) column.emplace(m.prime_powers[j], j);

    std::optional<SpfTable> table;
    if (n >= 64) table.emplace(SpfTable::build(n));

    for_each_facet(n, [&](uint64_t w) {
        m.facet_values.push_back(w);
        std::vector<uint32_t> row;
        const auto comps = table ? unitary_components(w, *table) : unitary_components(w);
        row.reserve(comps.size());
        for (const auto& c : comps) row.push_back(column.at(c.value));
        std::sort(row.begin(), row.end());
        m.rows.push_back(std::move(row));
    });
    return m;
}

std::string facet_matrix_csv(const FacetMatrix& m) {
    std::ostringstream out;
    out << "facet";
    for (uint64_t q : m.prime_powers) out << ',' << q;
    out << '\n';
    for (size_t i = 0; i < m.rows.size(); ++i) {
        out << m.facet_values[i];
        size_t next = 0;
        for (size_t j = 0; j < m.prime_powers.size(); ++j) {
            const bool one = next < m.rows[i].size() && m.rows[i][next] == j;
            if (one) ++next;
            out << ',' << (one ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

namespace {

struct Best {
    uint64_t argmax = 0;
    Rational value;
    bool set = false;

    void offer(uint64_t m, Rational v) {
        if (!set || v > value || (v == value && m < argmax)) {
            argmax = m;
            value = std::move(v);
            set = true;
        }
    }
    void merge(const Best& other) {
        if (other.set) offer(other.argmax, other.value);
    }
};

Best scan_naive(uint64_t lo, uint64_t hi, const MultiplicativeFunction& g,
                const SpfTable* table) {
    Best best;
    for (uint64_t m = lo; m < hi; ++m) {
        const auto comps = table ? unitary_components(m, *table) : unitary_components(m);
        Rational v = 1;
        for (const auto& q : comps) v *= g.at_prime_power(q);
        best.offer(m, std::move(v));
    }
    return best;
}

}  // namespace

MaximizeResult maximize_on_interval(uint64_t n, const MultiplicativeFunction& g,
                                    MaxStrategy strategy, unsigned threads) {
    if (n == 0) throw DomainError("maximize_on_interval needs n >= 1");

    if (strategy == MaxStrategy::facet) {
        // The facet route is only sound when supersets never decrease g.
        for (const auto& q : prime_powers_up_to(n)) {
            if (g.at_prime_power(q) < 1)
                throw DomainError(
                    "facet strategy requires a log-positive function, but g(" +
                    std::to_string(q.value) + ") = " + rational_to_string(g.at_prime_power(q)) +
                    " < 1; use the naive strategy");
        }
        std::optional<SpfTable> table;
        if (n >= 64 && n <= kFacetListCap) table.emplace(SpfTable::build(n));
        Best best;
        for_each_facet(n, [&](uint64_t w) {
            const auto comps = table ? unitary_components(w, *table) : unitary_components(w);
            Rational v = 1;
            for (const auto& q : comps) v *= g.at_prime_power(q);
            best.offer(w, std::move(v));
        });
        return MaximizeResult{best.argmax, best.value};
    }

    std::optional<SpfTable> table;
    if (n >= 64 && n <= kFacetListCap) table.emplace(SpfTable::build(n));
    const SpfTable* t = table ? &*table : nullptr;
    if (threads <= 1 || n < 1u << 12) {
        Best best = scan_naive(1, n + 1, g, t);
        return MaximizeResult{best.argmax, best.value};
    }
    const uint64_t block = (n + threads - 1) / threads;
    std::vector<std::future<Best>> parts;
    for (uint64_t lo = 1; lo <= n; lo += block) {
        const uint64_t hi = std::min(n + 1, lo + block);
        parts.push_back(std::async(std::launch::async,
                                   [lo, hi, &g, t] { return scan_naive(lo, hi, g, t); }));
    }
    Best best;
    for (auto& p : parts) best.merge(p.get());
    return MaximizeResult{best.argmax, best.value};
}

}  // namespace unitary
