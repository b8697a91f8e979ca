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

#include "unitary/orders.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

#include "unitary/errors.hpp"

namespace unitary {

namespace {

void validate_order(const TotalOrder& order) {
    if (order.r == 0 || order.r > 64) throw DomainError("vertex count must be in [1, 64]");
    std::set<FaceMask> seen;
    for (FaceMask f : order.sequence) {
        if (order.r < 64 && f >= (FaceMask(1) << order.r))
            throw DomainError("face uses a vertex beyond v_r");
        if (!seen.insert(f).second)
            throw DomainError("total order repeats a face");
    }
}

}  // namespace

std::vector<FaceMask> k_subsets(uint32_t r, uint32_t k) {
    if (r > 32) throw DomainError("k_subsets capped at r = 32");
    std::vector<FaceMask> out;
    for (FaceMask mask = 0; mask < (FaceMask(1) << r); ++mask)
        if (static_cast<uint32_t>(std::popcount(mask)) == k) out.push_back(mask);
    return out;
}

CoverPoset CoverPoset::boolean_poset(uint32_t r) {
    if (r < 1 || r > 16) throw DomainError("boolean poset supports 1 <= r <= 16");
    CoverPoset p;
    p.r_ = r;
    const size_t n = size_t(1) << r;
    p.elements_.resize(n);
    for (size_t mask = 0; mask < n; ++mask) p.elements_[mask] = mask;
    p.up_.resize(n);
    for (uint32_t mask = 0; mask < n; ++mask) {
        for (uint32_t k = 0; k < r; ++k) {
            if (mask >> k & 1) {
                // Bump v_{k+1} to v_{k+2} when that vertex is absent.
                if (k + 1 < r && !(mask >> (k + 1) & 1)) {
                    const uint32_t to = (mask ^ (1u << k)) | (1u << (k + 1));
                    p.covers_.emplace_back(mask, to);
                    p.up_[mask].push_back(to);
                }
            } else {
                p.covers_.emplace_back(mask, mask | (1u << k));
                p.up_[mask].push_back(mask | (1u << k));
            }
        }
    }
    return p;
}

bool CoverPoset::less(size_t i, size_t j) const {
    if (i >= size() || j >= size()) throw DomainError("poset element index out of range");
    if (i == j) return false;
    std::vector<bool> visited(size(), false);
    std::deque<uint32_t> queue{static_cast<uint32_t>(i)};
    visited[i] = true;
    while (!queue.empty()) {
        const uint32_t at = queue.front();
        queue.pop_front();
        for (uint32_t next : up_[at]) {
            if (next == j) return true;
            if (!visited[next]) {
                visited[next] = true;
                queue.push_back(next);
            }
        }
    }
    return false;
}

CoverPoset CoverPoset::restricted(std::span<const FaceMask> t) const {
    std::vector<FaceMask> members(t.begin(), t.end());
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    std::unordered_map<FaceMask, size_t> index_of;
    for (size_t i = 0; i < elements_.size(); ++i) index_of.emplace(elements_[i], i);
    std::unordered_map<size_t, size_t> t_slot;  // element index -> position in members
    std::vector<size_t> member_index;
    for (size_t k = 0; k < members.size(); ++k) {
        auto it = index_of.find(members[k]);
        if (it == index_of.end())
            throw DomainError("restriction element is not in the poset");
        t_slot.emplace(it->second, k);
        member_index.push_back(it->second);
    }

    // Reachability from each member through the full poset.
    const size_t m = members.size();
    std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
    for (size_t k = 0; k < m; ++k) {
        std::vector<bool> visited(elements_.size(), false);
        std::deque<uint32_t> queue{static_cast<uint32_t>(member_index[k])};
        visited[member_index[k]] = true;
        while (!queue.empty()) {
            const uint32_t at = queue.front();
            queue.pop_front();
            for (uint32_t next : up_[at]) {
                if (visited[next]) continue;
                visited[next] = true;
                if (auto slot = t_slot.find(next); slot != t_slot.end())
                    below[k][slot->second] = true;
                queue.push_back(next);
            }
        }
    }

    CoverPoset p;
    p.r_ = r_;
    p.elements_ = members;
    p.up_.resize(m);
    // Transitive reduction: keep (a, b) with nothing strictly between.
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
            if (!below[a][b]) continue;
            bool direct = true;
            for (size_t c = 0; c < m && direct; ++c)
                if (below[a][c] && below[c][b]) direct = false;
            if (direct) {
                p.covers_.emplace_back(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
                p.up_[a].push_back(static_cast<uint32_t>(b));
            }
        }
    }
    return p;
}

Int count_linear_extensions(const CoverPoset& p) {
    const size_t n = p.size();
    if (n > 24)
        throw CapacityError("linear extension counting capped at 24 elements, got " +
                            std::to_string(n));
    if (n == 0) return 1;

    // above[i] = bitmask of elements strictly above element i.
    std::vector<uint32_t> above(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && p.less(i, j)) above[i] |= uint32_t(1) << j;

    std::unordered_map<uint32_t, Int> memo;
    memo.reserve(1u << std::min<size_t>(n, 20));
    auto count = [&](auto&& self, uint32_t remaining) -> Int {
        if (remaining == 0) return 1;
        if (auto it = memo.find(remaining); it != memo.end()) return it->second;
        Int total = 0;
        for (uint32_t bits = remaining; bits;) {
            const int i = std::countr_zero(bits);
            bits &= bits - 1;
            if ((above[i] & remaining) == 0)  // i is maximal in the down-set
                total += self(self, remaining ^ (uint32_t(1) << i));
        }
        memo.emplace(remaining, total);
        return total;
    };
    return count(count, n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1);
}

std::optional<TermorderViolation> is_boolean_termorder(const TotalOrder& order) {
    validate_order(order);
    const uint32_t r = order.r;
    if (r > 12) throw CapacityError("term-order check capped at r = 12");
    const size_t n = size_t(1) << r;
    if (order.sequence.size() != n)
        throw DomainError("term-order check needs the full power set as ground");

    std::vector<size_t> pos(n);
    for (size_t i = 0; i < order.sequence.size(); ++i) pos[order.sequence[i]] = i;

    for (FaceMask sigma = 1; sigma < n; ++sigma)
        if (pos[sigma] < pos[0]) return TermorderViolation{sigma, 0, 0, 1};

    const FaceMask full = n - 1;
    for (FaceMask a = 0; a < n; ++a) {
        for (FaceMask b = a + 1; b < n; ++b) {
            const FaceMask lo = pos[a] < pos[b] ? a : b;
            const FaceMask hi = pos[a] < pos[b] ? b : a;
            const FaceMask free = full & ~(a | b);
            // All gamma disjoint from both sides.
            FaceMask gamma = free;
            while (true) {
                if (pos[(lo | gamma)] >= pos[(hi | gamma)] && gamma != 0)
                    return TermorderViolation{lo, hi, gamma, 2};
                if (gamma == 0) break;
                gamma = (gamma - 1) & free;
            }
        }
    }
    return std::nullopt;
}

bool is_sorted_order(const TotalOrder& order) {
    validate_order(order);
    std::vector<size_t> singleton_pos(order.r, SIZE_MAX);
    for (size_t i = 0; i < order.sequence.size(); ++i) {
        const FaceMask f = order.sequence[i];
        if (std::popcount(f) == 1) singleton_pos[std::countr_zero(f)] = i;
    }
    for (uint32_t v = 0; v < order.r; ++v)
        if (singleton_pos[v] == SIZE_MAX)
            throw DomainError("sorted-order check: singleton v_" + std::to_string(v + 1) +
                              " is missing from the ground set");
    for (uint32_t v = 0; v + 1 < order.r; ++v)
        if (singleton_pos[v] > singleton_pos[v + 1]) return false;
    return true;
}

CoherenceResult coherence_witness(const TotalOrder& order, bool sorted) {
    validate_order(order);
    const uint32_t r = order.r;

    std::vector<std::vector<Rational>> rows;
    const size_t consecutive = order.sequence.empty() ? 0 : order.sequence.size() - 1;
    rows.reserve(consecutive + (sorted ? r - 1 : 0));
    for (size_t i = 0; i + 1 < order.sequence.size(); ++i) {
        const FaceMask lo = order.sequence[i];
        const FaceMask hi = order.sequence[i + 1];
        std::vector<Rational> row(r, Rational(0));
        for (uint32_t v = 0; v < r; ++v) {
            if (hi >> v & 1) row[v] += 1;
            if (lo >> v & 1) row[v] -= 1;
        }
        rows.push_back(std::move(row));
    }
    if (sorted) {
        for (uint32_t v = 0; v + 1 < r; ++v) {
            std::vector<Rational> row(r, Rational(0));
            row[v] = -1;
            row[v + 1] = 1;
            rows.push_back(std::move(row));
        }
    }

    auto lp = solve_positive_margin(rows, r);
    if (lp.feasible) return CoherenceWitness{std::move(lp.witness)};

    CoherenceInfeasible info;
    info.multipliers = std::move(lp.certificate);

    // Look for the two-comparison explanation: ordered pairs whose
    // difference vectors are exact opposites.
    std::map<std::pair<FaceMask, FaceMask>, std::pair<FaceMask, FaceMask>> seen;
    for (size_t i = 0; i < order.sequence.size() && !info.opposing; ++i) {
        for (size_t j = i + 1; j < order.sequence.size() && !info.opposing; ++j) {
            const FaceMask lo = order.sequence[i];
            const FaceMask hi = order.sequence[j];
            const FaceMask gain = hi & ~lo;
            const FaceMask loss = lo & ~hi;
            if (auto it = seen.find({loss, gain}); it != seen.end()) {
                info.opposing = ContradictionPair{it->second.first, it->second.second, lo, hi};
            } else {
                seen.emplace(std::make_pair(gain, loss), std::make_pair(lo, hi));
            }
        }
    }
    return info;
}

TotalOrder induced_order(std::span<const FaceMask> t, std::span<const PrimePower> vertices,
                         const MultiplicativeFunction& g) {
    const uint32_t r = static_cast<uint32_t>(vertices.size());
    if (r == 0 || r > 64) throw DomainError("induced_order needs 1 to 64 vertices");
    for (const auto& q : vertices)
        if (g.at_prime_power(q) <= 1)
            throw DomainError("induced_order needs a strictly log-positive g, but g(" +
                              std::to_string(q.value) +
                              ") = " + rational_to_string(g.at_prime_power(q)));

    std::vector<Rational> vertex_value(r);
    for (uint32_t v = 0; v < r; ++v) vertex_value[v] = g.at_prime_power(vertices[v]);

    TotalOrder order;
    order.r = r;
    order.sequence.assign(t.begin(), t.end());
    validate_order(order);

    std::vector<Rational> value(order.sequence.size());
    for (size_t i = 0; i < order.sequence.size(); ++i) {
        Rational product = 1;
        for (uint32_t v = 0; v < r; ++v)
            if (order.sequence[i] >> v & 1) product *= vertex_value[v];
        value[i] = std::move(product);
    }
    std::vector<size_t> idx(order.sequence.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (value[a] != value[b]) return value[a] < value[b];
        return order.sequence[a] < order.sequence[b];
    });
    for (size_t i = 0; i + 1 < idx.size(); ++i) {
        if (value[idx[i]] == value[idx[i + 1]]) {
            Int a = 1, b = 1;
            for (uint32_t v = 0; v < r; ++v) {
                if (order.sequence[idx[i]] >> v & 1) a *= Int(vertices[v].value);
                if (order.sequence[idx[i + 1]] >> v & 1) b *= Int(vertices[v].value);
            }
            throw DomainError("g is not injective on T: g(" + a.str() + ") = g(" + b.str() +
                              ") = " + rational_to_string(value[idx[i]]));
        }
    }
    TotalOrder result;
    result.r = r;
    result.sequence.reserve(idx.size());
    for (size_t i : idx) result.sequence.push_back(order.sequence[i]);
    return result;
}

std::vector<TotalOrder> realizable_orders(std::span<const FaceMask> t, uint32_t r,
                                          bool sorted_only) {
    if (r == 0 || r > 8) throw CapacityError("realizable_orders supports r <= 8");
    std::vector<FaceMask> faces(t.begin(), t.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    if (faces.size() > 7)
        throw CapacityError("realizable_orders enumerates |T|! candidates; |T| capped at 7");

    std::vector<TotalOrder> result;
    std::vector<FaceMask> perm = faces;
    do {
        TotalOrder candidate{r, perm};
        if (std::holds_alternative<CoherenceWitness>(coherence_witness(candidate, sorted_only)))
            result.push_back(std::move(candidate));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
}

NordBound check_nord_bound(std::span<const FaceMask> t, uint32_t r) {
    NordBound nb;
    nb.t_unsorted = realizable_orders(t, r, false).size();
    nb.t_sorted = realizable_orders(t, r, true).size();
    const auto y = CoverPoset::boolean_poset(r);
    nb.extensions = count_linear_extensions(y.restricted(t));
    Int factorial = 1;
    for (uint32_t i = 2; i <= r; ++i) factorial *= i;
    nb.bound = factorial * nb.extensions;
    nb.holds = Int(nb.t_unsorted) <= nb.bound;
    return nb;
}

IntegerOrderCheck check_integer_order(std::span<const uint64_t> ascending) {
    IntegerOrderCheck check;
    check.ascending.assign(ascending.begin(), ascending.end());

    std::set<uint64_t> universe;
    std::vector<std::vector<uint64_t>> component_values;
    for (uint64_t m : ascending) {
        if (m == 0) throw DomainError("order entries must be positive integers");
        std::vector<uint64_t> comps;
        for (const auto& q : unitary_components(m)) {
            universe.insert(q.value);
            comps.push_back(q.value);
        }
        component_values.push_back(std::move(comps));
    }
    check.vertex_values.assign(universe.begin(), universe.end());
    if (check.vertex_values.size() > 64)
        throw CapacityError("order check supports at most 64 distinct prime powers");

    std::unordered_map<uint64_t, uint32_t> bit_of;
    for (uint32_t i = 0; i < check.vertex_values.size(); ++i)
        bit_of.emplace(check.vertex_values[i], i);

    check.order.r = std::max<uint32_t>(1, static_cast<uint32_t>(check.vertex_values.size()));
    for (const auto& comps : component_values) {
        FaceMask mask = 0;
        for (uint64_t q : comps) mask |= FaceMask(1) << bit_of.at(q);
        check.order.sequence.push_back(mask);
    }
    check.result = coherence_witness(check.order, false);
    return check;
}

ImpossibleExampleReport verify_impossible_example() {
    ImpossibleExampleReport report;
    report.descending = {6, 21, 10, 15, 14, 35};

    std::vector<uint64_t> ascending(report.descending.rbegin(), report.descending.rend());
    report.check = check_integer_order(ascending);

    // Sanity inverse: the order the weights (1,2,3,5) on (2,3,5,7) induce.
    const std::vector<uint64_t> by_weights = {6, 10, 15, 14, 21, 35};
    report.inverse = check_integer_order(by_weights);

    report.confirmed = !report.check.feasible() && report.inverse.feasible();
    return report;
}

}  // namespace unitary
