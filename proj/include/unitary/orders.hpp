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

// Boolean term orders and their realizability by multiplicative functions.
// A total order on faces is realizable iff exact positive weights make
// every comparison a strict subset-sum inequality; the cover poset Y
// (vertex additions and index bumps) bounds the sorted orders through its
// linear extensions.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "unitary/lp.hpp"
#include "unitary/multfunc.hpp"
#include "unitary/rational.hpp"

namespace unitary {

/// A face over vertices v_1..v_r: bit k set means v_{k+1} is in the face.
using FaceMask = uint64_t;

/// A total order (ascending, smallest first) on a family of faces.
struct TotalOrder {
    uint32_t r = 0;
    std::vector<FaceMask> sequence;
};

/// All k-element subsets of {v_1..v_r}, ascending as masks.
std::vector<FaceMask> k_subsets(uint32_t r, uint32_t k);

/// A finite poset presented by cover relations over face elements.
class CoverPoset {
 public:
    /// The poset Y on all subsets of {v_1..v_r}, generated by adding a
    /// vertex (sigma covered by sigma + v_k) and bumping an index (v_i in
    /// sigma replaced by v_{i+1} when v_{i+1} is absent and i+1 <= r).
    /// Requires 1 <= r <= 16.
    static CoverPoset boolean_poset(uint32_t r);

    uint32_t vertex_count() const noexcept { return r_; }
    size_t size() const noexcept { return elements_.size(); }
    const std::vector<FaceMask>& elements() const noexcept { return elements_; }
    const std::vector<std::pair<uint32_t, uint32_t>>& covers() const noexcept { return covers_; }

    /// Strict comparability between element indices (reachability through
    /// the covers).
    bool less(size_t i, size_t j) const;

    /// Induced subposet on the given elements: comparabilities are
    /// inherited through elements outside T as well. Covers of the result
    /// are the transitive reduction of the induced relation.
    CoverPoset restricted(std::span<const FaceMask> t) const;

 private:
    uint32_t r_ = 0;
    std::vector<FaceMask> elements_;
    std::vector<std::pair<uint32_t, uint32_t>> covers_;
    std::vector<std::vector<uint32_t>> up_;  // cover successors per element
};

/// Number of linear extensions, by dynamic programming over down-sets.
/// Requires |P| <= 24.
Int count_linear_extensions(const CoverPoset& p);

struct TermorderViolation {
    FaceMask sigma = 0;
    FaceMask tau = 0;
    FaceMask gamma = 0;
    int axiom = 0;  // 1: empty set not minimal; 2: translation broken
};

/// Checks the two term-order axioms for a total order on all of 2^{[r]}:
/// the empty set is minimal, and sigma < tau implies
/// sigma + gamma < tau + gamma for gamma disjoint from both. Returns the
/// first violation found, or nullopt. Requires r <= 12.
std::optional<TermorderViolation> is_boolean_termorder(const TotalOrder& order);

/// True iff the singletons appear in index order v_1 < v_2 < ... < v_r.
/// All r singletons must be present in the sequence.
bool is_sorted_order(const TotalOrder& order);

struct CoherenceWitness {
    std::vector<Rational> weights;  // w_1..w_r, strictly positive
};

struct ContradictionPair {
    // Two comparisons implied by the order that force opposite weight
    // inequalities: first_lo < first_hi demands the exact reverse of
    // second_lo < second_hi.
    FaceMask first_lo = 0, first_hi = 0;
    FaceMask second_lo = 0, second_hi = 0;
};

struct CoherenceInfeasible {
    /// Farkas multipliers over the constraint rows (consecutive pairs,
    /// then the sorted chain rows if requested, then the r positivity
    /// rows); a nonnegative combination of the inequalities summing to
    /// the impossible 0 >= (positive).
    std::vector<Rational> multipliers;
    std::optional<ContradictionPair> opposing;
};

using CoherenceResult = std::variant<CoherenceWitness, CoherenceInfeasible>;

/// Decides whether positive weights w realize the given ascending order
/// through strict subset-sum comparisons; only consecutive pairs are
/// constrained (transitivity covers the rest). With sorted = true the
/// chain w_1 < w_2 < ... < w_r is required as well. Requires r <= 64.
CoherenceResult coherence_witness(const TotalOrder& order, bool sorted = false);

/// The ascending order that g induces on the faces. Requires g strictly
/// log-positive on the vertices; a value collision names the two faces.
TotalOrder induced_order(std::span<const FaceMask> t, std::span<const PrimePower> vertices,
                         const MultiplicativeFunction& g);

/// All total orders on T realizable by a multiplicative function
/// (strictly log-positive, injective), enumerated by filtering every
/// permutation of T through the coherence check. sorted_only restricts to
/// functions increasing along the vertex order. Requires |T| <= 7, r <= 8.
std::vector<TotalOrder> realizable_orders(std::span<const FaceMask> t, uint32_t r,
                                          bool sorted_only);

struct NordBound {
    uint64_t t_unsorted = 0;  // realizable orders, unrestricted g
    uint64_t t_sorted = 0;    // realizable orders with sorted vertex values
    Int extensions;           // linear extensions of Y restricted to T
    Int bound;                // r! * extensions
    bool holds = false;       // t_unsorted <= bound
};

NordBound check_nord_bound(std::span<const FaceMask> t, uint32_t r);

/// Mapping integers to faces via their unitary components (the distinct
/// prime powers across all inputs become the vertex universe) and checking
/// the claimed ascending order for realizability.
struct IntegerOrderCheck {
    std::vector<uint64_t> ascending;      // the claimed order, input copy
    std::vector<uint64_t> vertex_values;  // prime-power universe, ascending
    TotalOrder order;
    CoherenceResult result;

    bool feasible() const { return std::holds_alternative<CoherenceWitness>(result); }
};

IntegerOrderCheck check_integer_order(std::span<const uint64_t> ascending);

/// The six pairwise products of the primes 2, 3, 5, 7 admit no
/// multiplicative g with g(6) > g(21) > g(10) > g(15) > g(14) > g(35);
/// runs that check and a feasible sanity inverse.
struct ImpossibleExampleReport {
    std::vector<uint64_t> descending;  // {6, 21, 10, 15, 14, 35}
    IntegerOrderCheck check;           // expected infeasible
    IntegerOrderCheck inverse;         // same values ordered by weights (1,2,3,5)
    bool confirmed = false;            // infeasible and inverse feasible
};

ImpossibleExampleReport verify_impossible_example();

}  // namespace unitary
