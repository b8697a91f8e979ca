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

// Summing a multiplicative function over a unitary ideal by three routes
// (direct, inclusion-exclusion over facets, f-vector dot product for
// constant vertex values), and the extremal value psi(r, c) over all
// ideals with exactly r prime powers.

#pragma once

#include <cstdint>
#include <vector>

#include "unitary/ideal.hpp"
#include "unitary/multfunc.hpp"
#include "unitary/rational.hpp"

namespace unitary {

/// Default cap on the facet count accepted by the inclusion-exclusion
/// route (the walk visits 2^ell subsets).
inline constexpr size_t kInclusionExclusionFacetCap = 20;

/// G(S) = sum of g(s) over the elements of S. Exact.
Rational g_sum_direct(const UnitaryIdeal& s, const MultiplicativeFunction& g);

/// G(S) for g constant equal to c on every vertex: 1 + sum_i c^{i+1} f_i.
Rational g_sum_fvector(const FVector& f, const Rational& c);

/// G(S) from the facets alone: alternating sum over nonempty facet subsets
/// of prod(1 + g(q)) across the vertex-set intersection. Facets are given
/// as their vertex prime-power values.
Rational g_sum_inclusion_exclusion(const std::vector<std::vector<uint64_t>>& facets,
                                   const MultiplicativeFunction& g,
                                   size_t facet_cap = kInclusionExclusionFacetCap);

/// One of the extreme points of the convex hull of f-vectors of complexes
/// on r vertices: binomials C(r,1)..C(r,level), then zeros. These are the
/// f-vectors of the skeleta of the full (r-1)-simplex.
struct KozlovVertex {
    uint64_t r = 0;
    uint64_t level = 0;           // 1 <= level <= r
    std::vector<Int> entries;     // length r
};

KozlovVertex kozlov_vertex(uint64_t r, uint64_t level);

struct PsiResult {
    Rational value;                   // 1 + max_i K_i
    uint64_t argmax_level = 0;        // smallest maximizing i
    std::vector<Rational> k_values;   // K_1..K_r, K_i = sum_{j<=i} c^j C(r,j)
};

/// Maximum of G(S) over unitary ideals with exactly r prime powers when g
/// is constant c on prime powers, located by scanning the K_i.
PsiResult psi(uint64_t r, const Rational& c);

/// Closed-form case analysis for psi. Refuses inputs on an interval
/// boundary (c = 0 or c equal to one of the thresholds -(2i+2)/(r-2i-1))
/// with DomainError instead of guessing a side.
Rational psi_piecewise(uint64_t r, const Rational& c);

/// Independent oracle: enumerates every downward-closed family on r
/// labeled vertices containing all singletons and maximizes directly.
/// Exponential; requires r <= 5.
Rational psi_bruteforce(uint64_t r, const Rational& c);

}  // namespace unitary
