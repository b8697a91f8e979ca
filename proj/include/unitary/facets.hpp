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

// Streaming enumeration of the facets of the complex of [1..n] without
// materializing it, the limiting facet-density constant, the facet matrix,
// and facet-based maximization of log-positive multiplicative functions.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "unitary/multfunc.hpp"
#include "unitary/rational.hpp"

namespace unitary {

/// Facet matrices larger than this n are refused (the dense CSV grows as
/// roughly 0.6 n^2 / log n cells).
inline constexpr uint64_t kFacetMatrixCap = 20'000;

/// Facet lists larger than this n are refused; use the streaming visitor.
inline constexpr uint64_t kFacetListCap = 10'000'000;

/// True iff the face of m is inclusion-maximal in the complex of [1..n]:
/// the cheapest coprime extension of m is by the smallest prime not
/// dividing it, so m is a facet exactly when that product exceeds n.
bool is_facet_in_interval(uint64_t m, uint64_t n);

/// Calls visit(m) for every facet value m of [1..n], in increasing order.
void for_each_facet(uint64_t n, const std::function<void(uint64_t)>& visit);

/// The facet values of [1..n], ascending. CapacityError above the list cap.
std::vector<uint64_t> enumerate_facets(uint64_t n);

/// Number of facets of [1..n]. Blocks of [1..n] are tested independently,
/// optionally across threads; the merge is a plain sum.
uint64_t count_facets(uint64_t n, unsigned threads = 1);

/// (facet count) / n, exact.
Rational facet_density(uint64_t n, unsigned threads = 1);

struct GammaEstimate {
    Rational series_value;        // 1 - 1/2 + sum of computed terms
    uint64_t terms_used = 0;      // terms added before truncation
    double truncation_bound = 0;  // first omitted term is below this
};

/// The limiting facet density: 1 - 1/2 + sum over i of
/// (1/p_i - 1/p_{i+1}) / (p_1 ... p_i), truncated at the first term below
/// the bound. Terms shrink faster than 1/primorial, so this converges in a
/// handful of terms.
GammaEstimate gamma_constant(double truncation_bound);

/// Exponent matrix of the facets of [1..n]: columns are the prime powers
/// q_1..q_r up to n; the row of facet w has a 1 in the column of each of
/// its unitary components. Rows are in increasing facet order.
struct FacetMatrix {
    uint64_t n = 0;
    std::vector<uint64_t> prime_powers;          // column labels, ascending
    std::vector<uint64_t> facet_values;          // row labels, ascending
    std::vector<std::vector<uint32_t>> rows;     // sorted column indices of the 1 entries
};

FacetMatrix facet_matrix(uint64_t n, uint64_t cap = kFacetMatrixCap);

/// Dense CSV rendering: header "facet,q_1,...,q_r", one 0/1 row per facet.
std::string facet_matrix_csv(const FacetMatrix& m);

enum class MaxStrategy { naive, facet };

struct MaximizeResult {
    uint64_t argmax = 0;  // smallest maximizing integer (per strategy)
    Rational value;
};

/// Maximum of g over [1..n]. The naive strategy evaluates every integer;
/// the facet strategy evaluates only the facets, which is valid for
/// log-positive g and is checked up front (a violating prime power is
/// named in the error).
MaximizeResult maximize_on_interval(uint64_t n, const MultiplicativeFunction& g,
                                    MaxStrategy strategy, unsigned threads = 1);

}  // namespace unitary
