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

// Unitary ideals (sets of positive integers closed under unitary divisors),
// the simplicial complex whose faces are sets of pairwise-coprime prime
// powers with product in the set, f-vectors, facets, and realization of
// abstract complexes as ideals.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unitary/arith.hpp"

namespace unitary {

/// Explicit materialization (element lists, faces) is refused above this
/// many elements; interval ideals [1..n] with larger n stay symbolic and
/// are served by the streaming facet enumeration instead.
inline constexpr uint64_t kMaterializationThreshold = 1'000'000;

struct ClosureViolation {
    uint64_t element = 0;  // member whose unitary divisor is missing
    uint64_t divisor = 0;  // the missing divisor
};

/// Checks closure under unitary divisors. Returns the first violation
/// (element ascending; the trivial divisor 1 is reported only when it is
/// the sole missing one), or nullopt when the set is closed.
std::optional<ClosureViolation> check_unitary_ideal(std::span<const uint64_t> candidate);

/// A finite set of positive integers closed under taking unitary divisors.
/// Immutable; lazily materialized views are internally synchronized, so
/// concurrent reads are safe.
class UnitaryIdeal {
 public:
    /// Smallest unitary ideal containing the generators (union of their
    /// unitary divisor sets). An empty generator set yields the empty ideal.
    static UnitaryIdeal close_under_unitary_divisors(std::span<const uint64_t> generators);

    /// The interval [1..n]. Elements are materialized on demand and only
    /// below the materialization threshold.
    static UnitaryIdeal interval(uint64_t n);

    /// Accepts an element list, verifying closure. Throws DomainError with
    /// the violating pair in the message when the set is not closed.
    static UnitaryIdeal from_elements(std::vector<uint64_t> elements);

    static UnitaryIdeal from_json(std::string_view text);
    std::string to_json() const;

    bool is_interval() const noexcept { return interval_n_ != 0; }
    uint64_t interval_bound() const noexcept { return interval_n_; }

    uint64_t size() const;
    bool empty() const { return size() == 0; }
    bool contains(uint64_t m) const;

    /// Sorted element list; CapacityError for interval ideals above the
    /// materialization threshold.
    const std::vector<uint64_t>& elements() const;

    /// X(S): the prime powers contained in the ideal, ascending by value.
    const std::vector<PrimePower>& vertices() const;

    /// r = |X(S)| without materializing anything else.
    uint64_t vertex_count() const { return vertices().size(); }

 private:
    struct Lazy;
    UnitaryIdeal();

    uint64_t interval_n_ = 0;  // nonzero marks an interval ideal
    std::shared_ptr<Lazy> lazy_;
};

/// The f-vector (f_0, ..., f_{r-1}); entry i counts faces with i+1
/// vertices. The empty face is implicit (f_{-1} = 1 by convention).
struct FVector {
    std::vector<uint64_t> entries;

    uint64_t face_count_with_empty() const {
        uint64_t total = 1;
        for (uint64_t e : entries) total += e;
        return total;
    }
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// A finite simplicial complex: vertex labels plus a downward-closed face
/// family stored as sorted vertex-index lists. Complexes built from ideals
/// keep the face <-> element bijection (each face knows its integer value).
class SimplicialComplex {
 public:
    /// Materializes the complex of an ideal: one face per element, the face
    /// of s being the index set of its unitary components.
    static SimplicialComplex from_ideal(const UnitaryIdeal& ideal);

    /// Builds an abstract complex as the downward closure of the given
    /// facets. Every vertex must appear in some facet.
    static SimplicialComplex from_facets(std::vector<uint64_t> vertex_labels,
                                         std::vector<std::vector<uint32_t>> facets);

    static SimplicialComplex from_json(std::string_view text);
    std::string to_json() const;

    size_t vertex_count() const noexcept { return vertex_labels_.size(); }
    size_t face_count() const noexcept { return faces_.size(); }
    const std::vector<uint64_t>& vertex_labels() const noexcept { return vertex_labels_; }
    const std::vector<std::vector<uint32_t>>& faces() const noexcept { return faces_; }

    /// True when faces correspond to integers (built from an ideal).
    bool has_integer_values() const noexcept { return !face_values_.empty(); }
    const std::vector<uint64_t>& face_values() const noexcept { return face_values_; }

    FVector f_vector() const;

    /// Indices (into faces()) of the inclusion-maximal faces.
    std::vector<size_t> facet_indices() const;

    /// Integer values of the facets, ascending; requires integer values.
    std::vector<uint64_t> facet_values() const;

    /// Realizes the abstract structure as an ideal, sending vertex i to the
    /// i-th prime. Requires every singleton to be a face.
    UnitaryIdeal realize() const;

    /// Canonical face set (sorted by size, then lexicographically) for
    /// structural comparison.
    std::vector<std::vector<uint32_t>> canonical_faces() const;

 private:
    std::vector<uint64_t> vertex_labels_;
    std::vector<std::vector<uint32_t>> faces_;
    std::vector<uint64_t> face_values_;  // parallel to faces_ when integer-valued
};

}  // namespace unitary
