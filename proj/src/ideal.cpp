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

#include "unitary/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "unitary/errors.hpp"

namespace unitary {

namespace {

std::string violation_message(const ClosureViolation& v) {
    return "set is not closed under unitary divisors: " + std::to_string(v.element) +
           " is present but its unitary divisor " + std::to_string(v.divisor) + " is missing";
}

}  // namespace

std::optional<ClosureViolation> check_unitary_ideal(std::span<const uint64_t> candidate) {
    std::vector<uint64_t> sorted(candidate.begin(), candidate.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (!sorted.empty() && sorted.front() == 0)
        throw DomainError("unitary ideals contain positive integers only");

    const auto present = [&](uint64_t d) {
        return std::binary_search(sorted.begin(), sorted.end(), d);
    };
    for (uint64_t s : sorted) {
        const auto divisors = unitary_divisors(s);
        uint64_t missing = 0;
        for (uint64_t d : divisors) {
            if (present(d)) continue;
            if (d != 1) {
                missing = d;
                break;
            }
            if (missing == 0) missing = 1;
        }
        if (missing != 0) return ClosureViolation{s, missing};
    }
    return std::nullopt;
}

struct UnitaryIdeal::Lazy {
    std::once_flag elements_once;
    std::once_flag vertices_once;
    std::vector<uint64_t> elements;
    std::vector<PrimePower> vertices;
    bool elements_ready = false;
    bool vertices_ready = false;
};

UnitaryIdeal::UnitaryIdeal() : lazy_(std::make_shared<Lazy>()) {}

UnitaryIdeal UnitaryIdeal::close_under_unitary_divisors(std::span<const uint64_t> generators) {
    std::set<uint64_t> elems;
    std::set<PrimePower> verts;
    for (uint64_t g : generators) {
        if (g == 0) throw DomainError("generators must be positive");
        for (uint64_t d : unitary_divisors(g)) elems.insert(d);
        // Every prime power of the closure is a unitary component of some
        // generator, so the vertex set falls out of the same factorizations.
        for (const auto& c : unitary_components(g)) verts.insert(c);
    }
    UnitaryIdeal ideal;
    ideal.lazy_->elements.assign(elems.begin(), elems.end());
    ideal.lazy_->vertices.assign(verts.begin(), verts.end());
    ideal.lazy_->elements_ready = true;
    ideal.lazy_->vertices_ready = true;
    return ideal;
}

UnitaryIdeal UnitaryIdeal::interval(uint64_t n) {
    if (n == 0) throw DomainError("interval ideal needs n >= 1");
    UnitaryIdeal ideal;
    ideal.interval_n_ = n;
    return ideal;
}

UnitaryIdeal UnitaryIdeal::from_elements(std::vector<uint64_t> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (auto v = check_unitary_ideal(elements)) throw DomainError(violation_message(*v));
    UnitaryIdeal ideal;
    ideal.lazy_->elements = std::move(elements);
    ideal.lazy_->elements_ready = true;
    auto& verts = ideal.lazy_->vertices;
    for (uint64_t s : ideal.lazy_->elements) {
        const auto comps = unitary_components(s);
        if (comps.size() == 1 && comps[0].value == s) verts.push_back(comps[0]);
    }
    ideal.lazy_->vertices_ready = true;
    return ideal;
}

uint64_t UnitaryIdeal::size() const {
    if (is_interval()) return interval_n_;
    return lazy_->elements.size();
}

bool UnitaryIdeal::contains(uint64_t m) const {
    if (m == 0) return false;
    if (is_interval()) return m <= interval_n_;
    return std::binary_search(lazy_->elements.begin(), lazy_->elements.end(), m);
}

const std::vector<uint64_t>& UnitaryIdeal::elements() const {
    if (!is_interval()) return lazy_->elements;
    std::call_once(lazy_->elements_once, [&] {
        if (interval_n_ > kMaterializationThreshold)
            throw CapacityError("interval ideal [1.." + std::to_string(interval_n_) +
                                "] exceeds the materialization threshold of " +
                                std::to_string(kMaterializationThreshold));
        auto& elems = lazy_->elements;
        elems.resize(interval_n_);
        for (uint64_t i = 0; i < interval_n_; ++i) elems[i] = i + 1;
        lazy_->elements_ready = true;
    });
    if (!lazy_->elements_ready)
        throw CapacityError("interval ideal [1.." + std::to_string(interval_n_) +
                            "] exceeds the materialization threshold of " +
                            std::to_string(kMaterializationThreshold));
    return lazy_->elements;
}

const std::vector<PrimePower>& UnitaryIdeal::vertices() const {
    if (!is_interval()) return lazy_->vertices;
    std::call_once(lazy_->vertices_once, [&] {
        lazy_->vertices = prime_powers_up_to(interval_n_);
        lazy_->vertices_ready = true;
    });
    if (!lazy_->vertices_ready)
        throw CapacityError("vertex list of [1.." + std::to_string(interval_n_) +
                            "] could not be materialized");
    return lazy_->vertices;
}

UnitaryIdeal UnitaryIdeal::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid ideal JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
        throw DomainError("ideal JSON must be an object with an \"elements\" array");
    std::vector<uint64_t> elems;
    for (const auto& e : j["elements"]) {
        if (!e.is_number_unsigned())
            throw DomainError("ideal elements must be positive integers");
        elems.push_back(e.get<uint64_t>());
    }
    return from_elements(std::move(elems));
}

std::string UnitaryIdeal::to_json() const {
    nlohmann::json j;
    j["elements"] = elements();
    return j.dump();
}

// --- SimplicialComplex -----------------------------------------------------

SimplicialComplex SimplicialComplex::from_ideal(const UnitaryIdeal& ideal) {
    const auto& elems = ideal.elements();
    if (elems.empty()) throw DomainError("the empty ideal has no simplicial complex (1 is missing)");
    if (elems.size() > kMaterializationThreshold)
        throw CapacityError("complex materialization capped at " +
                            std::to_string(kMaterializationThreshold) + " faces");
    const auto& verts = ideal.vertices();

    SimplicialComplex complex;
    complex.vertex_labels_.reserve(verts.size());
    std::unordered_map<uint64_t, uint32_t> index_of;
    index_of.reserve(verts.size() * 2);
    for (const auto& q : verts) {
        index_of.emplace(q.value, static_cast<uint32_t>(complex.vertex_labels_.size()));
        complex.vertex_labels_.push_back(q.value);
    }

    std::optional<SpfTable> table;
    if (ideal.is_interval() && ideal.interval_bound() >= 64)
        table.emplace(SpfTable::build(ideal.interval_bound()));

    complex.faces_.reserve(elems.size());
    complex.face_values_ = elems;
    for (uint64_t s : elems) {
        const auto comps = table ? unitary_components(s, *table) : unitary_components(s);
        std::vector<uint32_t> face;
        face.reserve(comps.size());
        for (const auto& c : comps) face.push_back(index_of.at(c.value));
        std::sort(face.begin(), face.end());
        complex.faces_.push_back(std::move(face));
    }
    return complex;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<uint64_t> vertex_labels,
                                                 std::vector<std::vector<uint32_t>> facets) {
    const uint32_t r = static_cast<uint32_t>(vertex_labels.size());
    std::vector<bool> covered(r, false);
    std::set<std::vector<uint32_t>> faces;
    faces.insert({});
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (uint32_t v : f) {
            if (v >= r) throw DomainError("facet vertex index out of range");
            covered[v] = true;
        }
        if (f.size() > 25) throw CapacityError("facet with more than 25 vertices");
        // Downward closure of this facet.
        const size_t k = f.size();
        for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
            std::vector<uint32_t> sub;
            for (size_t b = 0; b < k; ++b)
                if (mask >> b & 1) sub.push_back(f[b]);
            faces.insert(std::move(sub));
        }
    }
    for (uint32_t v = 0; v < r; ++v)
        if (!covered[v])
            throw DomainError("vertex " + std::to_string(vertex_labels[v]) +
                              " does not appear in any facet");

    SimplicialComplex complex;
    complex.vertex_labels_ = std::move(vertex_labels);
    complex.faces_.reserve(faces.size());
    std::vector<std::vector<uint32_t>> sorted(faces.begin(), faces.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    complex.faces_ = std::move(sorted);
    return complex;
}

FVector SimplicialComplex::f_vector() const {
    FVector f;
    size_t max_size = 0;
    for (const auto& face : faces_) max_size = std::max(max_size, face.size());
    f.entries.assign(max_size, 0);
    for (const auto& face : faces_)
        if (!face.empty()) ++f.entries[face.size() - 1];
    return f;
}

std::vector<size_t> SimplicialComplex::facet_indices() const {
    std::vector<size_t> result;
    if (has_integer_values()) {
        // Face <-> integer bijection: s/q marks the subface obtained by
        // deleting the component q, so unmarked faces are the facets.
        std::unordered_set<uint64_t> dominated;
        dominated.reserve(faces_.size() * 2);
        for (size_t i = 0; i < faces_.size(); ++i) {
            const uint64_t value = face_values_[i];
            for (uint32_t v : faces_[i]) dominated.insert(value / vertex_labels_[v]);
        }
        for (size_t i = 0; i < faces_.size(); ++i)
            if (!dominated.count(face_values_[i])) result.push_back(i);
        return result;
    }
    std::set<std::vector<uint32_t>> dominated;
    for (const auto& face : faces_) {
        for (size_t k = 0; k < face.size(); ++k) {
            std::vector<uint32_t> parent;
            parent.reserve(face.size() - 1);
            for (size_t j = 0; j < face.size(); ++j)
                if (j != k) parent.push_back(face[j]);
            dominated.insert(std::move(parent));
        }
    }
    for (size_t i = 0; i < faces_.size(); ++i)
        if (!dominated.count(faces_[i])) result.push_back(i);
    return result;
}

std::vector<uint64_t> SimplicialComplex::facet_values() const {
    if (!has_integer_values())
        throw DomainError("abstract complex has no integer face values");
    std::vector<uint64_t> values;
    for (size_t i : facet_indices()) values.push_back(face_values_[i]);
    std::sort(values.begin(), values.end());
    return values;
}

UnitaryIdeal SimplicialComplex::realize() const {
    const size_t r = vertex_count();
    std::vector<bool> seen(r, false);
    for (const auto& face : faces_)
        if (face.size() == 1) seen[face[0]] = true;
    for (size_t v = 0; v < r; ++v)
        if (!seen[v]) throw DomainError("realize needs every singleton to be a face");

    std::vector<uint64_t> primes;
    {
        uint32_t bound = 16;
        while (true) {
            auto p = primes_up_to(bound);
            if (p.size() >= r) {
                primes.assign(p.begin(), p.begin() + r);
                break;
            }
            bound *= 2;
        }
    }
    std::vector<uint64_t> elems;
    elems.reserve(faces_.size());
    for (const auto& face : faces_) {
        __uint128_t product = 1;
        for (uint32_t v : face) product *= primes[v];
        if (product > UINT64_MAX)
            throw CapacityError("realized element exceeds 64 bits");
        elems.push_back(static_cast<uint64_t>(product));
    }
    std::sort(elems.begin(), elems.end());

    // Downward closure of the complex is unitary closure of the products.
    UnitaryIdeal ideal = UnitaryIdeal::from_elements(std::move(elems));
    return ideal;
}

std::vector<std::vector<uint32_t>> SimplicialComplex::canonical_faces() const {
    auto sorted = faces_;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return sorted;
}

SimplicialComplex SimplicialComplex::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid complex JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw DomainError("complex JSON needs \"vertices\" and \"facets\"");
    std::vector<uint64_t> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_unsigned()) throw DomainError("vertices must be positive integers");
        vertices.push_back(v.get<uint64_t>());
    }
    std::vector<std::vector<uint32_t>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw DomainError("each facet must be an array of vertex indices");
        std::vector<uint32_t> facet;
        for (const auto& idx : f) {
            if (!idx.is_number_unsigned()) throw DomainError("facet entries must be indices");
            facet.push_back(idx.get<uint32_t>());
        }
        facets.push_back(std::move(facet));
    }
    return from_facets(std::move(vertices), std::move(facets));
}

std::string SimplicialComplex::to_json() const {
    nlohmann::json j;
    j["vertices"] = vertex_labels_;
    std::vector<std::vector<uint32_t>> facet_list;
    for (size_t i : facet_indices()) facet_list.push_back(faces_[i]);
    std::sort(facet_list.begin(), facet_list.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    j["facets"] = facet_list;
    return j.dump();
}

}  // namespace unitary
