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
#include <numeric>
#include <random>
#include <set>

#include "complex_enum.hpp"
#include "doctest.h"
#include "unitary/errors.hpp"

using namespace unitary;
using unitary::testing::all_complexes;

namespace {

std::vector<uint64_t> vertex_values(const UnitaryIdeal& s) {
    std::vector<uint64_t> out;
    for (const auto& q : s.vertices()) out.push_back(q.value);
    return out;
}

}  // namespace

TEST_CASE("close_under_unitary_divisors") {
    auto s12 = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{12});
    CHECK(s12.elements() == std::vector<uint64_t>{1, 3, 4, 12});

    auto s1 = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{1});
    CHECK(s1.elements() == std::vector<uint64_t>{1});

    auto s = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{6, 10});
    CHECK(s.elements() == std::vector<uint64_t>{1, 2, 3, 5, 6, 10});
    CHECK(vertex_values(s) == std::vector<uint64_t>{2, 3, 5});

    auto empty = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{});
    CHECK(empty.empty());

    CHECK_THROWS_AS(UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{0}),
                    DomainError);
}

TEST_CASE("interval ideal") {
    auto one = UnitaryIdeal::interval(1);
    CHECK(one.elements() == std::vector<uint64_t>{1});
    CHECK(one.vertex_count() == 0);

    auto ten = UnitaryIdeal::interval(10);
    CHECK(vertex_values(ten) == std::vector<uint64_t>{2, 3, 4, 5, 7, 8, 9});

    // Prime powers up to 30, counted against a plain sieve.
    auto thirty = UnitaryIdeal::interval(30);
    uint64_t expected = 0;
    for (uint64_t m = 2; m <= 30; ++m) {
        auto c = unitary_components(m);
        if (c.size() == 1 && c[0].value == m) ++expected;
    }
    CHECK(expected == 16);
    CHECK(thirty.vertex_count() == expected);

    CHECK(thirty.contains(30));
    CHECK_FALSE(thirty.contains(31));
    CHECK_THROWS_AS(UnitaryIdeal::interval(0), DomainError);

    auto big = UnitaryIdeal::interval(kMaterializationThreshold + 1);
    CHECK(big.size() == kMaterializationThreshold + 1);
    CHECK_THROWS_AS(big.elements(), CapacityError);
}

TEST_CASE("check_unitary_ideal") {
    CHECK_FALSE(check_unitary_ideal(std::vector<uint64_t>{1, 2, 3, 6}).has_value());
    CHECK_FALSE(check_unitary_ideal(std::vector<uint64_t>{}).has_value());

    auto v = check_unitary_ideal(std::vector<uint64_t>{6});
    REQUIRE(v.has_value());
    CHECK(v->element == 6);
    CHECK(v->divisor == 2);

    auto v2 = check_unitary_ideal(std::vector<uint64_t>{2, 3, 6});
    REQUIRE(v2.has_value());
    CHECK(v2->element == 2);
    CHECK(v2->divisor == 1);

    CHECK_THROWS_AS(UnitaryIdeal::from_elements({6}), DomainError);
}

TEST_CASE("complex of an ideal") {
    auto c1 = SimplicialComplex::from_ideal(UnitaryIdeal::interval(1));
    CHECK(c1.vertex_count() == 0);
    CHECK(c1.face_count() == 1);
    CHECK(c1.faces()[0].empty());

    auto s = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{12});
    auto c = SimplicialComplex::from_ideal(s);
    CHECK(c.vertex_labels() == std::vector<uint64_t>{3, 4});
    CHECK(c.face_count() == 4);
    CHECK(c.canonical_faces() ==
          std::vector<std::vector<uint32_t>>{{}, {0}, {1}, {0, 1}});

    auto c30 = SimplicialComplex::from_ideal(UnitaryIdeal::interval(30));
    CHECK(c30.face_count() == 30);
    CHECK(c30.f_vector().face_count_with_empty() == 30);

    CHECK_THROWS_AS(
        SimplicialComplex::from_ideal(UnitaryIdeal::close_under_unitary_divisors({})),
        DomainError);
}

TEST_CASE("f-vector") {
    auto full3 = SimplicialComplex::from_facets({2, 3, 5}, {{0, 1, 2}});
    CHECK(full3.f_vector() == FVector{{3, 3, 1}});

    auto s = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{12});
    CHECK(SimplicialComplex::from_ideal(s).f_vector() == FVector{{2, 1}});

    auto c30 = SimplicialComplex::from_ideal(UnitaryIdeal::interval(30));
    CHECK(c30.f_vector().entries[0] == 16);
}

TEST_CASE("facets of materialized complexes") {
    auto full = SimplicialComplex::from_facets({2, 3, 5, 7}, {{0, 1, 2, 3}});
    auto idx = full.facet_indices();
    REQUIRE(idx.size() == 1);
    CHECK(full.faces()[idx[0]].size() == 4);

    auto c30 = SimplicialComplex::from_ideal(UnitaryIdeal::interval(30));
    CHECK(c30.facet_values() ==
          std::vector<uint64_t>{12, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30});

    auto c3 = SimplicialComplex::from_ideal(UnitaryIdeal::interval(3));
    CHECK(c3.facet_values() == std::vector<uint64_t>{2, 3});
}

TEST_CASE("facet cover and antichain properties") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<uint64_t> dist(1, 500);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<uint64_t> gens;
        for (int i = 0, k = 1 + int(rng() % 4); i < k; ++i) gens.push_back(dist(rng));
        auto ideal = UnitaryIdeal::close_under_unitary_divisors(gens);
        auto complex = SimplicialComplex::from_ideal(ideal);
        CHECK(complex.face_count() == ideal.size());
        CHECK(complex.f_vector().face_count_with_empty() == ideal.size());

        const auto facet_idx = complex.facet_indices();
        const auto& faces = complex.faces();
        auto contains = [](const std::vector<uint32_t>& big, const std::vector<uint32_t>& small) {
            return std::includes(big.begin(), big.end(), small.begin(), small.end());
        };
        // No facet inside another.
        for (size_t a : facet_idx)
            for (size_t b : facet_idx)
                if (a != b) CHECK_FALSE(contains(faces[b], faces[a]));
        // Every face is inside some facet.
        for (const auto& f : faces) {
            bool covered = false;
            for (size_t b : facet_idx)
                if (contains(faces[b], f)) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
    }
}

TEST_CASE("realize small examples") {
    auto single = SimplicialComplex::from_facets({1}, {{0}});
    CHECK(single.realize().elements() == std::vector<uint64_t>{1, 2});

    auto two_points = SimplicialComplex::from_facets({1, 2}, {{0}, {1}});
    CHECK(two_points.realize().elements() == std::vector<uint64_t>{1, 2, 3});

    auto full3 = SimplicialComplex::from_facets({1, 2, 3}, {{0, 1, 2}});
    CHECK(full3.realize().elements() == std::vector<uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});

    auto no_single = SimplicialComplex::from_facets({1, 2}, {{0, 1}});
    CHECK(no_single.realize().elements() == std::vector<uint64_t>{1, 2, 3, 6});
}

TEST_CASE("realization round trip on all small complexes") {
    for (uint32_t r = 1; r <= 4; ++r) {
        for (const auto& faces : all_complexes(r)) {
            std::vector<std::vector<uint32_t>> facets(faces.begin(), faces.end());
            std::vector<uint64_t> labels(r);
            std::iota(labels.begin(), labels.end(), 1);
            auto complex = SimplicialComplex::from_facets(labels, facets);
            REQUIRE(complex.face_count() == faces.size());
            auto realized = SimplicialComplex::from_ideal(complex.realize());
            CHECK(realized.canonical_faces() == complex.canonical_faces());
        }
    }
}

TEST_CASE("ideal JSON round trip") {
    auto s = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{6, 10});
    auto back = UnitaryIdeal::from_json(s.to_json());
    CHECK(back.elements() == s.elements());
    CHECK(s.to_json() == back.to_json());

    CHECK_THROWS_AS(UnitaryIdeal::from_json("{"), DomainError);
    CHECK_THROWS_AS(UnitaryIdeal::from_json("{\"elements\":[6]}"), DomainError);
}

TEST_CASE("complex JSON round trip reconstructs faces by closure") {
    auto s = UnitaryIdeal::interval(30);
    auto complex = SimplicialComplex::from_ideal(s);
    auto back = SimplicialComplex::from_json(complex.to_json());
    CHECK(back.vertex_labels() == complex.vertex_labels());
    CHECK(back.canonical_faces() == complex.canonical_faces());
    CHECK(back.to_json() == complex.to_json());

    CHECK_THROWS_AS(SimplicialComplex::from_json("[]"), DomainError);
}
