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

#include <random>

#include "doctest.h"
#include "unitary/errors.hpp"
#include "unitary/ideal.hpp"
#include "unitary/summation.hpp"

using namespace unitary;

namespace {

const std::vector<uint64_t> kFacets30 = {12, 14, 16, 17, 18, 19, 20, 21, 22,
                                         23, 24, 25, 26, 27, 28, 29, 30};

}  // namespace

TEST_CASE("is_facet_in_interval") {
    CHECK(is_facet_in_interval(12, 30));
    CHECK_FALSE(is_facet_in_interval(15, 30));
    CHECK(is_facet_in_interval(1, 1));
    CHECK_FALSE(is_facet_in_interval(1, 2));
    CHECK_THROWS_AS(is_facet_in_interval(31, 30), DomainError);
    CHECK_THROWS_AS(is_facet_in_interval(0, 30), DomainError);
}

TEST_CASE("enumerate_facets matches the materialized-complex oracle") {
    // The oracle takes maximality straight from the definition.
    auto oracle = [](uint64_t n) {
        return SimplicialComplex::from_ideal(UnitaryIdeal::interval(n)).facet_values();
    };
    CHECK(enumerate_facets(30) == kFacets30);
    CHECK(oracle(30) == kFacets30);
    CHECK(enumerate_facets(1) == std::vector<uint64_t>{1});
    CHECK(enumerate_facets(10) == oracle(10));
    CHECK(enumerate_facets(10) == std::vector<uint64_t>{4, 6, 7, 8, 9, 10});

    for (uint64_t n = 1; n <= 300; ++n) CHECK(enumerate_facets(n) == oracle(n));
    for (uint64_t n : {500, 997, 1024, 1500, 2000}) CHECK(enumerate_facets(n) == oracle(n));
}

TEST_CASE("facet density") {
    CHECK(facet_density(30) == Rational(17, 30));
    CHECK(facet_density(1) == 1);
    CHECK(count_facets(30) == 17);
}

TEST_CASE("parallel count matches serial") {
    const uint64_t n = 100'000;
    const uint64_t serial = count_facets(n, 1);
    CHECK(count_facets(n, 4) == serial);
    CHECK(count_facets(n, 3) == serial);
}

TEST_CASE("gamma series") {
    auto est = gamma_constant(1e-12);
    // Published value of the constant, 15 digits.
    const Rational reference(Int("607714359516618"), Int("1000000000000000"));
    Rational err = est.series_value - reference;
    if (err < 0) err = -err;
    CHECK(err < Rational(1, Int("1000000000000")));

    auto coarse = gamma_constant(1.0);
    CHECK(coarse.series_value == Rational(1, 2));
    CHECK(coarse.terms_used == 0);

    // First correction term is (1/2 - 1/3)/2 = 1/12.
    auto one_term = gamma_constant(0.08);
    CHECK(one_term.terms_used == 1);
    CHECK(one_term.series_value == Rational(1, 2) + Rational(1, 12));

    CHECK_THROWS_AS(gamma_constant(0.0), DomainError);
    CHECK_THROWS_AS(gamma_constant(-1.0), DomainError);
}

TEST_CASE("empirical density approaches the constant") {
    const auto gamma = rational_to_double(gamma_constant(1e-12).series_value);
    const double density = rational_to_double(facet_density(100'000));
    CHECK(std::abs(density - gamma) < 0.01);
}

TEST_CASE("facet matrix") {
    auto m10 = facet_matrix(10);
    CHECK(m10.prime_powers == std::vector<uint64_t>{2, 3, 4, 5, 7, 8, 9});
    CHECK(m10.facet_values == std::vector<uint64_t>{4, 6, 7, 8, 9, 10});
    // The row of the facet 8 has a single 1, in the column of 8 itself.
    CHECK(m10.rows[3] == std::vector<uint32_t>{5});
    // 10 = 2 * 5.
    CHECK(m10.rows[5] == std::vector<uint32_t>{0, 3});

    auto m30 = facet_matrix(30);
    CHECK(m30.facet_values.size() == 17);
    CHECK(m30.prime_powers.size() == 16);
    for (size_t i = 0; i < m30.rows.size(); ++i) {
        uint64_t product = 1;
        for (uint32_t j : m30.rows[i]) product *= m30.prime_powers[j];
        CHECK(product == m30.facet_values[i]);
    }

    auto m1 = facet_matrix(1);
    CHECK(m1.prime_powers.empty());
    CHECK(m1.facet_values == std::vector<uint64_t>{1});
    CHECK(m1.rows == std::vector<std::vector<uint32_t>>{{}});

    const std::string csv = facet_matrix_csv(m10);
    CHECK(csv.substr(0, csv.find('\n')) == "facet,2,3,4,5,7,8,9");
    CHECK(csv.find("\n4,0,0,1,0,0,0,0\n") != std::string::npos);

    CHECK_THROWS_AS(facet_matrix(kFacetMatrixCap + 1), CapacityError);
}

TEST_CASE("maximize two_omega on [30]") {
    auto g = MultiplicativeFunction::builtin("two_omega");
    auto naive = maximize_on_interval(30, g, MaxStrategy::naive);
    auto facet = maximize_on_interval(30, g, MaxStrategy::facet);
    CHECK(naive.argmax == 30);
    CHECK(naive.value == 8);
    CHECK(facet.argmax == 30);
    CHECK(facet.value == 8);
}

TEST_CASE("maximize trivial interval") {
    auto g = MultiplicativeFunction::builtin("sigma_over_n");
    auto r = maximize_on_interval(1, g, MaxStrategy::facet);
    CHECK(r.argmax == 1);
    CHECK(r.value == 1);
}

TEST_CASE("facet strategy refuses non-log-positive functions") {
    auto g = MultiplicativeFunction::from_generator(
        [](const PrimePower& q) { return q.value == 3 ? Rational(1, 2) : Rational(2); }, "dip");
    try {
        maximize_on_interval(30, g, MaxStrategy::facet);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("g(3)") != std::string::npos);
    }
    // The naive strategy still answers.
    auto naive = maximize_on_interval(10, g, MaxStrategy::naive);
    CHECK(naive.value == 4);  // at 10 = 2 * 5
    CHECK(naive.argmax == 10);
}

TEST_CASE("separator of each facet peaks exactly there") {
    for (uint64_t n : {30, 100, 200}) {
        for (uint64_t w : enumerate_facets(n)) {
            std::vector<uint64_t> vertices;
            for (const auto& c : unitary_components(w)) vertices.push_back(c.value);
            auto h = facet_separator(vertices);
            const Rational top = rational_pow(Rational(2), vertices.size());
            uint64_t hits = 0;
            for (uint64_t m = 1; m <= n; ++m) {
                const Rational v = h.evaluate(m);
                CHECK(v <= top);
                if (v == top) ++hits;
            }
            CHECK(hits == 1);
            auto best = maximize_on_interval(n, h, MaxStrategy::facet);
            CHECK(best.argmax == w);
            CHECK(best.value == top);
        }
    }
}

TEST_CASE("strategy agreement on random strictly log-positive functions") {
    std::mt19937_64 rng(20260812);
    for (int trial = 0; trial < 12; ++trial) {
        const uint64_t n = 2 + rng() % 4999;
        std::map<uint64_t, Rational> values;
        for (const auto& q : prime_powers_up_to(n))
            values[q.value] = 1 + Rational(1 + int(rng() % 999983), 999983) * 2;
        auto g = MultiplicativeFunction::from_values(values);
        auto naive = maximize_on_interval(n, g, MaxStrategy::naive);
        auto facet = maximize_on_interval(n, g, MaxStrategy::facet);
        CHECK(naive.value == facet.value);
        CHECK(naive.argmax == facet.argmax);
        auto threaded = maximize_on_interval(n, g, MaxStrategy::naive, 4);
        CHECK(threaded.value == naive.value);
        CHECK(threaded.argmax == naive.argmax);
    }
}

TEST_CASE("facets cover everything: counting identity") {
    for (uint64_t n = 1; n <= 2000; n += (n < 50 ? 1 : 97)) {
        uint64_t covered = 0;
        for (uint64_t w : enumerate_facets(n))
            covered += uint64_t(1) << unitary_components(w).size();
        CHECK(covered >= n);
    }
    // With inclusion-exclusion the count is exact.
    auto ones = MultiplicativeFunction::builtin("const:1");
    for (uint64_t n : {1, 2, 7, 12, 19, 24, 30}) {
        std::vector<std::vector<uint64_t>> facets;
        for (uint64_t w : enumerate_facets(n)) {
            std::vector<uint64_t> verts;
            for (const auto& c : unitary_components(w)) verts.push_back(c.value);
            facets.push_back(std::move(verts));
        }
        CHECK(g_sum_inclusion_exclusion(facets, ones) == Rational(Int(n)));
    }
}
