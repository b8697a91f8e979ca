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

#include <random>

#include "doctest.h"
#include "unitary/errors.hpp"

using namespace unitary;

namespace {

std::vector<std::vector<uint64_t>> facet_vertex_sets(const SimplicialComplex& complex) {
    std::vector<std::vector<uint64_t>> out;
    for (size_t i : complex.facet_indices()) {
        std::vector<uint64_t> w;
        for (uint32_t v : complex.faces()[i]) w.push_back(complex.vertex_labels()[v]);
        out.push_back(std::move(w));
    }
    return out;
}

Rational random_rational(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> num(lo * 12, hi * 12);
    return Rational(num(rng), 12);
}

}  // namespace

TEST_CASE("g_sum_direct") {
    auto one = UnitaryIdeal::interval(1);
    auto g = MultiplicativeFunction::builtin("const:7");
    CHECK(g_sum_direct(one, g) == 1);

    // Squarefree products of primes: G = prod(1 + g(p)).
    auto s = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{2 * 3 * 5 * 7});
    auto sig = MultiplicativeFunction::builtin("sigma_over_n");
    Rational expected = 1;
    for (uint64_t p : {2, 3, 5, 7}) expected *= 1 + sig.at_prime_power_value(p);
    CHECK(g_sum_direct(s, sig) == expected);

    auto s12 = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{12});
    auto g2 = MultiplicativeFunction::from_values({{3, Rational(2)}, {4, Rational(5)}});
    CHECK(g_sum_direct(s12, g2) == 18);
}

TEST_CASE("g_sum_fvector") {
    CHECK(g_sum_fvector(FVector{{3, 3, 1}}, Rational(1)) == 8);
    CHECK(g_sum_fvector(FVector{{2, 1}}, Rational(2)) == 9);
    CHECK(g_sum_fvector(FVector{{5, 17, 4}}, Rational(0)) == 1);
    CHECK(g_sum_fvector(FVector{{}}, Rational(3)) == 1);
}

TEST_CASE("g_sum_inclusion_exclusion") {
    // A single facet: one term, the full product.
    auto s = UnitaryIdeal::close_under_unitary_divisors(std::vector<uint64_t>{30});
    auto complex = SimplicialComplex::from_ideal(s);
    auto g = MultiplicativeFunction::builtin("const:2");
    CHECK(g_sum_inclusion_exclusion(facet_vertex_sets(complex), g) == 27);

    // Two overlapping singleton facets.
    auto s3 = UnitaryIdeal::interval(3);
    auto ones = MultiplicativeFunction::builtin("const:1");
    CHECK(g_sum_inclusion_exclusion(facet_vertex_sets(SimplicialComplex::from_ideal(s3)), ones) ==
          3);

    // Counting faces of [30] through its 17 facets.
    auto c30 = SimplicialComplex::from_ideal(UnitaryIdeal::interval(30));
    CHECK(facet_vertex_sets(c30).size() == 17);
    CHECK(g_sum_inclusion_exclusion(facet_vertex_sets(c30), ones) == 30);

    std::vector<std::vector<uint64_t>> too_many(21, std::vector<uint64_t>{2});
    CHECK_THROWS_AS(g_sum_inclusion_exclusion(too_many, ones), CapacityError);
}

TEST_CASE("summation route equivalence on random ideals") {
    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<uint64_t> gen_dist(1, 500);
    int done = 0;
    while (done < 60) {
        std::vector<uint64_t> gens;
        for (int i = 0, k = 1 + int(rng() % 4); i < k; ++i) gens.push_back(gen_dist(rng));
        auto ideal = UnitaryIdeal::close_under_unitary_divisors(gens);
        if (ideal.size() > 200) continue;
        auto complex = SimplicialComplex::from_ideal(ideal);
        auto facets = facet_vertex_sets(complex);
        if (facets.size() > 12) continue;
        ++done;

        std::map<uint64_t, Rational> values;
        for (const auto& q : ideal.vertices()) values[q.value] = random_rational(rng, -3, 3);
        auto g = MultiplicativeFunction::from_values(values);
        CHECK(g_sum_direct(ideal, g) == g_sum_inclusion_exclusion(facets, g));

        const Rational c = random_rational(rng, -2, 2);
        auto gc = MultiplicativeFunction::builtin("const:" + rational_to_string(c));
        const Rational direct = g_sum_direct(ideal, gc);
        CHECK(direct == g_sum_inclusion_exclusion(facets, gc));
        CHECK(direct == g_sum_fvector(complex.f_vector(), c));
    }
}

TEST_CASE("kozlov_vertex") {
    auto v41 = kozlov_vertex(4, 1);
    CHECK(v41.entries == std::vector<Int>{4, 0, 0, 0});
    auto v44 = kozlov_vertex(4, 4);
    CHECK(v44.entries == std::vector<Int>{4, 6, 4, 1});
    auto v52 = kozlov_vertex(5, 2);
    CHECK(v52.entries == std::vector<Int>{5, 10, 0, 0, 0});
    CHECK_THROWS_AS(kozlov_vertex(4, 0), DomainError);
    CHECK_THROWS_AS(kozlov_vertex(4, 5), DomainError);
}

TEST_CASE("psi argmax scan") {
    // Positive c always selects the top level.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const uint64_t r = 1 + rng() % 8;
        const Rational c = Rational(1 + int(rng() % 24), 1 + int(rng() % 6));
        CHECK(psi(r, c).argmax_level == r);
    }

    auto p = psi(5, Rational(-1));
    CHECK(p.k_values ==
          std::vector<Rational>{Rational(-5), Rational(5), Rational(-5), Rational(0), Rational(-1)});
    CHECK(p.value == 6);
    CHECK(p.argmax_level == 2);

    CHECK(psi(4, Rational(-5)).argmax_level == 4);
    CHECK(psi(4, Rational(-5)).value == 256);

    // c = 0: every K is zero, ties break to the smallest level.
    CHECK(psi(7, Rational(0)).value == 1);
    CHECK(psi(7, Rational(0)).argmax_level == 1);

    CHECK_THROWS_AS(psi(0, Rational(1)), DomainError);
}

TEST_CASE("psi_piecewise") {
    CHECK(psi_piecewise(5, Rational(1)) == 32);
    CHECK(psi_piecewise(5, Rational(-1, 10)) == psi(5, Rational(-1, 10)).value);
    CHECK(psi_piecewise(4, Rational(-5)) == psi(4, Rational(-5)).value);
    CHECK(psi_piecewise(1, Rational(-3)) == psi(1, Rational(-3)).value);
    CHECK(psi_piecewise(2, Rational(-7, 2)) == psi(2, Rational(-7, 2)).value);

    CHECK_THROWS_AS(psi_piecewise(5, Rational(0)), DomainError);
    // r = 5: the K_4-over-K_2 threshold is -4/(5-3) = -2.
    CHECK_THROWS_AS(psi_piecewise(5, Rational(-2)), DomainError);
}

TEST_CASE("psi_bruteforce") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational c = random_rational(rng, -4, 4);
        CHECK(psi_bruteforce(1, c) == 1 + c);
    }
    CHECK(psi_bruteforce(3, Rational(2)) == 27);
    CHECK(psi_bruteforce(4, Rational(-1)) == psi(4, Rational(-1)).value);
    CHECK_THROWS_AS(psi_bruteforce(6, Rational(1)), CapacityError);
}

TEST_CASE("psi agrees with the brute-force oracle") {
    std::mt19937_64 rng(20260811);
    std::uniform_int_distribution<int> num(-1200, 1200);
    std::uniform_int_distribution<int> den(1, 120);
    for (uint64_t r = 1; r <= 4; ++r) {
        for (int trial = 0; trial < 50; ++trial) {
            const Rational c(num(rng), den(rng));  // within [-10, 10]
            const auto direct = psi(r, c);
            CHECK(direct.value == psi_bruteforce(r, c));
            try {
                const Rational piecewise = psi_piecewise(r, c);
                CHECK(piecewise == direct.value);
            } catch (const DomainError&) {
                // boundary input; the scan route stays authoritative
            }
        }
    }
}

TEST_CASE("difference identity and its sign change") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const uint64_t r = 2 + rng() % 11;
        const Rational c = Rational(-(1 + int(rng() % 200)), 1 + int(rng() % 20));
        const auto p = psi(r, c);
        for (uint64_t i = 1; 2 * i + 2 <= r; ++i) {
            const Rational diff = p.k_values[2 * i + 1] - p.k_values[2 * i - 1];
            const Rational expected =
                rational_pow(c, 2 * i + 1) * (binomial(r, 2 * i + 1) + c * binomial(r, 2 * i + 2));
            CHECK(diff == expected);
            const Rational threshold(-Int(2 * i + 2), Int(r - 2 * i - 1));
            if (c < threshold) CHECK(diff > 0);
            if (c > threshold && c < 0) CHECK(diff < 0);
            if (c == threshold) CHECK(diff == 0);
        }
    }
}

TEST_CASE("thresholds decrease with the level") {
    for (uint64_t r = 4; r <= 50; ++r) {
        Rational prev = 0;
        bool first = true;
        for (uint64_t i = 1; 2 * i + 2 <= r; ++i) {
            const Rational t(-Int(2 * i + 2), Int(r - 2 * i - 1));
            CHECK(t == -Rational(binomial(r, 2 * i + 1), binomial(r, 2 * i + 2)));
            if (!first) CHECK(t < prev);
            prev = t;
            first = false;
        }
    }
}

TEST_CASE("zig-zag shape of the K sequence for negative c") {
    std::mt19937_64 rng(17);
    for (uint64_t r = 3; r <= 15; r += 2) {
        for (int trial = 0; trial < 12; ++trial) {
            const Rational c = Rational(-(1 + int(rng() % 120)), 1 + int(rng() % 10));
            const auto p = psi(r, c);
            for (uint64_t i = 0; 2 * i + 1 <= r; ++i) {
                const uint64_t odd = 2 * i + 1;
                if (odd >= 2) CHECK(p.k_values[odd - 1] <= p.k_values[odd - 2]);
                if (odd + 1 <= r) CHECK(p.k_values[odd - 1] <= p.k_values[odd]);
            }
        }
    }
}
