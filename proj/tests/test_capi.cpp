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

// Exercises the shared-library C surface the way an external client would:
// status codes, opaque handles, string ownership.

#include "unitary.h"

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    uy_string_free(s);
    return out;
}

std::vector<uint64_t> take(uint64_t* a, size_t len) {
    std::vector<uint64_t> out(a, a + len);
    uy_u64_array_free(a);
    return out;
}

}  // namespace

TEST_CASE("version and error text") {
    CHECK(std::strlen(uy_version()) > 0);
    uint64_t out = 0;
    CHECK(uy_smallest_prime_not_dividing(0, &out) == UY_ERR_DOMAIN);
    CHECK(std::strlen(uy_last_error()) > 0);
}

TEST_CASE("integer kernels") {
    uint64_t* values = nullptr;
    size_t len = 0;
    REQUIRE(uy_unitary_components(12, &values, &len) == UY_OK);
    CHECK(take(values, len) == std::vector<uint64_t>{3, 4});

    REQUIRE(uy_unitary_divisors(30, &values, &len) == UY_OK);
    CHECK(take(values, len) == std::vector<uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});

    int flag = 0;
    REQUIRE(uy_is_unitary_divisor(4, 12, &flag) == UY_OK);
    CHECK(flag == 1);
    REQUIRE(uy_is_unitary_divisor(2, 12, &flag) == UY_OK);
    CHECK(flag == 0);

    uint64_t p = 0;
    REQUIRE(uy_smallest_prime_not_dividing(30, &p) == UY_OK);
    CHECK(p == 7);

    CHECK(uy_unitary_components(0, &values, &len) == UY_ERR_DOMAIN);
}

TEST_CASE("ideal and complex handles") {
    const uint64_t gens[] = {6, 10};
    uy_ideal* ideal = nullptr;
    REQUIRE(uy_ideal_close(gens, 2, &ideal) == UY_OK);
    uint64_t size = 0;
    REQUIRE(uy_ideal_size(ideal, &size) == UY_OK);
    CHECK(size == 6);

    char* text = nullptr;
    REQUIRE(uy_ideal_to_json(ideal, &text) == UY_OK);
    const std::string j = take(text);
    CHECK(j == "{\"elements\":[1,2,3,5,6,10]}");

    uy_ideal* back = nullptr;
    REQUIRE(uy_ideal_from_json(j.c_str(), &back) == UY_OK);
    uint64_t* verts = nullptr;
    size_t len = 0;
    REQUIRE(uy_ideal_vertices(back, &verts, &len) == UY_OK);
    CHECK(take(verts, len) == std::vector<uint64_t>{2, 3, 5});
    uy_ideal_free(back);
    uy_ideal_free(ideal);

    CHECK(uy_ideal_from_json("{", &back) == UY_ERR_DOMAIN);
    CHECK(uy_ideal_from_json("{\"elements\":[6]}", &back) == UY_ERR_DOMAIN);

    int closed = 1;
    uint64_t element = 0, divisor = 0;
    const uint64_t bad[] = {6};
    REQUIRE(uy_check_unitary_ideal(bad, 1, &closed, &element, &divisor) == UY_OK);
    CHECK(closed == 0);
    CHECK(element == 6);
    CHECK(divisor == 2);

    uy_ideal* thirty = nullptr;
    REQUIRE(uy_ideal_interval(30, &thirty) == UY_OK);
    uy_complex* complex = nullptr;
    REQUIRE(uy_complex_of_ideal(thirty, &complex) == UY_OK);
    uint64_t vertices = 0, faces = 0;
    REQUIRE(uy_complex_counts(complex, &vertices, &faces) == UY_OK);
    CHECK(vertices == 16);
    CHECK(faces == 30);
    uint64_t* facet_values = nullptr;
    REQUIRE(uy_complex_facet_values(complex, &facet_values, &len) == UY_OK);
    CHECK(take(facet_values, len) ==
          std::vector<uint64_t>{12, 14, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29,
                                30});
    uint64_t* fvec = nullptr;
    REQUIRE(uy_complex_fvector(complex, &fvec, &len) == UY_OK);
    CHECK(take(fvec, len) == std::vector<uint64_t>{16, 12, 1});
    uy_complex_free(complex);
    uy_ideal_free(thirty);

    // Realization round trip through JSON.
    uy_complex* abstract = nullptr;
    REQUIRE(uy_complex_from_json("{\"vertices\":[1,2,3],\"facets\":[[0,1,2]]}", &abstract) ==
            UY_OK);
    uy_ideal* realized = nullptr;
    REQUIRE(uy_complex_realize(abstract, &realized) == UY_OK);
    uint64_t* elems = nullptr;
    REQUIRE(uy_ideal_elements(realized, &elems, &len) == UY_OK);
    CHECK(take(elems, len) == std::vector<uint64_t>{1, 2, 3, 5, 6, 10, 15, 30});
    uy_ideal_free(realized);
    uy_complex_free(abstract);

    // Capacity surfaces as its own status.
    uy_ideal* huge = nullptr;
    REQUIRE(uy_ideal_interval(2'000'000, &huge) == UY_OK);
    CHECK(uy_ideal_elements(huge, &elems, &len) == UY_ERR_CAPACITY);
    uy_ideal_free(huge);
}

TEST_CASE("multiplicative functions and sums") {
    uy_multfunc* g = nullptr;
    REQUIRE(uy_multfunc_builtin("sigma_over_n", &g) == UY_OK);
    char* value = nullptr;
    REQUIRE(uy_multfunc_eval(g, 4, &value) == UY_OK);
    CHECK(take(value) == "7/4");

    uy_ideal* ten = nullptr;
    REQUIRE(uy_ideal_interval(10, &ten) == UY_OK);
    int log_pos = 0, strict = 0, injective = 0;
    REQUIRE(uy_multfunc_classify(g, ten, &log_pos, &strict, &injective) == UY_OK);
    CHECK(log_pos == 1);
    CHECK(strict == 1);

    REQUIRE(uy_sum(ten, g, "direct", &value) == UY_OK);
    const std::string direct = take(value);
    REQUIRE(uy_sum(ten, g, "incl-excl", &value) == UY_OK);
    CHECK(take(value) == direct);
    CHECK(uy_sum(ten, g, "fvector", &value) == UY_ERR_DOMAIN);
    CHECK(uy_sum(ten, g, "nope", &value) == UY_ERR_DOMAIN);
    uy_multfunc_free(g);

    uy_multfunc* c2 = nullptr;
    REQUIRE(uy_multfunc_builtin("const:2", &c2) == UY_OK);
    REQUIRE(uy_sum(ten, c2, "fvector", &value) == UY_OK);
    const std::string by_fvector = take(value);
    REQUIRE(uy_sum(ten, c2, "direct", &value) == UY_OK);
    CHECK(take(value) == by_fvector);
    uy_multfunc_free(c2);
    uy_ideal_free(ten);

    uy_multfunc* parsed = nullptr;
    REQUIRE(uy_multfunc_parse("2 = 3/2\n3 = 2\n", &parsed) == UY_OK);
    REQUIRE(uy_multfunc_eval(parsed, 6, &value) == UY_OK);
    CHECK(take(value) == "3");
    CHECK(uy_multfunc_eval(parsed, 5, &value) == UY_ERR_DOMAIN);
    CHECK(std::string(uy_last_error()).find("5") != std::string::npos);
    uy_multfunc_free(parsed);

    CHECK(uy_multfunc_builtin("nope", &parsed) == UY_ERR_DOMAIN);
}

TEST_CASE("psi handles") {
    uy_psi_result* p = nullptr;
    REQUIRE(uy_psi(5, "-1", &p) == UY_OK);
    CHECK(std::string(uy_psi_value(p)) == "6");
    CHECK(uy_psi_argmax_level(p) == 2);
    REQUIRE(uy_psi_k_count(p) == 5);
    CHECK(std::string(uy_psi_k(p, 0)) == "-5");
    CHECK(std::string(uy_psi_k(p, 4)) == "-1");
    uy_psi_result_free(p);

    char* value = nullptr;
    REQUIRE(uy_psi_piecewise(5, "-0.1", &value) == UY_OK);
    CHECK(take(value) == "3/5");
    CHECK(uy_psi_piecewise(5, "0", &value) == UY_ERR_DOMAIN);
    REQUIRE(uy_psi_bruteforce(3, "2", &value) == UY_OK);
    CHECK(take(value) == "27");
    CHECK(uy_psi_bruteforce(6, "1", &value) == UY_ERR_CAPACITY);
    CHECK(uy_psi(5, "x", &p) == UY_ERR_DOMAIN);
}

TEST_CASE("facet surface") {
    int flag = 0;
    REQUIRE(uy_is_facet(12, 30, &flag) == UY_OK);
    CHECK(flag == 1);
    REQUIRE(uy_is_facet(15, 30, &flag) == UY_OK);
    CHECK(flag == 0);
    CHECK(uy_is_facet(31, 30, &flag) == UY_ERR_DOMAIN);

    uint64_t count = 0;
    REQUIRE(uy_facet_count(30, 1, &count) == UY_OK);
    CHECK(count == 17);
    REQUIRE(uy_facet_count(100'000, 4, &count) == UY_OK);
    uint64_t serial = 0;
    REQUIRE(uy_facet_count(100'000, 1, &serial) == UY_OK);
    CHECK(count == serial);

    uint64_t* list = nullptr;
    size_t len = 0;
    REQUIRE(uy_facet_list(10, &list, &len) == UY_OK);
    CHECK(take(list, len) == std::vector<uint64_t>{4, 6, 7, 8, 9, 10});

    char* density = nullptr;
    REQUIRE(uy_facet_density(30, 1, &density) == UY_OK);
    CHECK(take(density) == "17/30");

    char* g15 = nullptr;
    double g = 0;
    uint64_t terms = 0;
    REQUIRE(uy_gamma(1e-12, &g15, &g, &terms) == UY_OK);
    CHECK(take(g15).substr(0, 8) == "0.607714");
    CHECK(terms == 9);

    char* csv = nullptr;
    uint64_t rows = 0, cols = 0;
    REQUIRE(uy_facet_matrix_csv(30, &csv, &rows, &cols) == UY_OK);
    CHECK(rows == 17);
    CHECK(cols == 16);
    CHECK(take(csv).substr(0, 6) == "facet,");

    uy_multfunc* two = nullptr;
    REQUIRE(uy_multfunc_builtin("two_omega", &two) == UY_OK);
    uint64_t argmax = 0;
    char* value = nullptr;
    REQUIRE(uy_maximize(30, two, "facet", 1, &argmax, &value) == UY_OK);
    CHECK(argmax == 30);
    CHECK(take(value) == "8");
    CHECK(uy_maximize(30, two, "nope", 1, &argmax, &value) == UY_ERR_DOMAIN);
    uy_multfunc_free(two);
}

TEST_CASE("poset and order surface") {
    uy_poset* y = nullptr;
    REQUIRE(uy_poset_y(4, &y) == UY_OK);
    uint64_t elements = 0, covers = 0;
    REQUIRE(uy_poset_size(y, &elements, &covers) == UY_OK);
    CHECK(elements == 16);
    char* count = nullptr;
    REQUIRE(uy_poset_count_extensions(y, &count) == UY_OK);
    CHECK(take(count) == "78");

    const uint32_t two = 2;
    uy_poset* restricted = nullptr;
    REQUIRE(uy_poset_restrict_sizes(y, &two, 1, &restricted) == UY_OK);
    REQUIRE(uy_poset_size(restricted, &elements, &covers) == UY_OK);
    CHECK(elements == 6);
    CHECK(covers == 6);
    REQUIRE(uy_poset_count_extensions(restricted, &count) == UY_OK);
    CHECK(take(count) == "2");
    uint64_t lo = 0, hi = 0;
    REQUIRE(uy_poset_cover(restricted, 0, &lo, &hi) == UY_OK);
    CHECK(uy_poset_cover(restricted, covers, &lo, &hi) == UY_ERR_DOMAIN);
    uy_poset_free(restricted);
    uy_poset_free(y);

    // The impossible order, through the generic check.
    const uint64_t descending_reversed[] = {35, 14, 15, 10, 21, 6};
    uy_order_check* check = nullptr;
    REQUIRE(uy_order_check_run(descending_reversed, 6, &check) == UY_OK);
    CHECK(uy_order_check_feasible(check) == 0);
    CHECK(uy_order_check_report_lines(check) >= 2);
    CHECK(std::string(uy_order_check_report_line(check, 0)).find("INFEASIBLE") == 0);
    uy_order_check_free(check);

    const uint64_t fine[] = {6, 10, 15, 14, 21, 35};
    REQUIRE(uy_order_check_run(fine, 6, &check) == UY_OK);
    CHECK(uy_order_check_feasible(check) == 1);
    REQUIRE(uy_order_check_vertex_count(check) == 4);
    CHECK(uy_order_check_vertex(check, 0) == 2);
    CHECK(std::strlen(uy_order_check_weight(check, 0)) > 0);
    uy_order_check_free(check);

    uy_orders* orders = nullptr;
    REQUIRE(uy_orders_enumerate(4, 2, 0, &orders) == UY_OK);
    CHECK(uy_orders_count(orders) == 48);
    CHECK(uy_orders_length(orders) == 6);
    uint64_t mask = 0;
    REQUIRE(uy_orders_face(orders, 0, 0, &mask) == UY_OK);
    CHECK(uy_orders_face(orders, 48, 0, &mask) == UY_ERR_DOMAIN);
    uy_orders_free(orders);
    REQUIRE(uy_orders_enumerate(4, 2, 1, &orders) == UY_OK);
    CHECK(uy_orders_count(orders) == 2);
    uy_orders_free(orders);

    uint64_t t = 0, ts = 0;
    char* ext = nullptr;
    char* bound = nullptr;
    int holds = 0;
    REQUIRE(uy_check_nord_bound(4, 2, &t, &ts, &ext, &bound, &holds) == UY_OK);
    CHECK(t == 48);
    CHECK(ts == 2);
    CHECK(take(ext) == "2");
    CHECK(take(bound) == "48");
    CHECK(holds == 1);

    int confirmed = 0;
    char* report = nullptr;
    REQUIRE(uy_verify_impossible_example(&confirmed, &report) == UY_OK);
    CHECK(confirmed == 1);
    CHECK(take(report).find("INFEASIBLE") != std::string::npos);
}
