/* Copyright 2026 The unitary authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the unitary library.
 *
 * Conventions:
 *   - Every function returns a uy_status; results come back through out
 *     parameters. UY_OK means the out parameters are valid.
 *   - On failure, uy_last_error() returns a thread-local message.
 *   - Objects behind opaque handles are freed with their matching
 *     uy_*_free function; strings and arrays allocated by the library are
 *     released with uy_string_free / uy_u64_array_free.
 *   - Exact rationals cross the boundary as strings ("p/q" or "p");
 *     decimal strings are accepted on input and converted verbatim.
 *   - "Infeasible" is an answer, not an error: order checks return UY_OK
 *     and report feasibility through the result handle.
 */

#ifndef UNITARY_H
#define UNITARY_H

#include <stddef.h>
#include <stdint.h>

#ifdef _WIN32
#define UY_API __declspec(dllexport)
#else
#define UY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum uy_status {
    UY_OK = 0,
    UY_ERR_DOMAIN = 1,   /* input outside an operation's domain */
    UY_ERR_CAPACITY = 2, /* request exceeds a configured capacity bound */
    UY_ERR_INTERNAL = 4  /* unexpected failure; please report */
} uy_status;

UY_API const char* uy_version(void);
UY_API const char* uy_last_error(void);
UY_API void uy_string_free(char* s);
UY_API void uy_u64_array_free(uint64_t* a);
UY_API void uy_u32_array_free(uint32_t* a);

/* ---- integer kernels --------------------------------------------------- */

/* Prime-power components p^a with p^a || m, ascending. m = 1 gives len 0. */
UY_API uy_status uy_unitary_components(uint64_t m, uint64_t** out, size_t* len);
UY_API uy_status uy_unitary_divisors(uint64_t m, uint64_t** out, size_t* len);
UY_API uy_status uy_is_unitary_divisor(uint64_t d, uint64_t m, int* out);
UY_API uy_status uy_smallest_prime_not_dividing(uint64_t m, uint64_t* out);

/* ---- unitary ideals and complexes -------------------------------------- */

typedef struct uy_ideal uy_ideal;
typedef struct uy_complex uy_complex;

UY_API uy_status uy_ideal_close(const uint64_t* generators, size_t count, uy_ideal** out);
UY_API uy_status uy_ideal_interval(uint64_t n, uy_ideal** out);
UY_API uy_status uy_ideal_from_json(const char* text, uy_ideal** out);
UY_API uy_status uy_ideal_to_json(const uy_ideal* ideal, char** out);
UY_API uy_status uy_ideal_size(const uy_ideal* ideal, uint64_t* out);
UY_API uy_status uy_ideal_elements(const uy_ideal* ideal, uint64_t** out, size_t* len);
UY_API uy_status uy_ideal_vertices(const uy_ideal* ideal, uint64_t** out, size_t* len);
UY_API void uy_ideal_free(uy_ideal* ideal);

/* Closure check: closed = 1 and the witness untouched, or closed = 0 with
 * element/divisor set to the first violating pair. */
UY_API uy_status uy_check_unitary_ideal(const uint64_t* candidate, size_t count, int* closed,
                                        uint64_t* element, uint64_t* divisor);

UY_API uy_status uy_complex_of_ideal(const uy_ideal* ideal, uy_complex** out);
UY_API uy_status uy_complex_from_json(const char* text, uy_complex** out);
UY_API uy_status uy_complex_to_json(const uy_complex* complex, char** out);
UY_API uy_status uy_complex_counts(const uy_complex* complex, uint64_t* vertices,
                                   uint64_t* faces);
UY_API uy_status uy_complex_fvector(const uy_complex* complex, uint64_t** out, size_t* len);
/* Facet integer values, ascending; UY_ERR_DOMAIN for abstract complexes. */
UY_API uy_status uy_complex_facet_values(const uy_complex* complex, uint64_t** out, size_t* len);
UY_API uy_status uy_complex_realize(const uy_complex* complex, uy_ideal** out);
UY_API void uy_complex_free(uy_complex* complex);

/* ---- multiplicative functions ------------------------------------------ */

typedef struct uy_multfunc uy_multfunc;

/* Builtins: "two_omega", "sigma_over_n", "const:<rational>". */
UY_API uy_status uy_multfunc_builtin(const char* name, uy_multfunc** out);
/* Function file format: newline-delimited "p^a = value" entries. */
UY_API uy_status uy_multfunc_parse(const char* text, uy_multfunc** out);
UY_API uy_status uy_multfunc_eval(const uy_multfunc* g, uint64_t m, char** value);
UY_API uy_status uy_multfunc_classify(const uy_multfunc* g, const uy_ideal* ideal,
                                      int* log_positive, int* strictly_log_positive,
                                      int* injective);
UY_API void uy_multfunc_free(uy_multfunc* g);

/* ---- summation ----------------------------------------------------------- */

/* method: "direct", "incl-excl", or "fvector" (the last requires g to be
 * constant on the vertex set). */
UY_API uy_status uy_sum(const uy_ideal* ideal, const uy_multfunc* g, const char* method,
                        char** value);

typedef struct uy_psi_result uy_psi_result;

UY_API uy_status uy_psi(uint64_t r, const char* c, uy_psi_result** out);
UY_API const char* uy_psi_value(const uy_psi_result* p);
UY_API uint64_t uy_psi_argmax_level(const uy_psi_result* p);
UY_API size_t uy_psi_k_count(const uy_psi_result* p);
UY_API const char* uy_psi_k(const uy_psi_result* p, size_t i);
UY_API void uy_psi_result_free(uy_psi_result* p);

UY_API uy_status uy_psi_piecewise(uint64_t r, const char* c, char** value);
UY_API uy_status uy_psi_bruteforce(uint64_t r, const char* c, char** value);

/* ---- facets of [1..n] ---------------------------------------------------- */

UY_API uy_status uy_is_facet(uint64_t m, uint64_t n, int* out);
UY_API uy_status uy_facet_count(uint64_t n, unsigned threads, uint64_t* out);
UY_API uy_status uy_facet_list(uint64_t n, uint64_t** out, size_t* len);
UY_API uy_status uy_facet_density(uint64_t n, unsigned threads, char** value);
UY_API uy_status uy_gamma(double truncation_bound, char** value15, double* value,
                          uint64_t* terms_used);
/* Dense CSV: header "facet,q_1,...,q_r", one 0/1 row per facet. */
UY_API uy_status uy_facet_matrix_csv(uint64_t n, char** csv, uint64_t* rows, uint64_t* cols);

/* strategy: "naive" or "facet" (the latter requires log-positive g). */
UY_API uy_status uy_maximize(uint64_t n, const uy_multfunc* g, const char* strategy,
                             unsigned threads, uint64_t* argmax, char** value);

/* ---- orders --------------------------------------------------------------- */

typedef struct uy_poset uy_poset;

UY_API uy_status uy_poset_y(uint32_t r, uy_poset** out);
/* sizes: face cardinalities to keep, e.g. {2} for all 2-subsets. */
UY_API uy_status uy_poset_restrict_sizes(const uy_poset* p, const uint32_t* sizes,
                                         size_t count, uy_poset** out);
/* faces: bitmasks over v_1..v_r (bit k = vertex v_{k+1}). */
UY_API uy_status uy_poset_restrict_faces(const uy_poset* p, const uint64_t* faces, size_t count,
                                         uy_poset** out);
UY_API uy_status uy_poset_size(const uy_poset* p, uint64_t* elements, uint64_t* covers);
UY_API uy_status uy_poset_element(const uy_poset* p, size_t i, uint64_t* mask);
UY_API uy_status uy_poset_cover(const uy_poset* p, size_t i, uint64_t* lo_mask,
                                uint64_t* hi_mask);
UY_API uy_status uy_poset_count_extensions(const uy_poset* p, char** count);
UY_API void uy_poset_free(uy_poset* p);

/* Order checks over integers listed in claimed ascending order. */
typedef struct uy_order_check uy_order_check;

UY_API uy_status uy_order_check_run(const uint64_t* ascending, size_t count,
                                    uy_order_check** out);
UY_API int uy_order_check_feasible(const uy_order_check* c);
UY_API size_t uy_order_check_vertex_count(const uy_order_check* c);
UY_API uint64_t uy_order_check_vertex(const uy_order_check* c, size_t i);
/* Weights: valid when feasible. */
UY_API const char* uy_order_check_weight(const uy_order_check* c, size_t i);
/* Human-readable certificate lines: weights, or the contradiction. */
UY_API size_t uy_order_check_report_lines(const uy_order_check* c);
UY_API const char* uy_order_check_report_line(const uy_order_check* c, size_t i);
UY_API void uy_order_check_free(uy_order_check* c);

/* Enumeration of realizable orders on the k-subsets of r vertices. */
typedef struct uy_orders uy_orders;

UY_API uy_status uy_orders_enumerate(uint32_t r, uint32_t k, int sorted_only, uy_orders** out);
UY_API size_t uy_orders_count(const uy_orders* o);
UY_API size_t uy_orders_length(const uy_orders* o);
UY_API uy_status uy_orders_face(const uy_orders* o, size_t order_index, size_t position,
                                uint64_t* mask);
UY_API void uy_orders_free(uy_orders* o);

UY_API uy_status uy_check_nord_bound(uint32_t r, uint32_t k, uint64_t* t_unsorted,
                                     uint64_t* t_sorted, char** extensions, char** bound,
                                     int* holds);

/* The fixed impossibility check on {6, 21, 10, 15, 14, 35}:
 * confirmed = 1 when the descending order is infeasible and the sanity
 * inverse is feasible; report is a multi-line account. */
UY_API uy_status uy_verify_impossible_example(int* confirmed, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* UNITARY_H */
