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

#include "unitary.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "unitary/arith.hpp"
#include "unitary/errors.hpp"
#include "unitary/facets.hpp"
#include "unitary/ideal.hpp"
#include "unitary/multfunc.hpp"
#include "unitary/orders.hpp"
#include "unitary/summation.hpp"

using namespace unitary;

namespace {

thread_local std::string g_last_error;

template <typename Fn>
uy_status guarded(Fn&& fn) {
    try {
        fn();
        return UY_OK;
    } catch (const CapacityError& e) {
        g_last_error = e.what();
        return UY_ERR_CAPACITY;
    } catch (const DomainError& e) {
        g_last_error = e.what();
        return UY_ERR_DOMAIN;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return UY_ERR_CAPACITY;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return UY_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return UY_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

uint64_t* dup_u64(const std::vector<uint64_t>& v) {
    uint64_t* out = static_cast<uint64_t*>(std::malloc(sizeof(uint64_t) * std::max<size_t>(v.size(), 1)));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, v.data(), sizeof(uint64_t) * v.size());
    return out;
}

void require(bool ok, const char* message) {
    if (!ok) throw DomainError(message);
}

std::string face_product_string(FaceMask mask, const std::vector<uint64_t>& vertex_values) {
    Int product = 1;
    for (size_t v = 0; v < vertex_values.size(); ++v)
        if (mask >> v & 1) product *= Int(vertex_values[v]);
    return product.str();
}

std::string weight_sum_string(FaceMask mask, const std::vector<uint64_t>& vertex_values) {
    if (mask == 0) return "0";
    std::string out;
    for (size_t v = 0; v < vertex_values.size(); ++v) {
        if (!(mask >> v & 1)) continue;
        if (!out.empty()) out += " + ";
        out += "w(" + std::to_string(vertex_values[v]) + ")";
    }
    return out;
}

}  // namespace

struct uy_ideal {
    UnitaryIdeal v;
};
struct uy_complex {
    SimplicialComplex v;
};
struct uy_multfunc {
    MultiplicativeFunction v;
};
struct uy_psi_result {
    PsiResult v;
    std::string value_str;
    std::vector<std::string> k_str;
};
struct uy_poset {
    CoverPoset v;
};
struct uy_order_check {
    IntegerOrderCheck v;
    std::vector<std::string> weights;
    std::vector<std::string> report;
};
struct uy_orders {
    std::vector<TotalOrder> v;
};

extern "C" {

const char* uy_version(void) { return "0.1.0"; }

const char* uy_last_error(void) { return g_last_error.c_str(); }

void uy_string_free(char* s) { std::free(s); }
void uy_u64_array_free(uint64_t* a) { std::free(a); }
void uy_u32_array_free(uint32_t* a) { std::free(a); }

/* ---- integer kernels --------------------------------------------------- */

uy_status uy_unitary_components(uint64_t m, uint64_t** out, size_t* len) {
    return guarded([&] {
        require(out && len, "null output");
        std::vector<uint64_t> values;
        for (const auto& q : unitary_components(m)) values.push_back(q.value);
        *out = dup_u64(values);
        *len = values.size();
    });
}

uy_status uy_unitary_divisors(uint64_t m, uint64_t** out, size_t* len) {
    return guarded([&] {
        require(out && len, "null output");
        const auto values = unitary_divisors(m);
        *out = dup_u64(values);
        *len = values.size();
    });
}

uy_status uy_is_unitary_divisor(uint64_t d, uint64_t m, int* out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = is_unitary_divisor(d, m) ? 1 : 0;
    });
}

uy_status uy_smallest_prime_not_dividing(uint64_t m, uint64_t* out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = smallest_prime_not_dividing(m);
    });
}

/* ---- ideals and complexes ----------------------------------------------- */

uy_status uy_ideal_close(const uint64_t* generators, size_t count, uy_ideal** out) {
    return guarded([&] {
        require(out && (generators || count == 0), "null input");
        *out = new uy_ideal{UnitaryIdeal::close_under_unitary_divisors(
            std::span<const uint64_t>(generators, count))};
    });
}

uy_status uy_ideal_interval(uint64_t n, uy_ideal** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = new uy_ideal{UnitaryIdeal::interval(n)};
    });
}

uy_status uy_ideal_from_json(const char* text, uy_ideal** out) {
    return guarded([&] {
        require(text && out, "null input");
        *out = new uy_ideal{UnitaryIdeal::from_json(text)};
    });
}

uy_status uy_ideal_to_json(const uy_ideal* ideal, char** out) {
    return guarded([&] {
        require(ideal && out, "null input");
        *out = dup_string(ideal->v.to_json());
    });
}

uy_status uy_ideal_size(const uy_ideal* ideal, uint64_t* out) {
    return guarded([&] {
        require(ideal && out, "null input");
        *out = ideal->v.size();
    });
}

uy_status uy_ideal_elements(const uy_ideal* ideal, uint64_t** out, size_t* len) {
    return guarded([&] {
        require(ideal && out && len, "null input");
        const auto& elems = ideal->v.elements();
        *out = dup_u64(elems);
        *len = elems.size();
    });
}

uy_status uy_ideal_vertices(const uy_ideal* ideal, uint64_t** out, size_t* len) {
    return guarded([&] {
        require(ideal && out && len, "null input");
        std::vector<uint64_t> values;
        for (const auto& q : ideal->v.vertices()) values.push_back(q.value);
        *out = dup_u64(values);
        *len = values.size();
    });
}

void uy_ideal_free(uy_ideal* ideal) { delete ideal; }

uy_status uy_check_unitary_ideal(const uint64_t* candidate, size_t count, int* closed,
                                 uint64_t* element, uint64_t* divisor) {
    return guarded([&] {
        require(closed && (candidate || count == 0), "null input");
        const auto violation = check_unitary_ideal(std::span<const uint64_t>(candidate, count));
        *closed = violation ? 0 : 1;
        if (violation) {
            if (element) *element = violation->element;
            if (divisor) *divisor = violation->divisor;
        }
    });
}

uy_status uy_complex_of_ideal(const uy_ideal* ideal, uy_complex** out) {
    return guarded([&] {
        require(ideal && out, "null input");
        *out = new uy_complex{SimplicialComplex::from_ideal(ideal->v)};
    });
}

uy_status uy_complex_from_json(const char* text, uy_complex** out) {
    return guarded([&] {
        require(text && out, "null input");
        *out = new uy_complex{SimplicialComplex::from_json(text)};
    });
}

uy_status uy_complex_to_json(const uy_complex* complex, char** out) {
    return guarded([&] {
        require(complex && out, "null input");
        *out = dup_string(complex->v.to_json());
    });
}

uy_status uy_complex_counts(const uy_complex* complex, uint64_t* vertices, uint64_t* faces) {
    return guarded([&] {
        require(complex != nullptr, "null input");
        if (vertices) *vertices = complex->v.vertex_count();
        if (faces) *faces = complex->v.face_count();
    });
}

uy_status uy_complex_fvector(const uy_complex* complex, uint64_t** out, size_t* len) {
    return guarded([&] {
        require(complex && out && len, "null input");
        const auto f = complex->v.f_vector();
        *out = dup_u64(f.entries);
        *len = f.entries.size();
    });
}

uy_status uy_complex_facet_values(const uy_complex* complex, uint64_t** out, size_t* len) {
    return guarded([&] {
        require(complex && out && len, "null input");
        const auto values = complex->v.facet_values();
        *out = dup_u64(values);
        *len = values.size();
    });
}

uy_status uy_complex_realize(const uy_complex* complex, uy_ideal** out) {
    return guarded([&] {
        require(complex && out, "null input");
        *out = new uy_ideal{complex->v.realize()};
    });
}

void uy_complex_free(uy_complex* complex) { delete complex; }

/* ---- multiplicative functions ------------------------------------------- */

uy_status uy_multfunc_builtin(const char* name, uy_multfunc** out) {
    return guarded([&] {
        require(name && out, "null input");
        *out = new uy_multfunc{MultiplicativeFunction::builtin(name)};
    });
}

uy_status uy_multfunc_parse(const char* text, uy_multfunc** out) {
    return guarded([&] {
        require(text && out, "null input");
        *out = new uy_multfunc{MultiplicativeFunction::parse(text)};
    });
}

uy_status uy_multfunc_eval(const uy_multfunc* g, uint64_t m, char** value) {
    return guarded([&] {
        require(g && value, "null input");
        *value = dup_string(rational_to_string(g->v.evaluate(m)));
    });
}

uy_status uy_multfunc_classify(const uy_multfunc* g, const uy_ideal* ideal, int* log_positive,
                               int* strictly_log_positive, int* injective) {
    return guarded([&] {
        require(g && ideal, "null input");
        const auto c = classify(g->v, ideal->v);
        if (log_positive) *log_positive = c.log_positive;
        if (strictly_log_positive) *strictly_log_positive = c.strictly_log_positive;
        if (injective) *injective = c.injective_on_s;
    });
}

void uy_multfunc_free(uy_multfunc* g) { delete g; }

/* ---- summation ------------------------------------------------------------ */

uy_status uy_sum(const uy_ideal* ideal, const uy_multfunc* g, const char* method, char** value) {
    return guarded([&] {
        require(ideal && g && method && value, "null input");
        const std::string m = method;
        Rational result;
        if (m == "direct") {
            result = g_sum_direct(ideal->v, g->v);
        } else if (m == "incl-excl") {
            const auto complex = SimplicialComplex::from_ideal(ideal->v);
            std::vector<std::vector<uint64_t>> facets;
            for (size_t i : complex.facet_indices()) {
                std::vector<uint64_t> w;
                for (uint32_t v : complex.faces()[i]) w.push_back(complex.vertex_labels()[v]);
                facets.push_back(std::move(w));
            }
            result = g_sum_inclusion_exclusion(facets, g->v);
        } else if (m == "fvector") {
            const auto& verts = ideal->v.vertices();
            if (verts.empty())
                throw DomainError("fvector route needs at least one vertex to read c from");
            const Rational c = g->v.at_prime_power(verts.front());
            for (const auto& q : verts)
                if (g->v.at_prime_power(q) != c)
                    throw DomainError(
                        "fvector route needs g constant on the vertex set, but g(" +
                        std::to_string(q.value) + ") differs from g(" +
                        std::to_string(verts.front().value) + ")");
            result = g_sum_fvector(SimplicialComplex::from_ideal(ideal->v).f_vector(), c);
        } else {
            throw DomainError("unknown sum method '" + m +
                              "' (expected direct, incl-excl, or fvector)");
        }
        *value = dup_string(rational_to_string(result));
    });
}

uy_status uy_psi(uint64_t r, const char* c, uy_psi_result** out) {
    return guarded([&] {
        require(c && out, "null input");
        auto result = new uy_psi_result{psi(r, rational_from_string(c)), {}, {}};
        result->value_str = rational_to_string(result->v.value);
        for (const auto& k : result->v.k_values) result->k_str.push_back(rational_to_string(k));
        *out = result;
    });
}

const char* uy_psi_value(const uy_psi_result* p) { return p ? p->value_str.c_str() : ""; }
uint64_t uy_psi_argmax_level(const uy_psi_result* p) { return p ? p->v.argmax_level : 0; }
size_t uy_psi_k_count(const uy_psi_result* p) { return p ? p->k_str.size() : 0; }
const char* uy_psi_k(const uy_psi_result* p, size_t i) {
    return p && i < p->k_str.size() ? p->k_str[i].c_str() : "";
}
void uy_psi_result_free(uy_psi_result* p) { delete p; }

uy_status uy_psi_piecewise(uint64_t r, const char* c, char** value) {
    return guarded([&] {
        require(c && value, "null input");
        *value = dup_string(rational_to_string(psi_piecewise(r, rational_from_string(c))));
    });
}

uy_status uy_psi_bruteforce(uint64_t r, const char* c, char** value) {
    return guarded([&] {
        require(c && value, "null input");
        *value = dup_string(rational_to_string(psi_bruteforce(r, rational_from_string(c))));
    });
}

/* ---- facets ---------------------------------------------------------------- */

uy_status uy_is_facet(uint64_t m, uint64_t n, int* out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = is_facet_in_interval(m, n) ? 1 : 0;
    });
}

uy_status uy_facet_count(uint64_t n, unsigned threads, uint64_t* out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = count_facets(n, threads == 0 ? 1 : threads);
    });
}

uy_status uy_facet_list(uint64_t n, uint64_t** out, size_t* len) {
    return guarded([&] {
        require(out && len, "null output");
        const auto facets = enumerate_facets(n);
        *out = dup_u64(facets);
        *len = facets.size();
    });
}

uy_status uy_facet_density(uint64_t n, unsigned threads, char** value) {
    return guarded([&] {
        require(value != nullptr, "null output");
        *value = dup_string(rational_to_string(facet_density(n, threads == 0 ? 1 : threads)));
    });
}

uy_status uy_gamma(double truncation_bound, char** value15, double* value, uint64_t* terms_used) {
    return guarded([&] {
        const auto est = gamma_constant(truncation_bound);
        const double v = rational_to_double(est.series_value);
        if (value15) *value15 = dup_string(format_real(v));
        if (value) *value = v;
        if (terms_used) *terms_used = est.terms_used;
    });
}

uy_status uy_facet_matrix_csv(uint64_t n, char** csv, uint64_t* rows, uint64_t* cols) {
    return guarded([&] {
        require(csv != nullptr, "null output");
        const auto m = facet_matrix(n);
        *csv = dup_string(facet_matrix_csv(m));
        if (rows) *rows = m.facet_values.size();
        if (cols) *cols = m.prime_powers.size();
    });
}

uy_status uy_maximize(uint64_t n, const uy_multfunc* g, const char* strategy, unsigned threads,
                      uint64_t* argmax, char** value) {
    return guarded([&] {
        require(g && strategy, "null input");
        const std::string s = strategy;
        MaxStrategy strat;
        if (s == "naive")
            strat = MaxStrategy::naive;
        else if (s == "facet")
            strat = MaxStrategy::facet;
        else
            throw DomainError("unknown strategy '" + s + "' (expected naive or facet)");
        const auto result = maximize_on_interval(n, g->v, strat, threads == 0 ? 1 : threads);
        if (argmax) *argmax = result.argmax;
        if (value) *value = dup_string(rational_to_string(result.value));
    });
}

/* ---- orders ------------------------------------------------------------------ */

uy_status uy_poset_y(uint32_t r, uy_poset** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = new uy_poset{CoverPoset::boolean_poset(r)};
    });
}

uy_status uy_poset_restrict_sizes(const uy_poset* p, const uint32_t* sizes, size_t count,
                                  uy_poset** out) {
    return guarded([&] {
        require(p && sizes && count && out, "null input");
        std::vector<FaceMask> keep;
        for (FaceMask mask : p->v.elements()) {
            const auto k = static_cast<uint32_t>(__builtin_popcountll(mask));
            for (size_t i = 0; i < count; ++i)
                if (sizes[i] == k) {
                    keep.push_back(mask);
                    break;
                }
        }
        *out = new uy_poset{p->v.restricted(keep)};
    });
}

uy_status uy_poset_restrict_faces(const uy_poset* p, const uint64_t* faces, size_t count,
                                  uy_poset** out) {
    return guarded([&] {
        require(p && (faces || count == 0) && out, "null input");
        *out = new uy_poset{p->v.restricted(std::span<const uint64_t>(faces, count))};
    });
}

uy_status uy_poset_size(const uy_poset* p, uint64_t* elements, uint64_t* covers) {
    return guarded([&] {
        require(p != nullptr, "null input");
        if (elements) *elements = p->v.size();
        if (covers) *covers = p->v.covers().size();
    });
}

uy_status uy_poset_element(const uy_poset* p, size_t i, uint64_t* mask) {
    return guarded([&] {
        require(p && mask, "null input");
        require(i < p->v.size(), "poset element index out of range");
        *mask = p->v.elements()[i];
    });
}

uy_status uy_poset_cover(const uy_poset* p, size_t i, uint64_t* lo_mask, uint64_t* hi_mask) {
    return guarded([&] {
        require(p && lo_mask && hi_mask, "null input");
        require(i < p->v.covers().size(), "cover index out of range");
        const auto [lo, hi] = p->v.covers()[i];
        *lo_mask = p->v.elements()[lo];
        *hi_mask = p->v.elements()[hi];
    });
}

uy_status uy_poset_count_extensions(const uy_poset* p, char** count) {
    return guarded([&] {
        require(p && count, "null input");
        *count = dup_string(count_linear_extensions(p->v).str());
    });
}

void uy_poset_free(uy_poset* p) { delete p; }

uy_status uy_order_check_run(const uint64_t* ascending, size_t count, uy_order_check** out) {
    return guarded([&] {
        require((ascending || count == 0) && out, "null input");
        auto handle = new uy_order_check;
        handle->v = check_integer_order(std::span<const uint64_t>(ascending, count));

        const auto& vv = handle->v.vertex_values;
        if (handle->v.feasible()) {
            const auto& w = std::get<CoherenceWitness>(handle->v.result).weights;
            handle->report.push_back("FEASIBLE: realized by any multiplicative g with "
                                     "log g proportional to these weights");
            for (size_t i = 0; i < vv.size(); ++i) {
                handle->weights.push_back(rational_to_string(w[i]));
                handle->report.push_back("w(" + std::to_string(vv[i]) +
                                         ") = " + handle->weights.back());
            }
        } else {
            const auto& info = std::get<CoherenceInfeasible>(handle->v.result);
            handle->report.push_back("INFEASIBLE: no multiplicative function induces this order");
            if (info.opposing) {
                const auto& o = *info.opposing;
                const FaceMask gain1 = o.first_hi & ~o.first_lo;
                const FaceMask loss1 = o.first_lo & ~o.first_hi;
                handle->report.push_back(
                    "g(" + face_product_string(o.first_lo, vv) + ") < g(" +
                    face_product_string(o.first_hi, vv) + ") forces " +
                    weight_sum_string(loss1, vv) + " < " + weight_sum_string(gain1, vv));
                handle->report.push_back(
                    "g(" + face_product_string(o.second_lo, vv) + ") < g(" +
                    face_product_string(o.second_hi, vv) + ") forces the opposite, " +
                    weight_sum_string(gain1, vv) + " < " + weight_sum_string(loss1, vv));
            } else {
                handle->report.push_back(
                    "a nonnegative combination of the order's strict inequalities cancels:");
                const auto& seq = handle->v.order.sequence;
                for (size_t k = 0; k + 1 < seq.size(); ++k) {
                    if (info.multipliers[k] == 0) continue;
                    handle->report.push_back(
                        "  " + rational_to_string(info.multipliers[k]) + " x [g(" +
                        face_product_string(seq[k], vv) + ") < g(" +
                        face_product_string(seq[k + 1], vv) + ")]");
                }
                for (size_t i = 0; i < vv.size(); ++i) {
                    const size_t k = seq.empty() ? i : seq.size() - 1 + i;
                    if (info.multipliers[k] == 0) continue;
                    handle->report.push_back("  " + rational_to_string(info.multipliers[k]) +
                                             " x [w(" + std::to_string(vv[i]) + ") > 0]");
                }
            }
        }
        *out = handle;
    });
}

int uy_order_check_feasible(const uy_order_check* c) { return c && c->v.feasible() ? 1 : 0; }

size_t uy_order_check_vertex_count(const uy_order_check* c) {
    return c ? c->v.vertex_values.size() : 0;
}

uint64_t uy_order_check_vertex(const uy_order_check* c, size_t i) {
    return c && i < c->v.vertex_values.size() ? c->v.vertex_values[i] : 0;
}

const char* uy_order_check_weight(const uy_order_check* c, size_t i) {
    return c && i < c->weights.size() ? c->weights[i].c_str() : "";
}

size_t uy_order_check_report_lines(const uy_order_check* c) { return c ? c->report.size() : 0; }

const char* uy_order_check_report_line(const uy_order_check* c, size_t i) {
    return c && i < c->report.size() ? c->report[i].c_str() : "";
}

void uy_order_check_free(uy_order_check* c) { delete c; }

uy_status uy_orders_enumerate(uint32_t r, uint32_t k, int sorted_only, uy_orders** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = new uy_orders{realizable_orders(k_subsets(r, k), r, sorted_only != 0)};
    });
}

size_t uy_orders_count(const uy_orders* o) { return o ? o->v.size() : 0; }

size_t uy_orders_length(const uy_orders* o) {
    return o && !o->v.empty() ? o->v.front().sequence.size() : 0;
}

uy_status uy_orders_face(const uy_orders* o, size_t order_index, size_t position,
                         uint64_t* mask) {
    return guarded([&] {
        require(o && mask, "null input");
        require(order_index < o->v.size(), "order index out of range");
        require(position < o->v[order_index].sequence.size(), "position out of range");
        *mask = o->v[order_index].sequence[position];
    });
}

void uy_orders_free(uy_orders* o) { delete o; }

uy_status uy_check_nord_bound(uint32_t r, uint32_t k, uint64_t* t_unsorted, uint64_t* t_sorted,
                              char** extensions, char** bound, int* holds) {
    return guarded([&] {
        const auto nb = check_nord_bound(k_subsets(r, k), r);
        if (t_unsorted) *t_unsorted = nb.t_unsorted;
        if (t_sorted) *t_sorted = nb.t_sorted;
        if (extensions) *extensions = dup_string(nb.extensions.str());
        if (bound) *bound = dup_string(nb.bound.str());
        if (holds) *holds = nb.holds ? 1 : 0;
    });
}

uy_status uy_verify_impossible_example(int* confirmed, char** report) {
    return guarded([&] {
        const auto rep = verify_impossible_example();
        if (confirmed) *confirmed = rep.confirmed ? 1 : 0;
        if (report) {
            std::ostringstream out;
            out << "claimed descending order:";
            for (uint64_t m : rep.descending) out << ' ' << m;
            out << '\n';
            uy_order_check* c = nullptr;
            if (uy_order_check_run(rep.check.ascending.data(), rep.check.ascending.size(), &c) ==
                UY_OK) {
                for (size_t i = 0; i < uy_order_check_report_lines(c); ++i)
                    out << uy_order_check_report_line(c, i) << '\n';
                uy_order_check_free(c);
            }
            out << "sanity inverse";
            for (uint64_t m : rep.inverse.ascending) out << ' ' << m;
            out << (rep.inverse.feasible() ? ": feasible" : ": infeasible") << '\n';
            *report = dup_string(out.str());
        }
    });
}

} /* extern "C" */
