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

// Command-line front end. Everything goes through the C interface in
// unitary.h; this translation unit never touches the C++ core directly.
//
// Exit codes: 0 success, 1 domain/usage error, 2 capacity error,
// 3 infeasible order (an answer, not an error).

#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unitary.h"

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    unsigned threads = 1;
};

int fail(uy_status status) {
    std::fprintf(stderr, "error: %s\n", uy_last_error());
    return status == UY_ERR_CAPACITY ? 2 : 1;
}

#define CLI_TRY(expr)                              \
    do {                                           \
        const uy_status status_ = (expr);          \
        if (status_ != UY_OK) return fail(status_); \
    } while (0)

struct StringDeleter {
    void operator()(char* p) const { uy_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct U64Deleter {
    void operator()(uint64_t* p) const { uy_u64_array_free(p); }
};
using U64Array = std::unique_ptr<uint64_t, U64Deleter>;

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump() << '\n';
    else
        std::cout << text;
}

std::string face_set(uint64_t mask) {
    std::string out = "{";
    bool first = true;
    for (uint32_t v = 0; v < 64; ++v) {
        if (!(mask >> v & 1)) continue;
        if (!first) out += ",";
        out += std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

std::vector<uint32_t> face_indices(uint64_t mask) {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < 64; ++v)
        if (mask >> v & 1) out.push_back(v + 1);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CLI::ValidationError("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return static_cast<bool>(out);
}

std::vector<uint64_t> parse_u64_list(const std::string& text) {
    std::vector<uint64_t> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        std::istringstream ws(piece);
        std::string token;
        while (ws >> token) out.push_back(std::stoull(token));
    }
    return out;
}

// Shared --n/--file/--generators/--elements source options for commands
// that take an ideal.
struct IdealSource {
    uint64_t n = 0;
    std::string file;
    std::string generators;
    std::string elements;

    void attach(CLI::App* cmd) {
        auto* a = cmd->add_option("--n", n, "interval ideal [1..n]");
        auto* b = cmd->add_option("--file", file, "ideal JSON file");
        auto* c = cmd->add_option("--generators", generators,
                                  "comma-separated generators, closed under unitary divisors");
        auto* d = cmd->add_option("--elements", elements, "comma-separated element list");
        a->excludes(b)->excludes(c)->excludes(d);
        b->excludes(c)->excludes(d);
        c->excludes(d);
    }

    uy_status make(uy_ideal** out) const {
        if (n > 0) return uy_ideal_interval(n, out);
        if (!file.empty()) return uy_ideal_from_json(read_file(file).c_str(), out);
        if (!generators.empty()) {
            const auto gens = parse_u64_list(generators);
            return uy_ideal_close(gens.data(), gens.size(), out);
        }
        if (!elements.empty()) {
            // Element lists are validated, not closed: route through JSON.
            json j;
            j["elements"] = parse_u64_list(elements);
            return uy_ideal_from_json(j.dump().c_str(), out);
        }
        throw CLI::ValidationError("give one of --n, --file, --generators, --elements");
    }
};

struct IdealHandle {
    uy_ideal* p = nullptr;
    ~IdealHandle() { uy_ideal_free(p); }
};
struct ComplexHandle {
    uy_complex* p = nullptr;
    ~ComplexHandle() { uy_complex_free(p); }
};
struct MultfuncHandle {
    uy_multfunc* p = nullptr;
    ~MultfuncHandle() { uy_multfunc_free(p); }
};

// SPEC is a builtin name (two_omega, sigma_over_n, const:c) or @path to a
// function file of "p^a = value" lines.
uy_status make_function(const std::string& spec, uy_multfunc** out) {
    if (!spec.empty() && spec.front() == '@')
        return uy_multfunc_parse(read_file(spec.substr(1)).c_str(), out);
    return uy_multfunc_builtin(spec.c_str(), out);
}

// ---- ideal ------------------------------------------------------------

int run_ideal_close(const Options& opt, const IdealSource& src, const std::string& out_path) {
    IdealHandle ideal;
    CLI_TRY(src.make(&ideal.p));
    CString text;
    {
        char* raw = nullptr;
        CLI_TRY(uy_ideal_to_json(ideal.p, &raw));
        text.reset(raw);
    }
    if (!out_path.empty()) {
        if (!write_file(out_path, std::string(text.get()) + "\n")) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 1;
        }
    }
    uint64_t* elems = nullptr;
    size_t len = 0;
    CLI_TRY(uy_ideal_elements(ideal.p, &elems, &len));
    U64Array guard(elems);
    json j = json::parse(text.get());
    j["command"] = "ideal-close";
    std::ostringstream lines;
    for (size_t i = 0; i < len; ++i) lines << elems[i] << '\n';
    emit(opt, j, lines.str());
    return 0;
}

int run_ideal_check(const Options& opt, const std::string& elements, const std::string& file) {
    std::vector<uint64_t> candidate;
    if (!file.empty()) {
        const json j = json::parse(read_file(file), nullptr, false);
        if (j.is_discarded() || !j.contains("elements")) {
            std::fprintf(stderr, "error: %s is not an ideal JSON file\n", file.c_str());
            return 1;
        }
        candidate = j["elements"].get<std::vector<uint64_t>>();
    } else {
        candidate = parse_u64_list(elements);
    }
    int closed = 0;
    uint64_t element = 0, divisor = 0;
    CLI_TRY(uy_check_unitary_ideal(candidate.data(), candidate.size(), &closed, &element,
                                   &divisor));
    json j{{"command", "ideal-check"}, {"closed", closed == 1}};
    std::string text = closed ? "closed\n" : "";
    if (!closed) {
        j["element"] = element;
        j["missing_divisor"] = divisor;
        text = "not closed: " + std::to_string(element) + " is present but its unitary divisor " +
               std::to_string(divisor) + " is missing\n";
    }
    emit(opt, j, text);
    return 0;
}

int run_ideal_info(const Options& opt, const IdealSource& src) {
    IdealHandle ideal;
    CLI_TRY(src.make(&ideal.p));
    uint64_t size = 0;
    CLI_TRY(uy_ideal_size(ideal.p, &size));
    uint64_t* verts = nullptr;
    size_t r = 0;
    CLI_TRY(uy_ideal_vertices(ideal.p, &verts, &r));
    U64Array guard(verts);
    json j{{"command", "ideal-info"}, {"size", size}, {"vertex_count", r}};
    std::ostringstream text;
    text << "size " << size << "\nvertices " << r << '\n';
    emit(opt, j, text.str());
    return 0;
}

int run_ideal_complex(const Options& opt, const IdealSource& src, const std::string& out_path) {
    IdealHandle ideal;
    CLI_TRY(src.make(&ideal.p));
    ComplexHandle complex;
    CLI_TRY(uy_complex_of_ideal(ideal.p, &complex.p));
    CString text;
    {
        char* raw = nullptr;
        CLI_TRY(uy_complex_to_json(complex.p, &raw));
        text.reset(raw);
    }
    if (!out_path.empty()) {
        if (!write_file(out_path, std::string(text.get()) + "\n")) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 1;
        }
    }
    json j = json::parse(text.get());
    j["command"] = "ideal-complex";
    emit(opt, j, std::string(text.get()) + "\n");
    return 0;
}

int run_ideal_fvector(const Options& opt, const IdealSource& src) {
    IdealHandle ideal;
    CLI_TRY(src.make(&ideal.p));
    ComplexHandle complex;
    CLI_TRY(uy_complex_of_ideal(ideal.p, &complex.p));
    uint64_t* entries = nullptr;
    size_t len = 0;
    CLI_TRY(uy_complex_fvector(complex.p, &entries, &len));
    U64Array guard(entries);
    std::vector<uint64_t> f(entries, entries + len);
    json j{{"command", "ideal-fvector"}, {"f", f}};
    std::ostringstream text;
    text << "f";
    for (uint64_t e : f) text << ' ' << e;
    text << '\n';
    emit(opt, j, text.str());
    return 0;
}

int run_ideal_facets(const Options& opt, const IdealSource& src) {
    IdealHandle ideal;
    CLI_TRY(src.make(&ideal.p));
    ComplexHandle complex;
    CLI_TRY(uy_complex_of_ideal(ideal.p, &complex.p));
    uint64_t* values = nullptr;
    size_t len = 0;
    CLI_TRY(uy_complex_facet_values(complex.p, &values, &len));
    U64Array guard(values);
    std::vector<uint64_t> facets(values, values + len);
    json j{{"command", "ideal-facets"}, {"facets", facets}};
    std::ostringstream text;
    for (uint64_t w : facets) text << w << '\n';
    emit(opt, j, text.str());
    return 0;
}

int run_ideal_realize(const Options& opt, const std::string& complex_file,
                      const std::string& out_path) {
    ComplexHandle complex;
    CLI_TRY(uy_complex_from_json(read_file(complex_file).c_str(), &complex.p));
    IdealHandle ideal;
    CLI_TRY(uy_complex_realize(complex.p, &ideal.p));
    CString text;
    {
        char* raw = nullptr;
        CLI_TRY(uy_ideal_to_json(ideal.p, &raw));
        text.reset(raw);
    }
    if (!out_path.empty()) {
        if (!write_file(out_path, std::string(text.get()) + "\n")) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 1;
        }
    }
    json j = json::parse(text.get());
    j["command"] = "ideal-realize";
    emit(opt, j, std::string(text.get()) + "\n");
    return 0;
}

// ---- sum, psi ------------------------------------------------------------

int run_sum(const Options& opt, const IdealSource& src, const std::string& function,
            const std::string& method) {
    IdealHandle ideal;
    CLI_TRY(src.make(&ideal.p));
    MultfuncHandle g;
    CLI_TRY(make_function(function, &g.p));
    CString value;
    {
        char* raw = nullptr;
        CLI_TRY(uy_sum(ideal.p, g.p, method.c_str(), &raw));
        value.reset(raw);
    }
    json j{{"command", "sum"}, {"method", method}, {"value", value.get()}};
    emit(opt, j, std::string("sum ") + value.get() + "\n");
    return 0;
}

int run_psi(const Options& opt, uint64_t r, const std::string& c, bool piecewise,
            bool brute_force) {
    uy_psi_result* raw = nullptr;
    CLI_TRY(uy_psi(r, c.c_str(), &raw));
    std::unique_ptr<uy_psi_result, decltype(&uy_psi_result_free)> psi(raw, uy_psi_result_free);

    json j{{"command", "psi"}, {"r", r}, {"c", c}};
    j["value"] = uy_psi_value(psi.get());
    j["argmax_level"] = uy_psi_argmax_level(psi.get());
    std::vector<std::string> k;
    for (size_t i = 0; i < uy_psi_k_count(psi.get()); ++i) k.push_back(uy_psi_k(psi.get(), i));
    j["k"] = k;

    std::ostringstream text;
    text << "value " << uy_psi_value(psi.get()) << '\n'
         << "argmax_level " << uy_psi_argmax_level(psi.get()) << '\n'
         << "k";
    for (const auto& kv : k) text << ' ' << kv;
    text << '\n';

    if (piecewise) {
        char* pw = nullptr;
        CLI_TRY(uy_psi_piecewise(r, c.c_str(), &pw));
        CString guard(pw);
        j["piecewise"] = pw;
        text << "piecewise " << pw << '\n';
    }
    if (brute_force) {
        char* bf = nullptr;
        CLI_TRY(uy_psi_bruteforce(r, c.c_str(), &bf));
        CString guard(bf);
        j["bruteforce"] = bf;
        text << "bruteforce " << bf << '\n';
    }
    emit(opt, j, text.str());
    return 0;
}

// ---- facets, gamma, maximize ----------------------------------------------

int run_facets(const Options& opt, uint64_t n, bool list, bool density,
               const std::string& matrix_path) {
    if (list) {
        uint64_t* values = nullptr;
        size_t len = 0;
        CLI_TRY(uy_facet_list(n, &values, &len));
        U64Array guard(values);
        std::vector<uint64_t> facets(values, values + len);
        json j{{"command", "facets"}, {"n", n}, {"count", len}, {"facets", facets}};
        std::ostringstream text;
        for (uint64_t w : facets) text << w << '\n';
        emit(opt, j, text.str());
        return 0;
    }
    if (density) {
        CString value;
        {
            char* raw = nullptr;
            CLI_TRY(uy_facet_density(n, opt.threads, &raw));
            value.reset(raw);
        }
        uint64_t count = 0;
        CLI_TRY(uy_facet_count(n, opt.threads, &count));
        const double approx = static_cast<double>(count) / static_cast<double>(n);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.15g", approx);
        json j{{"command", "facets"},
               {"n", n},
               {"count", count},
               {"density", value.get()},
               {"approx", approx}};
        emit(opt, j,
             std::string("density ") + value.get() + "\napprox " + buf + "\n");
        return 0;
    }
    if (!matrix_path.empty()) {
        char* csv = nullptr;
        uint64_t rows = 0, cols = 0;
        CLI_TRY(uy_facet_matrix_csv(n, &csv, &rows, &cols));
        CString guard(csv);
        if (!write_file(matrix_path, csv)) {
            std::fprintf(stderr, "error: cannot write %s\n", matrix_path.c_str());
            return 1;
        }
        json j{{"command", "facets"}, {"n", n}, {"matrix", matrix_path}, {"rows", rows},
               {"cols", cols}};
        std::ostringstream text;
        text << "wrote " << matrix_path << ": " << rows << " facets x " << cols
             << " prime powers\n";
        emit(opt, j, text.str());
        return 0;
    }
    uint64_t count = 0;
    CLI_TRY(uy_facet_count(n, opt.threads, &count));
    json j{{"command", "facets"}, {"n", n}, {"count", count}};
    emit(opt, j, std::to_string(count) + "\n");
    return 0;
}

int run_gamma(const Options& opt, double tol) {
    char* raw = nullptr;
    double value = 0;
    uint64_t terms = 0;
    CLI_TRY(uy_gamma(tol, &raw, &value, &terms));
    CString text(raw);
    json j{{"command", "gamma"}, {"tol", tol}, {"gamma", text.get()}, {"terms", terms}};
    emit(opt, j, std::string("gamma ") + text.get() + "\nterms " + std::to_string(terms) + "\n");
    return 0;
}

int run_maximize(const Options& opt, uint64_t n, const std::string& function,
                 const std::string& strategy) {
    MultfuncHandle g;
    CLI_TRY(make_function(function, &g.p));
    uint64_t argmax = 0;
    CString value;
    {
        char* raw = nullptr;
        CLI_TRY(uy_maximize(n, g.p, strategy.c_str(), opt.threads, &argmax, &raw));
        value.reset(raw);
    }
    json j{{"command", "maximize"}, {"n", n}, {"strategy", strategy}, {"argmax", argmax},
           {"value", value.get()}};
    emit(opt, j, "argmax " + std::to_string(argmax) + "\nvalue " + value.get() + "\n");
    return 0;
}

// ---- orders -------------------------------------------------------------------

struct PosetHandle {
    uy_poset* p = nullptr;
    ~PosetHandle() { uy_poset_free(p); }
};

int run_orders_y(const Options& opt, uint32_t r, const std::string& restrict_spec,
                 bool count_extensions, bool export_covers) {
    PosetHandle y;
    CLI_TRY(uy_poset_y(r, &y.p));
    PosetHandle restricted;
    const uy_poset* active = y.p;
    if (!restrict_spec.empty()) {
        if (restrict_spec.front() == '@') {
            // A file of faces, one per line, as vertex indices (1-based).
            std::vector<uint64_t> masks;
            std::istringstream in(read_file(restrict_spec.substr(1)));
            std::string line;
            while (std::getline(in, line)) {
                for (char& ch : line)
                    if (ch == ',') ch = ' ';
                std::istringstream fields(line);
                uint64_t mask = 0;
                uint32_t v = 0;
                bool any = false;
                while (fields >> v) {
                    if (v < 1 || v > r) {
                        std::fprintf(stderr, "error: vertex index %u outside 1..%u\n", v, r);
                        return 1;
                    }
                    mask |= uint64_t(1) << (v - 1);
                    any = true;
                }
                if (any || !line.empty()) masks.push_back(mask);
            }
            CLI_TRY(uy_poset_restrict_faces(y.p, masks.data(), masks.size(), &restricted.p));
        } else {
            std::vector<uint32_t> sizes;
            for (uint64_t s : parse_u64_list(restrict_spec)) sizes.push_back(uint32_t(s));
            CLI_TRY(uy_poset_restrict_sizes(y.p, sizes.data(), sizes.size(), &restricted.p));
        }
        active = restricted.p;
    }
    uint64_t elements = 0, covers = 0;
    CLI_TRY(uy_poset_size(active, &elements, &covers));

    json j{{"command", "orders-y"}, {"r", r}, {"elements", elements}, {"covers", covers}};
    std::ostringstream text;
    text << "elements " << elements << "\ncovers " << covers << '\n';

    if (count_extensions) {
        char* raw = nullptr;
        CLI_TRY(uy_poset_count_extensions(active, &raw));
        CString count(raw);
        j["extensions"] = count.get();
        text << "extensions " << count.get() << '\n';
    }
    if (export_covers) {
        auto cover_list = json::array();
        for (uint64_t i = 0; i < covers; ++i) {
            uint64_t lo = 0, hi = 0;
            CLI_TRY(uy_poset_cover(active, i, &lo, &hi));
            cover_list.push_back({face_indices(lo), face_indices(hi)});
            text << face_set(lo) << " < " << face_set(hi) << '\n';
        }
        j["cover_relations"] = cover_list;
    }
    emit(opt, j, text.str());
    return 0;
}

int run_orders_check(const Options& opt, const std::string& file) {
    std::vector<uint64_t> ascending;
    {
        std::istringstream in(read_file(file));
        uint64_t v;
        while (in >> v) ascending.push_back(v);
    }
    uy_order_check* raw = nullptr;
    CLI_TRY(uy_order_check_run(ascending.data(), ascending.size(), &raw));
    std::unique_ptr<uy_order_check, decltype(&uy_order_check_free)> check(raw,
                                                                          uy_order_check_free);
    const bool feasible = uy_order_check_feasible(check.get()) == 1;

    json j{{"command", "orders-check"}, {"feasible", feasible}};
    std::ostringstream text;
    json weights = json::object();
    for (size_t i = 0; i < uy_order_check_vertex_count(check.get()); ++i) {
        if (!feasible) break;
        weights[std::to_string(uy_order_check_vertex(check.get(), i))] =
            uy_order_check_weight(check.get(), i);
    }
    if (feasible) j["weights"] = weights;
    std::vector<std::string> lines;
    for (size_t i = 0; i < uy_order_check_report_lines(check.get()); ++i)
        lines.push_back(uy_order_check_report_line(check.get(), i));
    j["report"] = lines;
    for (const auto& line : lines) text << line << '\n';
    emit(opt, j, text.str());
    return feasible ? 0 : 3;
}

int run_orders_enumerate(const Options& opt, uint32_t r, uint32_t k, bool sorted) {
    uy_orders* raw = nullptr;
    CLI_TRY(uy_orders_enumerate(r, k, sorted ? 1 : 0, &raw));
    std::unique_ptr<uy_orders, decltype(&uy_orders_free)> orders(raw, uy_orders_free);
    const size_t count = uy_orders_count(orders.get());
    const size_t length = uy_orders_length(orders.get());

    json j{{"command", "orders-enumerate"}, {"r", r}, {"subsets", k}, {"sorted", sorted},
           {"count", count}};
    auto order_list = json::array();
    std::ostringstream text;
    text << "count " << count << '\n';
    for (size_t i = 0; i < count; ++i) {
        auto one = json::array();
        for (size_t pos = 0; pos < length; ++pos) {
            uint64_t mask = 0;
            CLI_TRY(uy_orders_face(orders.get(), i, pos, &mask));
            one.push_back(face_indices(mask));
            text << (pos ? " " : "") << face_set(mask);
        }
        text << '\n';
        order_list.push_back(one);
    }
    j["orders"] = order_list;
    emit(opt, j, text.str());
    return 0;
}

// ---- repro ---------------------------------------------------------------------

int run_repro(const Options& opt) {
    struct Row {
        std::string name;
        std::string observed;
        std::string expected;
        bool pass = false;
    };
    std::vector<Row> rows;
    auto add = [&](const std::string& name, const std::string& observed,
                   const std::string& expected) {
        rows.push_back({name, observed, expected, observed == expected});
    };

    {
        uint64_t* values = nullptr;
        size_t len = 0;
        if (uy_facet_list(30, &values, &len) == UY_OK) {
            U64Array guard(values);
            std::ostringstream got;
            for (size_t i = 0; i < len; ++i) got << (i ? " " : "") << values[i];
            add("facets of [30]", got.str(),
                "12 14 16 17 18 19 20 21 22 23 24 25 26 27 28 29 30");
        }
    }
    {
        char* d = nullptr;
        if (uy_facet_density(30, opt.threads, &d) == UY_OK) {
            CString guard(d);
            add("facet density of [30]", d, "17/30");
        }
    }
    {
        char* g = nullptr;
        double value = 0;
        uint64_t terms = 0;
        if (uy_gamma(1e-12, &g, &value, &terms) == UY_OK) {
            CString guard(g);
            const bool close = std::fabs(value - 0.607714359516618) < 1e-12;
            rows.push_back({"gamma constant (tol 1e-12)", g, "0.607714359516618 within 1e-12",
                            close});
        }
    }
    {
        uy_ideal* ideal = nullptr;
        if (uy_ideal_interval(30, &ideal) == UY_OK) {
            IdealHandle iguard{ideal};
            uy_complex* complex = nullptr;
            if (uy_complex_of_ideal(ideal, &complex) == UY_OK) {
                ComplexHandle cguard{complex};
                uint64_t vertices = 0, faces = 0;
                if (uy_complex_counts(complex, &vertices, &faces) == UY_OK)
                    add("faces of [30] (57% of 30 are facets)", std::to_string(faces), "30");
            }
        }
    }
    {
        uy_poset* y = nullptr;
        if (uy_poset_y(4, &y) == UY_OK) {
            PosetHandle guard{y};
            char* count = nullptr;
            if (uy_poset_count_extensions(y, &count) == UY_OK) {
                CString c(count);
                add("linear extensions of Y(4)", c.get(), "78");
            }
            const uint32_t two = 2;
            uy_poset* restricted = nullptr;
            if (uy_poset_restrict_sizes(y, &two, 1, &restricted) == UY_OK) {
                PosetHandle rguard{restricted};
                char* count2 = nullptr;
                if (uy_poset_count_extensions(restricted, &count2) == UY_OK) {
                    CString c2(count2);
                    add("linear extensions of Y(4) on 2-subsets", c2.get(), "2");
                }
            }
        }
    }
    {
        uy_orders* all = nullptr;
        if (uy_orders_enumerate(4, 2, 0, &all) == UY_OK) {
            add("realizable orders on 2-subsets (of 720)", std::to_string(uy_orders_count(all)),
                "48");
            uy_orders_free(all);
        }
        uy_orders* sorted = nullptr;
        if (uy_orders_enumerate(4, 2, 1, &sorted) == UY_OK) {
            add("sorted realizable orders on 2-subsets", std::to_string(uy_orders_count(sorted)),
                "2");
            uy_orders_free(sorted);
        }
    }
    {
        uint64_t t = 0, ts = 0;
        char* ext = nullptr;
        char* bound = nullptr;
        int holds = 0;
        if (uy_check_nord_bound(4, 2, &t, &ts, &ext, &bound, &holds) == UY_OK) {
            CString e(ext), b(bound);
            std::ostringstream got;
            got << t << " <= " << b.get() << " holds=" << (holds ? "yes" : "no");
            add("extension bound t <= r! l(Y_T)", got.str(), "48 <= 48 holds=yes");
        }
    }
    {
        int confirmed = 0;
        char* report = nullptr;
        if (uy_verify_impossible_example(&confirmed, &report) == UY_OK) {
            CString guard(report);
            add("impossible order g(6)>g(21)>g(10)>g(15)>g(14)>g(35)",
                confirmed ? "infeasible confirmed" : "NOT CONFIRMED", "infeasible confirmed");
        }
    }
    {
        uint64_t count = 0;
        char* g = nullptr;
        double gamma_value = 0;
        if (uy_facet_count(1'000'000, opt.threads, &count) == UY_OK &&
            uy_gamma(1e-12, &g, &gamma_value, nullptr) == UY_OK) {
            CString guard(g);
            const double density = static_cast<double>(count) / 1e6;
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6f", density);
            rows.push_back({"facet density of [10^6] near gamma", buf, "within 0.01 of gamma",
                            std::fabs(density - gamma_value) < 0.01});
        }
    }

    bool all_pass = true;
    json jrows = json::array();
    std::ostringstream text;
    for (const auto& row : rows) {
        all_pass = all_pass && row.pass;
        jrows.push_back({{"name", row.name},
                         {"observed", row.observed},
                         {"expected", row.expected},
                         {"pass", row.pass}});
        text << (row.pass ? "ok   " : "FAIL ") << row.name << ": " << row.observed;
        if (!row.pass) text << " (expected " << row.expected << ")";
        text << '\n';
    }
    text << (all_pass ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    json j{{"command", "repro"}, {"checks", jrows}, {"pass", all_pass}};
    emit(opt, j, text.str());
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unitary ideals, their simplicial complexes, and multiplicative functions"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker cap for parallel scans")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();

    // ideal
    auto* ideal = app.add_subcommand("ideal", "build, check, and export unitary ideals");
    ideal->require_subcommand(1);

    IdealSource close_src;
    std::string close_out;
    auto* close = ideal->add_subcommand("close", "smallest ideal containing the generators");
    close_src.attach(close);
    close->add_option("-o,--output", close_out, "write ideal JSON here");

    std::string check_elements, check_file;
    auto* check = ideal->add_subcommand("check", "closure check with a violation witness");
    check->add_option("--elements", check_elements, "comma-separated candidate set");
    check->add_option("--file", check_file, "ideal JSON file");

    IdealSource info_src;
    auto* info = ideal->add_subcommand("info", "size and vertex count");
    info_src.attach(info);

    IdealSource complex_src;
    std::string complex_out;
    auto* complexcmd = ideal->add_subcommand("complex", "export the simplicial complex JSON");
    complex_src.attach(complexcmd);
    complexcmd->add_option("-o,--output", complex_out, "write complex JSON here");

    IdealSource fvector_src;
    auto* fvector = ideal->add_subcommand("fvector", "f-vector of the complex");
    fvector_src.attach(fvector);

    IdealSource facets_src;
    auto* ideal_facets = ideal->add_subcommand("facets", "facet values, newline-delimited");
    facets_src.attach(ideal_facets);

    std::string realize_complex, realize_out;
    auto* realize = ideal->add_subcommand("realize", "realize a complex JSON as an ideal");
    realize->add_option("--complex", realize_complex, "complex JSON file")->required();
    realize->add_option("-o,--output", realize_out, "write ideal JSON here");

    // sum
    IdealSource sum_src;
    std::string sum_function, sum_method = "direct";
    auto* sum = app.add_subcommand("sum", "sum a multiplicative function over an ideal");
    sum_src.attach(sum);
    sum->add_option("--function", sum_function, "builtin name or @file")->required();
    sum->add_option("--method", sum_method, "summation route")
        ->check(CLI::IsMember({"direct", "incl-excl", "fvector"}))
        ->capture_default_str();

    // psi
    uint64_t psi_r = 0;
    std::string psi_c;
    bool psi_piecewise_flag = false, psi_brute = false;
    auto* psi = app.add_subcommand("psi", "extremal sum over ideals with r prime powers");
    psi->add_option("r", psi_r, "number of prime powers")->required();
    psi->add_option("c", psi_c, "constant vertex value (exact rational or decimal)")->required();
    psi->add_flag("--piecewise", psi_piecewise_flag, "also evaluate the closed-form cases");
    psi->add_flag("--brute-force", psi_brute, "also run the exhaustive oracle (r <= 5)");

    // facets
    uint64_t facets_n = 0;
    bool facets_list = false, facets_count = false, facets_density = false;
    std::string facets_matrix;
    auto* facets = app.add_subcommand("facets", "facets of the interval ideal [1..n]");
    facets->add_option("n", facets_n, "interval bound")->required();
    facets->add_flag("--list", facets_list, "print every facet");
    facets->add_flag("--count", facets_count, "print the facet count (default)");
    facets->add_flag("--density", facets_density, "print count/n exactly");
    facets->add_option("--matrix", facets_matrix, "write the exponent matrix CSV here");

    // gamma
    double gamma_tol = 1e-12;
    auto* gamma = app.add_subcommand("gamma", "limiting facet-density constant");
    gamma->add_option("--tol", gamma_tol, "truncation bound for the series")
        ->capture_default_str();

    // maximize
    uint64_t maximize_n = 0;
    std::string maximize_function, maximize_strategy = "facet";
    auto* maximize = app.add_subcommand("maximize", "maximize a function over [1..n]");
    maximize->add_option("n", maximize_n, "interval bound")->required();
    maximize->add_option("--function", maximize_function, "builtin name or @file")->required();
    maximize->add_option("--strategy", maximize_strategy, "naive or facet")
        ->check(CLI::IsMember({"naive", "facet"}))
        ->capture_default_str();

    // orders
    auto* orders = app.add_subcommand("orders", "boolean term orders and realizability");
    orders->require_subcommand(1);

    uint32_t y_r = 0;
    std::string y_restrict;
    bool y_count = false, y_covers = false;
    auto* orders_y = orders->add_subcommand("y", "the cover poset on all subsets");
    orders_y->add_option("r", y_r, "vertex count")->required();
    orders_y->add_option("--restrict", y_restrict, "keep faces of these sizes, e.g. 2 or 1,2");
    orders_y->add_flag("--count-extensions", y_count, "count linear extensions");
    orders_y->add_flag("--export-covers", y_covers, "print the cover relations");

    std::string orders_check_file;
    auto* orders_check = orders->add_subcommand(
        "check", "is a claimed ascending g-order of integers realizable?");
    orders_check->add_option("file", orders_check_file, "integers in claimed ascending order")
        ->required();

    uint32_t enum_r = 0, enum_k = 0;
    bool enum_sorted = false;
    auto* orders_enum = orders->add_subcommand("enumerate", "realizable orders on k-subsets");
    orders_enum->add_option("--r", enum_r, "vertex count")->required();
    orders_enum->add_option("--subsets", enum_k, "face size k")->required();
    orders_enum->add_flag("--sorted", enum_sorted, "restrict to sorted vertex values");

    // repro
    auto* repro = app.add_subcommand("repro", "reproduce the headline numbers and check them");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (close->parsed()) return run_ideal_close(opt, close_src, close_out);
        if (check->parsed()) {
            if (check_elements.empty() == check_file.empty()) {
                std::fprintf(stderr, "error: give exactly one of --elements, --file\n");
                return 1;
            }
            return run_ideal_check(opt, check_elements, check_file);
        }
        if (info->parsed()) return run_ideal_info(opt, info_src);
        if (complexcmd->parsed()) return run_ideal_complex(opt, complex_src, complex_out);
        if (fvector->parsed()) return run_ideal_fvector(opt, fvector_src);
        if (ideal_facets->parsed()) return run_ideal_facets(opt, facets_src);
        if (realize->parsed()) return run_ideal_realize(opt, realize_complex, realize_out);
        if (sum->parsed()) return run_sum(opt, sum_src, sum_function, sum_method);
        if (psi->parsed()) return run_psi(opt, psi_r, psi_c, psi_piecewise_flag, psi_brute);
        if (facets->parsed()) {
            const int modes = int(facets_list) + int(facets_count) + int(facets_density) +
                              int(!facets_matrix.empty());
            if (modes > 1) {
                std::fprintf(stderr, "error: --list, --count, --density, --matrix are exclusive\n");
                return 1;
            }
            return run_facets(opt, facets_n, facets_list, facets_density, facets_matrix);
        }
        if (gamma->parsed()) return run_gamma(opt, gamma_tol);
        if (maximize->parsed())
            return run_maximize(opt, maximize_n, maximize_function, maximize_strategy);
        if (orders_y->parsed()) return run_orders_y(opt, y_r, y_restrict, y_count, y_covers);
        if (orders_check->parsed()) return run_orders_check(opt, orders_check_file);
        if (orders_enum->parsed()) return run_orders_enumerate(opt, enum_r, enum_k, enum_sorted);
        if (repro->parsed()) return run_repro(opt);
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    std::fprintf(stderr, "error: no subcommand\n");
    return 1;
}
