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

#include "unitary/lp.hpp"

#include <stdexcept>
#include <string>

#include "unitary/errors.hpp"

namespace unitary {

// The primal {A w >= 1} (A = user rows stacked over the identity rows) is
// probed through its dual: maximize sum(y) subject to A^T y = 0, y >= 0.
// The dual is feasible at y = 0 and totally degenerate, so every pivot is
// a zero-step one and Bland's rule guarantees termination. Two exits:
//   - some column enters with no positive tableau entry: the improving ray
//     y is a certificate (y >= 0, A^T y = 0, sum y > 0), so the primal is
//     empty by Farkas;
//   - no column has positive reduced cost: the simplex multipliers satisfy
//     A w >= 1 and are the witness.
// The identity columns contributed by the positivity rows double as the
// initial basis.
PositiveMarginResult solve_positive_margin(const std::vector<std::vector<Rational>>& rows,
                                           size_t num_vars) {
    const size_t n = num_vars;
    if (n == 0) throw DomainError("solve_positive_margin needs at least one variable");
    for (const auto& row : rows)
        if (row.size() != n)
            throw DomainError("constraint row length does not match the variable count");

    const size_t m = rows.size() + n;  // user rows, then positivity rows
    auto column_entry = [&](size_t i, size_t j) -> Rational {
        // B = A^T: entry (i, j) is coefficient of variable i in row j.
        if (j < rows.size()) return rows[j][i];
        return j - rows.size() == i ? Rational(1) : Rational(0);
    };

    // Full tableau T = Basis^{-1} B with reduced-cost row r; basis starts
    // as the identity columns, so T = B and r_j = 1 - column sum.
    std::vector<std::vector<Rational>> t(n, std::vector<Rational>(m));
    std::vector<Rational> reduced(m);
    for (size_t j = 0; j < m; ++j) {
        Rational sum = 0;
        for (size_t i = 0; i < n; ++i) {
            t[i][j] = column_entry(i, j);
            sum += t[i][j];
        }
        reduced[j] = 1 - sum;
    }
    std::vector<size_t> basis(n);
    for (size_t i = 0; i < n; ++i) basis[i] = rows.size() + i;
    std::vector<bool> in_basis(m, false);
    for (size_t j : basis) in_basis[j] = true;

    while (true) {
        // Bland: entering column = smallest index with positive reduced cost.
        size_t enter = m;
        for (size_t j = 0; j < m; ++j)
            if (!in_basis[j] && reduced[j] > 0) {
                enter = j;
                break;
            }

        if (enter == m) {
            // Optimal. Multipliers w_i = 1 - reduced cost of the i-th
            // positivity column satisfy every constraint with margin.
            PositiveMarginResult result;
            result.feasible = true;
            result.witness.resize(n);
            for (size_t i = 0; i < n; ++i) result.witness[i] = 1 - reduced[rows.size() + i];
            for (const auto& row : rows) {
                Rational dot = 0;
                for (size_t i = 0; i < n; ++i) dot += row[i] * result.witness[i];
                if (dot < 1) throw std::logic_error("margin witness failed validation");
            }
            for (size_t i = 0; i < n; ++i)
                if (result.witness[i] < 1) throw std::logic_error("margin witness not positive");
            return result;
        }

        // Ratio test over positive entries; all basic values are zero, so
        // ties are total and Bland picks the smallest basic variable.
        size_t leave = n;
        for (size_t i = 0; i < n; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == n || basis[i] < basis[leave]) leave = i;
        }

        if (leave == n) {
            // Unbounded ray: an exact Farkas certificate of infeasibility.
            PositiveMarginResult result;
            result.feasible = false;
            result.certificate.assign(m, Rational(0));
            result.certificate[enter] = 1;
            for (size_t i = 0; i < n; ++i)
                if (t[i][enter] < 0) result.certificate[basis[i]] = -t[i][enter];
            // Validate: sum lambda_k row_k = 0 over all m rows.
            for (size_t i = 0; i < n; ++i) {
                Rational sum = 0;
                for (size_t j = 0; j < m; ++j)
                    if (result.certificate[j] != 0) sum += result.certificate[j] * column_entry(i, j);
                if (sum != 0) throw std::logic_error("infeasibility certificate failed validation");
            }
            return result;
        }

        // Pivot on (leave, enter).
        const Rational pivot = t[leave][enter];
        for (size_t j = 0; j < m; ++j) t[leave][j] /= pivot;
        for (size_t i = 0; i < n; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational factor = t[i][enter];
            for (size_t j = 0; j < m; ++j) t[i][j] -= factor * t[leave][j];
        }
        const Rational rfactor = reduced[enter];
        for (size_t j = 0; j < m; ++j) reduced[j] -= rfactor * t[leave][j];
        in_basis[basis[leave]] = false;
        in_basis[enter] = true;
        basis[leave] = enter;
    }
}

}  // namespace unitary
