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

// Exact rational feasibility of systems of strict homogeneous inequalities
// over positive variables. Strictness is handled by the margin reduction:
// the homogeneous system {row . w > 0 for all rows, w > 0} is feasible iff
// {row . w >= 1, w_i >= 1} is (scale any strict solution up). Floating
// point never certifies the infeasible side; this solver pivots in exact
// rationals and returns a checkable certificate either way.

#pragma once

#include <vector>

#include "unitary/rational.hpp"

namespace unitary {

struct PositiveMarginResult {
    bool feasible = false;

    /// When feasible: w with row . w >= 1 for every input row and w_i >= 1.
    std::vector<Rational> witness;

    /// When infeasible: multipliers lambda >= 0, indexed by input row
    /// followed by the n implicit positivity rows e_i, with
    /// sum lambda_k row_k = 0 and sum lambda_k > 0. Any w satisfying the
    /// system would give 0 >= sum lambda_k, a contradiction.
    std::vector<Rational> certificate;
};

/// Decides {row . w >= 1 for each row, w_i >= 1 for each of the num_vars
/// variables} exactly. Rows must have length num_vars.
PositiveMarginResult solve_positive_margin(const std::vector<std::vector<Rational>>& rows,
                                           size_t num_vars);

}  // namespace unitary
