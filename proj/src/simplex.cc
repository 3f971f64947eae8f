// Copyright 2026 The Phasecap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phasecap/simplex.h"

#include <limits>

#include "phasecap/errors.h"

namespace phasecap {

SimplexResult simplex_minimize(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                               const std::vector<Eigen::Index> &basis_in, const SimplexOptions &options) {
    const Eigen::Index m = a.rows();
    const Eigen::Index ncols = a.cols();
    if (b.size() != m || c.size() != ncols || static_cast<Eigen::Index>(basis_in.size()) != m) {
        throw ParameterError("simplex: inconsistent problem dimensions");
    }
    for (Eigen::Index r = 0; r < m; r++) {
        Eigen::Index col = basis_in[r];
        if (col < 0 || col >= ncols || b(r) < 0) {
            throw ParameterError("simplex: starting basis is not a feasible identity basis");
        }
        for (Eigen::Index i = 0; i < m; i++) {
            if (a(i, col) != (i == r ? 1.0 : 0.0)) {
                throw ParameterError("simplex: starting basis columns do not form the identity");
            }
        }
    }

    Eigen::MatrixXd tab = a;
    Eigen::VectorXd rhs = b;
    std::vector<Eigen::Index> basis = basis_in;

    // reduced[j] = c_j - c_B^T tab_j
    Eigen::VectorXd cb(m);
    for (Eigen::Index r = 0; r < m; r++) {
        cb(r) = c(basis[r]);
    }
    Eigen::VectorXd reduced = c - tab.transpose() * cb;
    double objective = cb.dot(rhs);

    SimplexResult result;
    uint32_t stall = 0;
    bool bland = false;

    while (true) {
        Eigen::Index enter = -1;
        if (bland) {
            for (Eigen::Index j = 0; j < ncols; j++) {
                if (reduced(j) < -options.reduced_cost_tolerance) {
                    enter = j;
                    break;
                }
            }
        } else {
            double most = -options.reduced_cost_tolerance;
            for (Eigen::Index j = 0; j < ncols; j++) {
                if (reduced(j) < most) {
                    most = reduced(j);
                    enter = j;
                }
            }
        }
        if (enter < 0) {
            result.status = SimplexResult::Status::Optimal;
            break;
        }
        if (result.pivots >= options.max_pivots) {
            result.status = SimplexResult::Status::PivotLimit;
            break;
        }

        Eigen::Index leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (Eigen::Index r = 0; r < m; r++) {
            double coef = tab(r, enter);
            if (coef > options.pivot_tolerance) {
                double ratio = rhs(r) / coef;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio <= best_ratio + 1e-12 && leave >= 0 && basis[r] < basis[leave])) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        if (leave < 0) {
            result.status = SimplexResult::Status::Unbounded;
            break;
        }

        double pivot = tab(leave, enter);
        tab.row(leave) /= pivot;
        rhs(leave) /= pivot;
        for (Eigen::Index r = 0; r < m; r++) {
            if (r != leave) {
                double f = tab(r, enter);
                if (f != 0.0) {
                    tab.row(r) -= f * tab.row(leave);
                    rhs(r) -= f * rhs(leave);
                    if (rhs(r) < 0 && rhs(r) > -1e-12) {
                        rhs(r) = 0;
                    }
                }
            }
        }
        double rc = reduced(enter);
        reduced -= rc * tab.row(leave).transpose();
        reduced(enter) = 0.0;
        basis[leave] = enter;

        double next_objective = objective + rc * rhs(leave);
        if (next_objective < objective - 1e-12) {
            stall = 0;
            bland = false;
        } else if (++stall >= options.stall_limit) {
            bland = true;
        }
        objective = next_objective;
        result.pivots++;
        if (bland) {
            result.bland_pivots++;
        }
    }

    result.x = Eigen::VectorXd::Zero(ncols);
    for (Eigen::Index r = 0; r < m; r++) {
        result.x(basis[r]) = rhs(r);
    }
    Eigen::VectorXd cb_final(m);
    for (Eigen::Index r = 0; r < m; r++) {
        cb_final(r) = c(basis[r]);
    }
    // Columns that started as the identity now hold B^{-1}.
    Eigen::MatrixXd binv(m, m);
    for (Eigen::Index r = 0; r < m; r++) {
        binv.col(r) = tab.col(basis_in[r]);
    }
    result.duals = binv.transpose() * cb_final;
    result.objective = c.dot(result.x);
    return result;
}

}  // namespace phasecap
