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

#ifndef PHASECAP_SIMPLEX_H
#define PHASECAP_SIMPLEX_H

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace phasecap {

struct SimplexOptions {
    double reduced_cost_tolerance = 1e-10;
    double pivot_tolerance = 1e-11;
    uint64_t max_pivots = 1'000'000;
    /// Consecutive non-improving pivots before switching to Bland's rule.
    uint32_t stall_limit = 50;
};

struct SimplexResult {
    enum class Status { Optimal, Unbounded, PivotLimit };
    Status status = Status::Optimal;
    double objective = 0.0;
    Eigen::VectorXd x;
    /// Simplex multipliers pi = c_B^T B^{-1}, one per row.
    Eigen::VectorXd duals;
    uint64_t pivots = 0;
    uint64_t bland_pivots = 0;
};

/// Dense tableau simplex for
///
///     minimize c^T x  subject to  A x = b,  x >= 0,
///
/// started from `basis`, a list of one column per row that together form
/// the identity matrix (so b >= 0 is feasible). Entering columns follow
/// Dantzig's rule and fall back to Bland's rule after `stall_limit`
/// degenerate pivots.
SimplexResult simplex_minimize(const Eigen::MatrixXd &a, const Eigen::VectorXd &b, const Eigen::VectorXd &c,
                               const std::vector<Eigen::Index> &basis, const SimplexOptions &options = {});

}  // namespace phasecap

#endif
