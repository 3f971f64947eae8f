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

#ifndef PHASECAP_BOUNDS_H
#define PHASECAP_BOUNDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phasecap/cayley.h"
#include "phasecap/noise.h"

namespace phasecap {

/// floor(q^n / |E_t|). Requires 0 <= t <= n and q^n < 2^64.
uint64_t hamming_bound(uint32_t n, uint32_t t, uint32_t q);
/// q^(n - 2t), or 0 when 2t > n (no support of size 2 survives).
uint64_t singleton_bound(uint32_t n, uint32_t t, uint32_t q);

/// H_q(delta) for 0 <= delta <= 1 - 1/q; std::domain_error otherwise.
double q_ary_entropy(uint32_t q, double delta);
/// 1 - H_q(delta): achievable rate.
double gv_rate(uint32_t q, double delta);
/// 1 - H_q(delta / 2): sphere-packing rate ceiling.
double hamming_rate(uint32_t q, double delta);

struct UniformBoundsReport {
    uint32_t n = 0;
    uint32_t t = 0;
    uint32_t q = 2;
    uint64_t hamming_bound = 0;
    uint64_t singleton_bound = 0;
    /// Rates at relative distance (2t + 1) / n; empty when outside the entropy domain.
    std::optional<double> gv_lower_rate;
    std::optional<double> hamming_upper_rate;
    std::optional<uint64_t> exact_alpha;
};

UniformBoundsReport uniform_bounds_report(uint32_t n, uint32_t t, uint32_t q,
                                          std::optional<uint64_t> exact_alpha = std::nullopt);

struct DualIsolationReport {
    uint32_t n = 0;
    uint32_t q = 2;
    uint64_t size_x = 0;
    uint64_t size_z = 0;
    double separated_x = 0;
    double separated_z = 0;
    double coupled = 0;
    /// log_q |Omega| / n. A finite-n surrogate for the asymptotic exponent.
    double gamma_x = 0;
    double gamma_z = 0;
    double rate_cap = 0;
    /// 1 - H_q(t_X / n) - H_q(t_Z / n), only when both models carry a radius in range.
    std::optional<double> entropy_tradeoff_raw;
    std::optional<double> entropy_tradeoff_clamped;
};

DualIsolationReport dual_isolation_report(uint32_t n, uint32_t q, uint64_t size_x, uint64_t size_z,
                                          std::optional<uint32_t> t_x = std::nullopt,
                                          std::optional<uint32_t> t_z = std::nullopt);
DualIsolationReport dual_isolation_report(const NoiseModel &omega_x, const NoiseModel &omega_z);

/// sum_{j <= t} C(n, j) p^j (1 - p)^(n - j).
double correction_threshold(uint32_t n, uint32_t t, double p);

/// Order-of-magnitude cat-qubit rates; all inputs must be positive.
struct CatQubitBias {
    double gamma_x = 0;
    double gamma_z = 0;
    double eta = 0;
};
CatQubitBias cat_qubit_bias(double kappa1, double kappa2, double nbar);

struct RegimeClassification {
    bool dispersive = false;
    /// Dimension of the largest additive subspace inside D (0 when none).
    uint32_t collapse_dimension = 0;
    std::optional<SubspaceWitness> witness;
    /// q^(n - r) when collapsing, verified through the coset-clique check.
    std::optional<uint64_t> collapse_bound;
    /// False if the subspace search ran out of budget; r is then only a lower bound.
    bool collapse_exact = true;
    bool dual_tradeoff = false;
    std::vector<std::string> notes;
};

RegimeClassification classify_regime(const NoiseModel &model,
                                     const std::optional<std::pair<NoiseModel, NoiseModel>> &dual = std::nullopt);

}  // namespace phasecap

#endif
