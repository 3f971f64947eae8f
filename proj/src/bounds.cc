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

#include "phasecap/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phasecap/errors.h"

namespace phasecap {

namespace {

unsigned __int128 checked_power(uint32_t q, uint32_t n) {
    unsigned __int128 v = 1;
    for (uint32_t i = 0; i < n; i++) {
        v *= q;
        if (v > static_cast<unsigned __int128>(UINT64_MAX)) {
            throw ParameterError("q^n exceeds 64 bits (q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")");
        }
    }
    return v;
}

void require_q(uint32_t q) {
    if (q < 2 || !is_prime(q)) {
        throw ParameterError("q must be prime, got " + std::to_string(q));
    }
}

}  // namespace

uint64_t hamming_bound(uint32_t n, uint32_t t, uint32_t q) {
    require_q(q);
    if (t > n) {
        throw ParameterError("hamming_bound needs t <= n");
    }
    unsigned __int128 total = checked_power(q, n);
    unsigned __int128 ball = 0;
    unsigned __int128 binom = 1;
    unsigned __int128 qpow = 1;
    for (uint32_t i = 0; i <= t; i++) {
        ball += binom * qpow;
        binom = binom * (n - i) / (i + 1);
        qpow *= q - 1;
    }
    return static_cast<uint64_t>(total / ball);
}

uint64_t singleton_bound(uint32_t n, uint32_t t, uint32_t q) {
    require_q(q);
    if (2 * t > n) {
        return 0;
    }
    return static_cast<uint64_t>(checked_power(q, n - 2 * t));
}

double q_ary_entropy(uint32_t q, double delta) {
    require_q(q);
    double top = 1.0 - 1.0 / q;
    if (!(delta >= 0.0) || delta > top + 1e-15) {
        throw std::domain_error("entropy argument " + std::to_string(delta) + " outside [0, " +
                                std::to_string(top) + "]");
    }
    if (delta == 0.0) {
        return 0.0;
    }
    double lq = std::log(static_cast<double>(q));
    double h = delta * std::log(static_cast<double>(q - 1)) - delta * std::log(delta);
    if (delta < 1.0) {
        h -= (1.0 - delta) * std::log1p(-delta);
    }
    return h / lq;
}

double gv_rate(uint32_t q, double delta) {
    return 1.0 - q_ary_entropy(q, delta);
}

double hamming_rate(uint32_t q, double delta) {
    return 1.0 - q_ary_entropy(q, delta / 2.0);
}

UniformBoundsReport uniform_bounds_report(uint32_t n, uint32_t t, uint32_t q, std::optional<uint64_t> exact_alpha) {
    UniformBoundsReport r;
    r.n = n;
    r.t = t;
    r.q = q;
    r.hamming_bound = hamming_bound(n, t, q);
    r.singleton_bound = singleton_bound(n, t, q);
    double delta = static_cast<double>(2 * t + 1) / n;
    if (delta <= 1.0 - 1.0 / q) {
        r.gv_lower_rate = gv_rate(q, delta);
    }
    if (delta / 2.0 <= 1.0 - 1.0 / q) {
        r.hamming_upper_rate = hamming_rate(q, delta);
    }
    r.exact_alpha = exact_alpha;
    if (exact_alpha && (*exact_alpha > r.hamming_bound || *exact_alpha > r.singleton_bound)) {
        throw InvariantError("exact capacity " + std::to_string(*exact_alpha) + " exceeds a packing bound");
    }
    return r;
}

DualIsolationReport dual_isolation_report(uint32_t n, uint32_t q, uint64_t size_x, uint64_t size_z,
                                          std::optional<uint32_t> t_x, std::optional<uint32_t> t_z) {
    require_q(q);
    if (n == 0 || size_x == 0 || size_z == 0) {
        throw ParameterError("dual isolation needs n >= 1 and nonempty noise sets");
    }
    DualIsolationReport r;
    r.n = n;
    r.q = q;
    r.size_x = size_x;
    r.size_z = size_z;
    double total = std::pow(static_cast<double>(q), n);
    r.separated_x = total / static_cast<double>(size_x);
    r.separated_z = total / static_cast<double>(size_z);
    r.coupled = total / std::sqrt(static_cast<double>(size_x) * static_cast<double>(size_z));
    double lq = std::log(static_cast<double>(q));
    r.gamma_x = std::log(static_cast<double>(size_x)) / lq / n;
    r.gamma_z = std::log(static_cast<double>(size_z)) / lq / n;
    r.rate_cap = 1.0 - (r.gamma_x + r.gamma_z) / 2.0;
    if (t_x && t_z) {
        double dx = static_cast<double>(*t_x) / n;
        double dz = static_cast<double>(*t_z) / n;
        double top = 1.0 - 1.0 / q;
        if (dx <= top && dz <= top) {
            r.entropy_tradeoff_raw = 1.0 - q_ary_entropy(q, dx) - q_ary_entropy(q, dz);
            r.entropy_tradeoff_clamped = std::max(0.0, *r.entropy_tradeoff_raw);
        }
    }
    return r;
}

DualIsolationReport dual_isolation_report(const NoiseModel &omega_x, const NoiseModel &omega_z) {
    require_same_group(omega_x.params, omega_z.params, "dual isolation");
    return dual_isolation_report(omega_x.params.n, omega_x.params.q, omega_x.omega.size(), omega_z.omega.size(),
                                 omega_x.t, omega_z.t);
}

double correction_threshold(uint32_t n, uint32_t t, double p) {
    if (!(p >= 0.0 && p <= 1.0) || t > n) {
        throw ParameterError("correction_threshold needs 0 <= p <= 1 and t <= n");
    }
    double sum = 0.0;
    double binom = 1.0;
    for (uint32_t j = 0; j <= t; j++) {
        sum += binom * std::pow(p, j) * std::pow(1.0 - p, n - j);
        binom = binom * (n - j) / (j + 1);
    }
    return std::min(sum, 1.0);
}

CatQubitBias cat_qubit_bias(double kappa1, double kappa2, double nbar) {
    if (!(kappa1 > 0 && kappa2 > 0 && nbar > 0)) {
        throw ParameterError("cat_qubit_bias needs positive kappa1, kappa2, nbar");
    }
    CatQubitBias b;
    b.gamma_x = kappa2 * nbar * std::exp(-2.0 * nbar);
    b.gamma_z = kappa1 * nbar;
    b.eta = kappa1 / kappa2 * std::exp(2.0 * nbar);
    return b;
}

RegimeClassification classify_regime(const NoiseModel &model,
                                     const std::optional<std::pair<NoiseModel, NoiseModel>> &dual) {
    RegimeClassification c;
    DifferenceSet d = derive_difference_set(model);
    auto witness = find_max_additive_subspace(d, model.params.n);
    if (witness) {
        c.collapse_dimension = witness->dimension();
        c.collapse_exact = witness->proven_maximal;
        CayleyGraph g(d);
        c.collapse_bound = coset_collapse_bound(g, *witness);
        c.witness = std::move(witness);
        if (model.params.q == 2) {
            c.notes.push_back(
                "over F_2 every nonzero v in D spans the subspace {0, v}, so the literal no-subspace test "
                "never reports the dispersive regime for a nonempty D");
        }
        if (!c.collapse_exact) {
            c.notes.push_back("subspace search budget exhausted; r is a lower bound");
        }
    } else {
        c.dispersive = true;
    }
    if (dual) {
        c.dual_tradeoff = dual->first.omega.size() > 1 && dual->second.omega.size() > 1;
    }
    return c;
}

}  // namespace phasecap
