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

#include "phasecap/theta.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "phasecap/errors.h"
#include "phasecap/simplex.h"

namespace phasecap {

std::vector<double> character_transform(const GroupParams &params, std::span<const double> f) {
    if (params.order() > (uint64_t{1} << 20)) {
        throw ResourceError("character transform limited to 2^20 points");
    }
    const uint64_t nv = params.order();
    if (f.size() != nv) {
        throw ParameterError("character transform: function size does not match the group order");
    }
    if (params.q == 2) {
        std::vector<double> r(f.begin(), f.end());
        for (uint64_t h = 1; h < nv; h <<= 1) {
            for (uint64_t i = 0; i < nv; i += h << 1) {
                for (uint64_t j = i; j < i + h; j++) {
                    double x = r[j];
                    double y = r[j + h];
                    r[j] = x + y;
                    r[j + h] = x - y;
                }
            }
        }
        return r;
    }

    const uint32_t q = params.q;
    std::vector<std::complex<double>> roots(q);
    for (uint32_t k = 0; k < q; k++) {
        double angle = 2.0 * std::numbers::pi * k / q;
        roots[k] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<std::complex<double>> cur(f.begin(), f.end());
    std::vector<std::complex<double>> line(q);
    uint64_t stride = 1;
    for (uint32_t axis = 0; axis < params.n; axis++) {
        for (uint64_t base = 0; base < nv; base++) {
            if ((base / stride) % q != 0) {
                continue;
            }
            for (uint32_t s = 0; s < q; s++) {
                std::complex<double> acc = 0.0;
                for (uint32_t x = 0; x < q; x++) {
                    acc += cur[base + x * stride] * roots[(s * x) % q];
                }
                line[s] = acc;
            }
            for (uint32_t s = 0; s < q; s++) {
                cur[base + s * stride] = line[s];
            }
        }
        stride *= q;
    }
    std::vector<double> r(nv);
    for (uint64_t i = 0; i < nv; i++) {
        r[i] = cur[i].real();
    }
    return r;
}

std::vector<std::vector<uint8_t>> coordinate_symmetry_generators(const DifferenceSet &d) {
    const GroupParams &p = d.params();
    const uint32_t n = p.n;
    auto preserves = [&](const std::vector<uint8_t> &perm) {
        for (uint64_t v : d.elements()) {
            if (!d.contains(packed::permute(p, v, perm))) {
                return false;
            }
        }
        return true;
    };
    std::vector<uint8_t> identity(n);
    std::iota(identity.begin(), identity.end(), uint8_t{0});

    std::vector<std::vector<uint8_t>> gens;
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            auto t = identity;
            std::swap(t[i], t[j]);
            if (preserves(t)) {
                gens.push_back(std::move(t));
            }
        }
    }
    if (n > 2) {
        std::vector<uint8_t> shift(n);
        std::vector<uint8_t> reversal(n);
        for (uint32_t i = 0; i < n; i++) {
            shift[i] = static_cast<uint8_t>((i + 1) % n);
            reversal[i] = static_cast<uint8_t>(n - 1 - i);
        }
        for (auto *g : {&shift, &reversal}) {
            if (preserves(*g)) {
                gens.push_back(*g);
            }
        }
    }
    return gens;
}

std::vector<uint32_t> vertex_orbits(const GroupParams &params, const std::vector<std::vector<uint8_t>> &perms) {
    params.require_enumerable("vertex_orbits");
    const uint64_t nv = params.order();
    std::vector<uint32_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](uint64_t a, uint64_t b) {
        uint32_t ra = find(static_cast<uint32_t>(a));
        uint32_t rb = find(static_cast<uint32_t>(b));
        if (ra != rb) {
            parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    };
    for (uint64_t x = 0; x < nv; x++) {
        unite(x, packed::negate(params, x));
        for (const auto &perm : perms) {
            unite(x, packed::permute(params, x, perm));
        }
    }
    std::vector<uint32_t> id(nv);
    std::vector<int64_t> remap(nv, -1);
    uint32_t next = 0;
    for (uint64_t x = 0; x < nv; x++) {
        uint32_t r = find(static_cast<uint32_t>(x));
        if (remap[r] < 0) {
            remap[r] = next++;
        }
        id[x] = static_cast<uint32_t>(remap[r]);
    }
    return id;
}

namespace {

double character(const GroupParams &p, uint64_t s, uint64_t x) {
    if (p.q == 2) {
        return (std::popcount(s & x) & 1) ? -1.0 : 1.0;
    }
    uint64_t dot = 0;
    for (uint32_t i = 0; i < p.n; i++) {
        dot += static_cast<uint64_t>(packed::coord(p, s, i)) * packed::coord(p, x, i);
    }
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(dot % p.q) / p.q);
}

}  // namespace

ThetaResult theta_abelian(const CayleyGraph &g, const ThetaOptions &options) {
    const GroupParams &p = g.params();
    if (p.order() > (uint64_t{1} << 14)) {
        throw ResourceError("theta LP limited to q^n <= 2^14, got " + p.describe());
    }
    const uint64_t nv = p.order();
    const DifferenceSet &d = g.connection();

    std::vector<std::vector<uint8_t>> gens;
    if (options.use_symmetry) {
        gens = coordinate_symmetry_generators(d);
    }
    std::vector<uint32_t> orbit = vertex_orbits(p, gens);
    const uint32_t orbit_count = *std::max_element(orbit.begin(), orbit.end()) + 1;
    std::vector<std::vector<uint64_t>> members(orbit_count);
    for (uint64_t x = 0; x < nv; x++) {
        members[orbit[x]].push_back(x);
    }

    // Free LP variables: orbits off the origin and off D.
    std::vector<uint32_t> var_orbits;
    std::vector<int64_t> var_of_orbit(orbit_count, -1);
    for (uint32_t o = 0; o < orbit_count; o++) {
        uint64_t rep = members[o].front();
        if (rep != 0 && !d.contains(rep)) {
            var_of_orbit[o] = static_cast<int64_t>(var_orbits.size());
            var_orbits.push_back(o);
        }
    }
    const size_t rows = var_orbits.size();

    ThetaResult result;
    result.tolerance = options.tolerance;
    result.lp_rows = rows;

    auto finish = [&](const std::vector<double> &pi) {
        result.f.assign(nv, 0.0);
        result.f[0] = 1.0;
        for (size_t j = 0; j < rows; j++) {
            for (uint64_t x : members[var_orbits[j]]) {
                result.f[x] = pi[j];
            }
        }
        auto fhat = character_transform(p, result.f);
        result.min_fourier_coefficient = *std::min_element(fhat.begin(), fhat.end());
        result.value = std::accumulate(result.f.begin(), result.f.end(), 0.0);
        result.max_edge_residual = 0.0;
        for (uint64_t e : d.elements()) {
            result.max_edge_residual = std::max(result.max_edge_residual, std::abs(result.f[e]));
        }
        result.origin_residual = std::abs(result.f[0] - 1.0);
        return fhat;
    };

    if (rows == 0) {
        finish({});
        result.dual_value = result.value;
        return result;
    }

    // Character orbits are the same partition: the group acts on s and x alike.
    std::vector<uint8_t> active(orbit_count, 0);
    std::vector<uint32_t> columns;
    for (uint32_t o = 0; o < orbit_count && columns.size() < options.initial_characters; o++) {
        columns.push_back(o);
        active[o] = 1;
    }

    const double big_m = 2.0;  // feasible f satisfies |f| <= f(0) = 1
    std::vector<double> pi(rows, 0.0);
    double dual_objective = 0.0;

    for (uint32_t round = 1;; round++) {
        const size_t k = columns.size();
        if (static_cast<double>(rows) * static_cast<double>(k + rows) > static_cast<double>(uint64_t{1} << 26)) {
            throw ResourceError("theta LP tableau too large (" + std::to_string(rows) + " rows)");
        }
        // Dual LP: min sum_k y_k + M sum_j a_j  s.t.  sum_k (-M_kj) y_k + a_j = |O_j|.
        Eigen::MatrixXd a(rows, k + rows);
        Eigen::VectorXd b(rows);
        Eigen::VectorXd c(k + rows);
        for (size_t col = 0; col < k; col++) {
            uint64_t s = members[columns[col]].front();
            for (size_t j = 0; j < rows; j++) {
                double sum = 0.0;
                for (uint64_t x : members[var_orbits[j]]) {
                    sum += character(p, s, x);
                }
                a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(col)) = -sum;
            }
            c(static_cast<Eigen::Index>(col)) = 1.0;
        }
        std::vector<Eigen::Index> basis(rows);
        for (size_t j = 0; j < rows; j++) {
            for (size_t i = 0; i < rows; i++) {
                a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k + j)) = i == j ? 1.0 : 0.0;
            }
            b(static_cast<Eigen::Index>(j)) = static_cast<double>(members[var_orbits[j]].size());
            c(static_cast<Eigen::Index>(k + j)) = big_m;
            basis[j] = static_cast<Eigen::Index>(k + j);
        }
        SimplexResult lp = simplex_minimize(a, b, c, basis);
        if (lp.status != SimplexResult::Status::Optimal) {
            throw SolverError("theta LP did not reach an optimum (status " +
                              std::to_string(static_cast<int>(lp.status)) + ")");
        }
        for (size_t j = 0; j < rows; j++) {
            pi[j] = lp.duals(static_cast<Eigen::Index>(j));
        }
        dual_objective = lp.objective;
        result.separation_rounds = round;
        result.lp_columns = k;

        auto fhat = finish(pi);
        std::vector<std::pair<double, uint32_t>> violated;
        for (uint32_t o = 0; o < orbit_count; o++) {
            if (!active[o]) {
                double v = fhat[members[o].front()];
                if (v < -options.tolerance * 0.1) {
                    violated.emplace_back(v, o);
                }
            }
        }
        if (violated.empty()) {
            break;
        }
        std::sort(violated.begin(), violated.end());
        size_t add = std::min<size_t>(violated.size(), std::max<size_t>(64, rows / 4));
        for (size_t i = 0; i < add; i++) {
            columns.push_back(violated[i].second);
            active[violated[i].second] = 1;
        }
    }

    // The objective counts f(0) = 1 separately from the LP.
    result.dual_value = 1.0 + dual_objective;
    if (result.min_fourier_coefficient < -options.tolerance || result.max_edge_residual > options.tolerance ||
        result.origin_residual > options.tolerance || std::abs(result.value - result.dual_value) > 1e-6) {
        throw SolverError("theta LP certificate failed verification: min Fourier coefficient " +
                          std::to_string(result.min_fourier_coefficient) + ", primal " +
                          std::to_string(result.value) + ", dual " + std::to_string(result.dual_value));
    }
    return result;
}

ThetaSanityReport theta_sanity(const CayleyGraph &g, const IndependenceCertificate &cert, const ThetaResult &theta) {
    require_same_group(g.params(), cert.set().params(), "theta_sanity");
    ThetaSanityReport r;
    r.alpha = cert.alpha();
    r.theta = theta.value;
    r.gap = theta.value - static_cast<double>(cert.alpha());
    if (static_cast<double>(cert.alpha()) > theta.value + theta.tolerance) {
        throw InvariantError("independent set of size " + std::to_string(cert.alpha()) + " exceeds theta " +
                             std::to_string(theta.value));
    }
    return r;
}

}  // namespace phasecap
