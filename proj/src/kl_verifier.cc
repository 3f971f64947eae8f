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

#include "phasecap/kl_verifier.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "phasecap/errors.h"

namespace phasecap {

namespace {

void require_dense(const GroupParams &p) {
    if (!is_prime(p.q)) {
        throw ParameterError("dense verifier needs prime q");
    }
    if (p.order() > kMaxDenseDimension) {
        throw ParameterError("dense verifier limited to dimension " + std::to_string(kMaxDenseDimension) + ", got " +
                             p.describe());
    }
}

uint32_t dot(const GroupParams &p, uint64_t a, uint64_t b) {
    uint32_t s = 0;
    for (uint32_t i = 0; i < p.n; i++) {
        s += packed::coord(p, a, i) * packed::coord(p, b, i);
    }
    return s % p.q;
}

std::complex<double> root_power(uint32_t q, uint32_t k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k % q) / static_cast<double>(q);
    return std::polar(1.0, angle);
}

double max_abs(const DenseOperator &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Max entry of P M P - lambda P with lambda the trace ratio; also returns lambda.
std::pair<double, std::complex<double>> scalar_violation(const DenseOperator &proj, const DenseOperator &m) {
    DenseOperator sandwich = proj * m * proj;
    std::complex<double> lambda = sandwich.trace() / proj.trace();
    return {max_abs(sandwich - lambda * proj), lambda};
}

struct Prepared {
    DenseOperator qft;
    DenseOperator proj;
    double projector_residual = 0;
};

Prepared prepare(const SupportSet &s, const NoiseModel &model) {
    require_same_group(s.params(), model.params, "KL check");
    require_dense(s.params());
    if (s.empty()) {
        throw ParameterError("KL check needs a nonempty support");
    }
    Prepared out;
    out.qft = build_qft(s.params());
    out.proj = fourier_projector(s, out.qft);
    out.projector_residual =
        std::max(max_abs(out.proj * out.proj - out.proj), max_abs(out.proj - DenseOperator(out.proj.adjoint())));
    if (out.projector_residual > 1e-10) {
        throw InvariantError("support projector is not an orthogonal projector");
    }
    return out;
}

void record(KlCheck &c, double violation, std::complex<double> lambda, double expected_lambda) {
    c.operators_checked++;
    c.worst_violation = std::max(c.worst_violation, violation);
    if (violation > kKlTolerance) {
        c.passes = false;
    } else {
        c.lambda_residual = std::max(c.lambda_residual, std::abs(lambda - expected_lambda));
    }
}

bool collides(const SupportSet &diffs, const SupportSet &targets) {
    for (uint64_t v : targets) {
        if (v != 0 && diffs.contains(v)) {
            return true;
        }
    }
    return false;
}

}  // namespace

DenseOperator build_qft(const GroupParams &params) {
    require_dense(params);
    const uint64_t dim = params.order();
    DenseOperator f(dim, dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (uint64_t s = 0; s < dim; s++) {
        for (uint64_t x = 0; x < dim; x++) {
            f(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(x)) = norm * root_power(params.q, dot(params, s, x));
        }
    }
    return f;
}

DenseOperator phase_operator(const GroupVector &w) {
    const GroupParams &p = w.params();
    require_dense(p);
    const uint64_t dim = p.order();
    DenseOperator z = DenseOperator::Zero(dim, dim);
    for (uint64_t x = 0; x < dim; x++) {
        z(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(x)) = root_power(p.q, dot(p, w.index(), x));
    }
    return z;
}

DenseOperator translation_operator(const GroupVector &w) {
    const GroupParams &p = w.params();
    require_dense(p);
    const uint64_t dim = p.order();
    DenseOperator t = DenseOperator::Zero(dim, dim);
    for (uint64_t x = 0; x < dim; x++) {
        t(static_cast<Eigen::Index>(packed::add(p, x, w.index())), static_cast<Eigen::Index>(x)) = 1.0;
    }
    return t;
}

DenseOperator fourier_projector(const SupportSet &s, const DenseOperator &qft) {
    const uint64_t dim = s.params().order();
    if (static_cast<uint64_t>(qft.rows()) != dim) {
        throw ParameterError("QFT dimension does not match the support");
    }
    DenseOperator cols(dim, s.size());
    Eigen::Index k = 0;
    for (uint64_t v : s) {
        cols.col(k++) = qft.col(static_cast<Eigen::Index>(v));
    }
    return cols * cols.adjoint();
}

double verify_spectral_translation(const GroupVector &w) {
    DenseOperator f = build_qft(w.params());
    DenseOperator lhs = f.adjoint() * phase_operator(w) * f;
    return max_abs(lhs - translation_operator(w));
}

KlCheck kl_detection_check(const SupportSet &s, const NoiseModel &model) {
    Prepared prep = prepare(s, model);
    KlCheck c;
    c.projector_residual = prep.projector_residual;
    for (uint64_t w : model.omega) {
        if (w == 0) {
            continue;
        }
        auto [violation, lambda] = scalar_violation(prep.proj, phase_operator(GroupVector(model.params, w)));
        // <s|_F Z^w |s>_F = <s|s + w> vanishes for w != 0.
        record(c, violation, lambda, 0.0);
    }
    c.combinatorial = !collides(difference_set(s, s), model.omega);
    return c;
}

KlCheck kl_correction_check(const SupportSet &s, const NoiseModel &model) {
    Prepared prep = prepare(s, model);
    const GroupParams &p = model.params;
    KlCheck c;
    c.projector_residual = prep.projector_residual;
    std::vector<DenseOperator> phases;
    for (uint64_t w : model.omega) {
        phases.push_back(phase_operator(GroupVector(p, w)));
    }
    const auto &om = model.omega.indices();
    for (size_t a = 0; a < om.size(); a++) {
        for (size_t b = 0; b < om.size(); b++) {
            DenseOperator m = phases[a].adjoint() * phases[b];
            auto [violation, lambda] = scalar_violation(prep.proj, m);
            record(c, violation, lambda, om[a] == om[b] ? 1.0 : 0.0);
        }
    }
    SupportSet omega_diff = difference_set(model.omega, model.omega);
    c.combinatorial = !collides(difference_set(s, s), omega_diff);
    return c;
}

KlAgreementReport kl_random_agreement(const NoiseModel &model, uint64_t samples, uint64_t seed) {
    const GroupParams &p = model.params;
    require_dense(p);
    const uint64_t dim = p.order();
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> all(dim);
    for (uint64_t v = 0; v < dim; v++) {
        all[v] = v;
    }
    KlAgreementReport r;
    std::uniform_int_distribution<uint64_t> size_dist(1, std::min<uint64_t>(8, dim));
    for (uint64_t i = 0; i < samples; i++) {
        uint64_t k = size_dist(rng);
        std::shuffle(all.begin(), all.end(), rng);
        SupportSet s(p, std::vector<uint64_t>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k)));
        KlCheck det = kl_detection_check(s, model);
        KlCheck cor = kl_correction_check(s, model);
        r.samples++;
        r.detection_agreements += det.agrees();
        r.correction_agreements += cor.agrees();
        r.detection_passes += det.passes;
        r.correction_passes += cor.passes;
        r.worst_scalar_residual = std::max({r.worst_scalar_residual, det.lambda_residual, cor.lambda_residual});
    }
    for (uint64_t w = 0; w < dim; w++) {
        r.worst_translation_residual =
            std::max(r.worst_translation_residual, verify_spectral_translation(GroupVector(p, w)));
    }
    return r;
}

}  // namespace phasecap
