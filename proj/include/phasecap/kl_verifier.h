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

#ifndef PHASECAP_KL_VERIFIER_H
#define PHASECAP_KL_VERIFIER_H

#include <Eigen/Dense>
#include <cstdint>

#include "phasecap/group.h"
#include "phasecap/noise.h"

namespace phasecap {

using DenseOperator = Eigen::MatrixXcd;

inline constexpr uint64_t kMaxDenseDimension = 4096;
inline constexpr double kKlTolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-12;

/// F|x> = q^(-n/2) sum_s zeta^(s.x) |s>, zeta = exp(2 pi i / q). Prime q, q^n <= 4096.
DenseOperator build_qft(const GroupParams &params);
/// Z^w |x> = zeta^(w.x) |x>.
DenseOperator phase_operator(const GroupVector &w);
/// T^w |x> = |x + w>.
DenseOperator translation_operator(const GroupVector &w);
/// P_S = sum_{s in S} F|s><s|F^dagger.
DenseOperator fourier_projector(const SupportSet &s, const DenseOperator &qft);

/// max |F^dagger Z^w F - T^w|, i.e. how far Z^w |s>_F = |s + w>_F is from exact.
double verify_spectral_translation(const GroupVector &w);

struct KlCheck {
    /// Operator-level verdict.
    bool passes = true;
    /// Verdict of the difference-set predicate.
    bool combinatorial = true;
    /// Largest |P E P - lambda P| over the tested operators.
    double worst_violation = 0;
    /// Largest |lambda - <s|E|s>_F| among scalar (passing) operators.
    double lambda_residual = 0;
    double projector_residual = 0;
    uint64_t operators_checked = 0;
    bool agrees() const {
        return passes == combinatorial;
    }
};

/// P Z^w P proportional to P for every w in Omega \ {0}; compared with (S - S) n Omega = {0}.
KlCheck kl_detection_check(const SupportSet &s, const NoiseModel &model);
/// P Z^(-a) Z^b P proportional to P for all a, b in Omega; compared with (S - S) n (Omega - Omega) = {0}.
KlCheck kl_correction_check(const SupportSet &s, const NoiseModel &model);

struct KlAgreementReport {
    uint64_t samples = 0;
    uint64_t detection_agreements = 0;
    uint64_t correction_agreements = 0;
    uint64_t detection_passes = 0;
    uint64_t correction_passes = 0;
    double worst_scalar_residual = 0;
    double worst_translation_residual = 0;
    bool all_agree() const {
        return detection_agreements == samples && correction_agreements == samples;
    }
};

/// Random nonempty supports of size 1..min(8, q^n), checked along both paths.
KlAgreementReport kl_random_agreement(const NoiseModel &model, uint64_t samples, uint64_t seed);

}  // namespace phasecap

#endif
