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

#ifndef PHASECAP_NOISE_H
#define PHASECAP_NOISE_H

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "phasecap/group.h"

namespace phasecap {

enum class NoiseKind { Uniform, CorrelatedRing, CorrelatedChain, Custom };

std::string noise_kind_name(NoiseKind kind);

/// An admissible phase-error set Omega. The zero vector is always a member.
struct NoiseModel {
    GroupParams params;
    SupportSet omega;
    NoiseKind kind = NoiseKind::Custom;
    /// Radius for Uniform models.
    std::optional<uint32_t> t;

    std::string describe() const;
};

/// Omega = E_t.
NoiseModel uniform_ball_model(const GroupParams &params, uint32_t t);

/// Independent flips plus nearest-neighbour pairs on a ring of n binary
/// coordinates: {0} u {e_i} u {e_i + e_{i+1}} u {e_n + e_1}. With
/// `periodic = false` the wrap-around pair is omitted.
NoiseModel correlated_ring_model(uint32_t n, bool periodic = true);

/// Wraps an arbitrary error list. Adds the zero vector if absent and reports it via `added_zero`.
NoiseModel custom_model(SupportSet omega, bool *added_zero = nullptr);

/// Reads the noise-model JSON schema `{"q":..,"n":..,"omega":[..]}`. An
/// optional "t" marks a uniform model and is checked against omega.
/// Warnings (such as a missing zero vector) are appended to `warnings`.
NoiseModel load_noise_model(const std::filesystem::path &path, std::vector<std::string> *warnings = nullptr);
NoiseModel parse_noise_model(const std::string &json_text, std::vector<std::string> *warnings = nullptr);
std::string noise_model_json(const NoiseModel &model);
void save_noise_model(const NoiseModel &model, const std::filesystem::path &path);

/// D = (Omega - Omega) \ {0}, with an O(1) membership bitmap over the whole group.
class DifferenceSet {
   public:
    /// Validates that `elements` is negation-symmetric and zero-free (InvariantError otherwise).
    /// The group must be enumerable.
    explicit DifferenceSet(SupportSet elements);

    const GroupParams &params() const {
        return elements_.params();
    }
    const SupportSet &elements() const {
        return elements_;
    }
    size_t size() const {
        return elements_.size();
    }
    bool contains(uint64_t index) const {
        return member_[index] != 0;
    }

   private:
    SupportSet elements_;
    std::vector<uint8_t> member_;
};

DifferenceSet derive_difference_set(const NoiseModel &model);

}  // namespace phasecap

#endif
