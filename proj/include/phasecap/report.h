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

#ifndef PHASECAP_REPORT_H
#define PHASECAP_REPORT_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phasecap/bounds.h"
#include "phasecap/cayley.h"
#include "phasecap/noise.h"
#include "phasecap/theta.h"

namespace phasecap {

struct CapacityOptions {
    bool exact = false;
    bool theta = false;
    bool bounds = false;
    bool classify = false;
    SearchBudget budget;
};

/// Everything computed for one noise model.
struct CapacityReport {
    NoiseModel model;
    uint64_t difference_size = 0;
    std::map<uint32_t, uint64_t> difference_weights;
    uint64_t vertex_count = 0;
    /// floor(q^n / |Omega|): the translates S + Omega are disjoint.
    uint64_t packing_bound = 0;
    /// Greedy independent set size, always computed when the group is enumerable.
    uint64_t greedy_lower_bound = 0;
    std::optional<IndependenceCertificate> alpha;
    std::optional<ThetaResult> theta;
    std::optional<UniformBoundsReport> uniform_bounds;
    std::optional<RegimeClassification> regime;
    std::vector<std::string> notes;
};

CapacityReport analyze_capacity(const NoiseModel &model, const CapacityOptions &options);
std::string capacity_json(const CapacityReport &report);
std::string capacity_text(const CapacityReport &report);

std::string dual_isolation_json(const DualIsolationReport &report);
std::string dual_isolation_text(const DualIsolationReport &report);

/// One reproduced headline number.
struct TableRow {
    std::string id;
    std::string claim;
    std::string expected;
    std::string computed;
    bool match = false;
    /// Displayed constant that is not recomputed here.
    bool cited = false;
    double seconds = 0.0;
    std::string detail;
};

std::vector<std::string> table_row_ids();
/// Computes all rows, or only `only` when given (ParameterError if unknown).
std::vector<TableRow> reproduce_table(const std::optional<std::string> &only = std::nullopt);
std::string table_json(const std::vector<TableRow> &rows);
std::string table_text(const std::vector<TableRow> &rows);

}  // namespace phasecap

#endif
