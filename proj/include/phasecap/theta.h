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

#ifndef PHASECAP_THETA_H
#define PHASECAP_THETA_H

#include <span>
#include <vector>

#include "phasecap/cayley.h"

namespace phasecap {

/// Real character transform  f^(s) = sum_x f(x) cos(2 pi (s.x mod q) / q).
///
/// For q = 2 this is the unnormalized Walsh-Hadamard transform. For odd q it
/// is the real part of the group Fourier transform, which is the full
/// transform whenever f(x) = f(-x). Limited to q^n <= 2^20.
std::vector<double> character_transform(const GroupParams &params, std::span<const double> f);

struct ThetaOptions {
    double tolerance = 1e-7;
    /// Symmetrize over coordinate permutations preserving D (negation is always used).
    bool use_symmetry = true;
    /// Character orbits admitted to the first LP round; the rest enter by separation.
    size_t initial_characters = 2048;
};

/// Lovasz theta of an abelian Cayley graph from the translation-invariant LP
///
///     max sum_x f(x)   s.t.  f(0) = 1,  f = 0 on D,  f^ >= 0,  f(x) = f(-x).
struct ThetaResult {
    double value = 0.0;
    /// Optimal value of the dual LP; agrees with `value` to solver precision.
    double dual_value = 0.0;
    /// The primal certificate, indexed by packed vertex.
    std::vector<double> f;
    double min_fourier_coefficient = 0.0;
    /// max |f(d)| over d in D.
    double max_edge_residual = 0.0;
    /// |f(0) - 1|.
    double origin_residual = 0.0;
    double tolerance = 1e-7;
    size_t lp_rows = 0;
    size_t lp_columns = 0;
    uint32_t separation_rounds = 0;
};

/// Requires q^n <= 2^14. Throws SolverError when the LP does not reach a
/// certified optimum within tolerance.
ThetaResult theta_abelian(const CayleyGraph &g, const ThetaOptions &options = {});

struct ThetaSanityReport {
    size_t alpha = 0;
    double theta = 0.0;
    double gap = 0.0;
};

/// Checks alpha <= theta + tolerance; a violation throws InvariantError.
ThetaSanityReport theta_sanity(const CayleyGraph &g, const IndependenceCertificate &cert, const ThetaResult &theta);

/// Vertex orbits under negation and the given coordinate permutations.
/// Returns the orbit id of every vertex; ids are numbered by smallest member.
std::vector<uint32_t> vertex_orbits(const GroupParams &params, const std::vector<std::vector<uint8_t>> &perms);

/// Transpositions, the cyclic shift, and the reversal of coordinates that map D onto itself.
std::vector<std::vector<uint8_t>> coordinate_symmetry_generators(const DifferenceSet &d);

}  // namespace phasecap

#endif
