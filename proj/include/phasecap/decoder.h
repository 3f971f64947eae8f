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

#ifndef PHASECAP_DECODER_H
#define PHASECAP_DECODER_H

#include <cstdint>

#include "phasecap/codes.h"

namespace phasecap {

struct DecodeResult {
    GroupVector nearest;
    uint32_t distance = 0;
    /// False when another codeword is equally close; `nearest` is then the lexicographically first.
    bool unique = true;
    /// distance <= floor((d - 1) / 2).
    bool within_guarantee = false;
};

/// Nearest codeword by Hamming distance (brute-force scan).
DecodeResult ml_decode(const CodeRecord &code, const GroupVector &received);

struct RoundtripReport {
    uint64_t trials = 0;
    uint64_t failures = 0;
    uint32_t t = 0;
    uint64_t seed = 0;
};

/// Encodes a random codeword, adds a random error of weight <= t, decodes.
/// Trial i draws from a generator seeded by (seed, i), so results do not
/// depend on the worker count (PHASECAP_THREADS). Throws ParameterError when
/// the support does not satisfy verify_phase_correction(support, t).
RoundtripReport decode_roundtrip_trial(const CodeRecord &code, uint32_t t, uint64_t trials, uint64_t seed);

/// PHASECAP_THREADS if set and positive, else the hardware concurrency.
unsigned worker_count();

}  // namespace phasecap

#endif
