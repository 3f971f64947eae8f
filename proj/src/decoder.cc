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

#include "phasecap/decoder.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <thread>

#include "phasecap/errors.h"

namespace phasecap {

unsigned worker_count() {
    if (const char *env = std::getenv("PHASECAP_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(std::min<long>(v, 256));
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

DecodeResult ml_decode(const CodeRecord &code, const GroupVector &received) {
    const GroupParams &p = code.support.params();
    require_same_group(p, received.params(), "decode");
    if (code.support.empty()) {
        throw ParameterError("cannot decode with an empty code");
    }
    uint64_t best = 0;
    uint32_t best_dist = UINT32_MAX;
    bool unique = true;
    // Indices are sorted, so the first minimum is the lexicographically smallest.
    for (uint64_t c : code.support) {
        uint32_t dist = packed::weight(p, packed::sub(p, received.index(), c));
        if (dist < best_dist) {
            best_dist = dist;
            best = c;
            unique = true;
        } else if (dist == best_dist) {
            unique = false;
        }
    }
    return DecodeResult{GroupVector(p, best), best_dist, unique, best_dist <= code.correctable()};
}

namespace {

uint64_t trial_seed(uint64_t master, uint64_t index) {
    std::seed_seq seq{static_cast<uint32_t>(master), static_cast<uint32_t>(master >> 32),
                      static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32)};
    uint32_t words[2];
    seq.generate(words, words + 2);
    return (uint64_t{words[0]} << 32) | words[1];
}

bool run_trial(const CodeRecord &code, uint32_t t, uint64_t seed) {
    const GroupParams &p = code.support.params();
    std::mt19937_64 rng(seed);
    uint64_t s = code.support.indices()[std::uniform_int_distribution<size_t>(0, code.support.size() - 1)(rng)];
    uint32_t weight = std::uniform_int_distribution<uint32_t>(0, t)(rng);
    std::vector<uint32_t> positions(p.n);
    for (uint32_t i = 0; i < p.n; i++) {
        positions[i] = i;
    }
    std::shuffle(positions.begin(), positions.end(), rng);
    uint64_t e = 0;
    std::uniform_int_distribution<uint32_t> symbol(1, p.q - 1);
    for (uint32_t k = 0; k < weight; k++) {
        uint64_t u = packed::unit(p, positions[k]);
        uint32_t a = symbol(rng);
        for (uint32_t j = 0; j < a; j++) {
            e = packed::add(p, e, u);
        }
    }
    DecodeResult r = ml_decode(code, GroupVector(p, packed::add(p, s, e)));
    return r.nearest.index() == s && r.unique && r.distance == weight;
}

}  // namespace

RoundtripReport decode_roundtrip_trial(const CodeRecord &code, uint32_t t, uint64_t trials, uint64_t seed) {
    if (!verify_phase_correction(code.support, t)) {
        throw ParameterError("refusing round-trip: " + code.name + " has d=" + std::to_string(code.min_distance) +
                             " < 2t+1=" + std::to_string(2 * t + 1));
    }
    if (code.support.empty()) {
        throw ParameterError("cannot decode with an empty code");
    }
    RoundtripReport report{trials, 0, t, seed};
    std::atomic<uint64_t> failures{0};
    std::atomic<uint64_t> next{0};
    unsigned workers = static_cast<unsigned>(std::min<uint64_t>(worker_count(), std::max<uint64_t>(trials, 1)));
    auto work = [&] {
        for (uint64_t i = next++; i < trials; i = next++) {
            if (!run_trial(code, t, trial_seed(seed, i))) {
                failures++;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(work);
        }
    }
    report.failures = failures.load();
    return report;
}

}  // namespace phasecap
