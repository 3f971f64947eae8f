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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles.h"
#include "phasecap/errors.h"

using namespace phasecap;

namespace {

CodeRecord code_of(uint32_t n, std::vector<uint64_t> words) {
    return CodeRecord::make("test", SupportSet(GroupParams::make(2, n), std::move(words)), Provenance::Loaded);
}

struct ThreadOverride {
    explicit ThreadOverride(const char *v) {
        setenv("PHASECAP_THREADS", v, 1);
    }
    ~ThreadOverride() {
        unsetenv("PHASECAP_THREADS");
    }
};

}  // namespace

TEST(decoder, repetition_code) {
    CodeRecord rep = code_of(3, {0b000, 0b111});
    GroupParams p = rep.support.params();
    auto r = ml_decode(rep, GroupVector::parse(p, "010"));
    EXPECT_EQ(r.nearest.index(), 0u);
    EXPECT_EQ(r.distance, 1u);
    EXPECT_TRUE(r.unique);
    EXPECT_TRUE(r.within_guarantee);
    auto s = ml_decode(rep, GroupVector::parse(p, "110"));
    EXPECT_EQ(s.nearest.index(), 7u);
}

TEST(decoder, ties_are_flagged) {
    CodeRecord c = code_of(2, {0b00, 0b11});
    auto r = ml_decode(c, GroupVector::parse(c.support.params(), "01"));
    EXPECT_FALSE(r.unique);
    EXPECT_EQ(r.nearest.index(), 0u);
    EXPECT_EQ(r.distance, 1u);
    EXPECT_FALSE(r.within_guarantee);
}

TEST(decoder, codewords_decode_to_themselves) {
    CodeRecord nr = nordstrom_robinson();
    for (uint64_t c : nr.support) {
        auto r = ml_decode(nr, GroupVector(nr.support.params(), c));
        EXPECT_EQ(r.nearest.index(), c);
        EXPECT_EQ(r.distance, 0u);
        EXPECT_TRUE(r.unique);
    }
}

TEST(decoder, matches_exhaustive_nearest) {
    std::mt19937_64 rng(99);
    CodeRecord julin = julin_class_search();
    GroupParams p = julin.support.params();
    for (int i = 0; i < 256; i++) {
        uint64_t y = rng() % 256;
        uint32_t best = UINT32_MAX;
        size_t count = 0;
        for (uint64_t c : julin.support) {
            uint32_t d = oracle::distance(2, 8, y, c);
            if (d < best) {
                best = d;
                count = 1;
            } else if (d == best) {
                count++;
            }
        }
        auto r = ml_decode(julin, GroupVector(p, y));
        EXPECT_EQ(r.distance, best);
        EXPECT_EQ(r.unique, count == 1);
        EXPECT_EQ(oracle::distance(2, 8, y, r.nearest.index()), best);
    }
}

TEST(decoder, roundtrip_within_radius) {
    auto nr = decode_roundtrip_trial(nordstrom_robinson(), 2, 2000, 1);
    EXPECT_EQ(nr.trials, 2000u);
    EXPECT_EQ(nr.failures, 0u);
    auto julin = decode_roundtrip_trial(julin_class_search(), 1, 1000, 17);
    EXPECT_EQ(julin.failures, 0u);
    auto ternary = decode_roundtrip_trial(
        CodeRecord::make("rep3", SupportSet(GroupParams::make(3, 5), {0, 121, 242}), Provenance::Loaded), 2, 500, 3);
    EXPECT_EQ(ternary.failures, 0u);
}

TEST(decoder, roundtrip_independent_of_threads) {
    CodeRecord nr = nordstrom_robinson();
    RoundtripReport one, many;
    {
        ThreadOverride o("1");
        EXPECT_EQ(worker_count(), 1u);
        one = decode_roundtrip_trial(nr, 2, 500, 42);
    }
    {
        ThreadOverride o("7");
        EXPECT_EQ(worker_count(), 7u);
        many = decode_roundtrip_trial(nr, 2, 500, 42);
    }
    EXPECT_EQ(one.failures, many.failures);
    EXPECT_EQ(one.trials, many.trials);
}

TEST(decoder, refuses_bad_requests) {
    EXPECT_THROW(decode_roundtrip_trial(nordstrom_robinson(), 3, 10, 1), ParameterError);
    CodeRecord empty = CodeRecord::make("empty", SupportSet(GroupParams::make(2, 3)), Provenance::Loaded);
    EXPECT_THROW(ml_decode(empty, GroupVector::zero(GroupParams::make(2, 3))), ParameterError);
    CodeRecord rep = code_of(3, {0, 7});
    EXPECT_THROW(ml_decode(rep, GroupVector::zero(GroupParams::make(2, 4))), ParameterError);
}
