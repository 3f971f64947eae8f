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

#include "phasecap/noise.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "phasecap/errors.h"

using namespace phasecap;

TEST(noise, uniform_model_is_ball) {
    NoiseModel m = uniform_ball_model(GroupParams::make(2, 8), 1);
    EXPECT_EQ(m.omega.size(), 9u);
    EXPECT_EQ(m.kind, NoiseKind::Uniform);
    EXPECT_EQ(m.t, 1u);
    DifferenceSet d = derive_difference_set(m);
    EXPECT_EQ(d.size(), 36u);
}

TEST(noise, correlated_ring_difference_set) {
    NoiseModel m = correlated_ring_model(8);
    EXPECT_EQ(m.omega.size(), 17u);
    DifferenceSet d = derive_difference_set(m);
    auto expected = oracle::differences(2, 8, m.omega.indices(), m.omega.indices());
    expected.erase(0);
    ASSERT_EQ(d.size(), expected.size());
    EXPECT_TRUE(std::equal(d.elements().begin(), d.elements().end(), expected.begin()));
    EXPECT_EQ(d.size(), 96u);
    auto w = weight_distribution(d.elements());
    EXPECT_EQ(w[1], 8u);
    EXPECT_EQ(w[2], 28u);
    EXPECT_EQ(w[3], 40u);
    EXPECT_EQ(w[4], 20u);
    auto e4 = oracle::ball(2, 8, 4);
    EXPECT_EQ(e4.size() - 1, 162u);
    for (uint64_t v : d.elements()) {
        EXPECT_TRUE(e4.count(v));
    }
}

TEST(noise, ring_contains_wraparound_pair) {
    NoiseModel ring = correlated_ring_model(5);
    NoiseModel chain = correlated_ring_model(5, false);
    GroupParams p = ring.params;
    uint64_t wrap = packed::unit(p, 4) ^ packed::unit(p, 0);
    EXPECT_TRUE(ring.omega.contains(wrap));
    EXPECT_FALSE(chain.omega.contains(wrap));
    EXPECT_EQ(ring.omega.size(), 11u);
    EXPECT_EQ(chain.omega.size(), 10u);
    EXPECT_THROW(correlated_ring_model(2), ParameterError);
}

TEST(noise, difference_set_invariants) {
    GroupParams p = GroupParams::make(3, 2);
    EXPECT_THROW(DifferenceSet(SupportSet(p, {0, 1, 2})), InvariantError);
    // {1} is not closed under negation over F_3.
    EXPECT_THROW(DifferenceSet(SupportSet(p, {1})), InvariantError);
    EXPECT_NO_THROW(DifferenceSet(SupportSet(p, {1, 2})));
}

TEST(noise, custom_model_adds_zero) {
    GroupParams p = GroupParams::make(2, 4);
    bool added = false;
    NoiseModel m = custom_model(SupportSet(p, {3}), &added);
    EXPECT_TRUE(added);
    EXPECT_TRUE(m.omega.contains(uint64_t{0}));
}

TEST(noise, json_round_trip) {
    NoiseModel m = correlated_ring_model(6);
    std::vector<std::string> warnings;
    NoiseModel back = parse_noise_model(noise_model_json(m), &warnings);
    EXPECT_TRUE(warnings.empty());
    EXPECT_EQ(back.omega, m.omega);

    NoiseModel u = uniform_ball_model(GroupParams::make(3, 3), 1);
    NoiseModel ub = parse_noise_model(noise_model_json(u));
    EXPECT_EQ(ub.kind, NoiseKind::Uniform);
    EXPECT_EQ(ub.t, 1u);
    EXPECT_EQ(ub.omega, u.omega);
}

TEST(noise, json_diagnostics) {
    std::vector<std::string> warnings;
    NoiseModel m = parse_noise_model(R"({"q":2,"n":3,"omega":["001","010"]})", &warnings);
    EXPECT_EQ(m.omega.size(), 3u);
    ASSERT_EQ(warnings.size(), 1u);

    EXPECT_THROW(parse_noise_model("{", nullptr), InputError);
    EXPECT_THROW(parse_noise_model(R"({"q":2,"omega":[]})"), InputError);
    EXPECT_THROW(parse_noise_model(R"({"q":4,"n":2,"omega":[]})"), InputError);
    EXPECT_THROW(parse_noise_model(R"({"q":2,"n":3,"omega":["001","001"]})"), InputError);
    EXPECT_THROW(parse_noise_model(R"({"q":2,"n":3,"omega":["0012"]})"), InputError);
    EXPECT_THROW(parse_noise_model(R"({"q":2,"n":3,"omega":[5]})"), InputError);

    warnings.clear();
    NoiseModel wrong_t = parse_noise_model(R"({"q":2,"n":3,"t":1,"omega":["000","011"]})", &warnings);
    EXPECT_EQ(wrong_t.kind, NoiseKind::Custom);
    EXPECT_EQ(warnings.size(), 1u);
}

TEST(noise, load_missing_file) {
    EXPECT_THROW(load_noise_model("/nonexistent/phasecap/model.json"), InputError);
}
