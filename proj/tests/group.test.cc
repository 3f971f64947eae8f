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

#include "phasecap/group.h"

#include <gtest/gtest.h>

#include <algorithm>

#include <random>

#include "oracles.h"
#include "phasecap/errors.h"

using namespace phasecap;

TEST(group, params_validation) {
    EXPECT_THROW(GroupParams::make(4, 3), ParameterError);
    EXPECT_THROW(GroupParams::make(2, 0), ParameterError);
    EXPECT_THROW(GroupParams::make(2, 65), ParameterError);
    EXPECT_THROW(GroupParams::make(3, 40), ParameterError);
    EXPECT_NO_THROW(GroupParams::make(2, 64));
    EXPECT_EQ(GroupParams::make(3, 4).order(), 81u);
    EXPECT_FALSE(GroupParams::make(2, 30).enumerable());
    EXPECT_THROW(GroupParams::make(2, 30).require_enumerable("test"), ResourceError);
}

TEST(group, packed_arithmetic_matches_digits) {
    std::mt19937_64 rng(11);
    for (auto [q, n] : {std::pair{2u, 7u}, {3u, 5u}, {5u, 3u}, {7u, 2u}, {2u, 64u}}) {
        GroupParams p = GroupParams::make(q, n);
        for (int trial = 0; trial < 200; trial++) {
            std::vector<uint32_t> a(n);
            std::vector<uint32_t> b(n);
            for (uint32_t i = 0; i < n; i++) {
                a[i] = static_cast<uint32_t>(rng() % q);
                b[i] = static_cast<uint32_t>(rng() % q);
            }
            GroupVector va = GroupVector::from_coords(p, a);
            GroupVector vb = GroupVector::from_coords(p, b);
            std::vector<uint32_t> sum(n);
            std::vector<uint32_t> dif(n);
            std::vector<uint32_t> neg(n);
            uint32_t w = 0;
            for (uint32_t i = 0; i < n; i++) {
                sum[i] = (a[i] + b[i]) % q;
                dif[i] = (a[i] + q - b[i]) % q;
                neg[i] = (q - a[i]) % q;
                w += a[i] != 0;
            }
            ASSERT_EQ(add(va, vb).coords(), sum);
            ASSERT_EQ(sub(va, vb).coords(), dif);
            ASSERT_EQ(negate(va).coords(), neg);
            ASSERT_EQ(hamming_weight(va), w);
            ASSERT_EQ(GroupVector::parse(p, va.str()), va);
        }
    }
}

TEST(group, packing_is_lexicographic) {
    GroupParams p = GroupParams::make(3, 3);
    for (uint64_t v = 0; v < 27; v++) {
        EXPECT_EQ(GroupVector(p, v).coords(), oracle::digits(3, 3, v));
    }
    GroupParams b = GroupParams::make(2, 8);
    // Coordinate 1 is the most significant bit: e_1 = 10000000 = 128.
    EXPECT_EQ(GroupVector::unit(b, 0).index(), 128u);
    EXPECT_EQ(GroupVector::unit(b, 0).str(), "10000000");
    EXPECT_LT(GroupVector::unit(b, 1), GroupVector::unit(b, 0));
}

TEST(group, parse_errors) {
    GroupParams p = GroupParams::make(2, 4);
    EXPECT_THROW(GroupVector::parse(p, "010"), InputError);
    EXPECT_THROW(GroupVector::parse(p, "01a0"), InputError);
    GroupParams t = GroupParams::make(3, 2);
    EXPECT_EQ(GroupVector::parse(t, "2,1").coords(), (std::vector<uint32_t>{2, 1}));
    EXPECT_THROW(GroupVector::parse(t, "3,1"), InputError);
    EXPECT_THROW(GroupVector::parse(t, "1,"), InputError);
}

TEST(group, support_set_canonical) {
    GroupParams p = GroupParams::make(2, 3);
    SupportSet s(p, {5, 1, 5, 3});
    EXPECT_EQ(s.indices(), (std::vector<uint64_t>{1, 3, 5}));
    EXPECT_THROW(SupportSet::from_unique(p, {1, 1}), InputError);
    EXPECT_TRUE(s.contains(uint64_t{3}));
    EXPECT_FALSE(s.contains(uint64_t{2}));
}

TEST(group, min_distance_matches_oracle) {
    std::mt19937_64 rng(5);
    for (auto [q, n] : {std::pair{2u, 10u}, {3u, 5u}, {5u, 3u}}) {
        GroupParams p = GroupParams::make(q, n);
        for (int trial = 0; trial < 50; trial++) {
            std::vector<uint64_t> words;
            for (int k = 0; k < 12; k++) {
                words.push_back(rng() % p.order());
            }
            SupportSet s(p, words);
            if (s.size() < 2) {
                continue;
            }
            EXPECT_EQ(min_distance(s), oracle::min_distance(q, n, s.indices()));
        }
    }
    EXPECT_THROW(min_distance(SupportSet(GroupParams::make(2, 3), {1})), UndefinedDistanceError);
}

TEST(group, ball_matches_oracle) {
    for (auto [q, n] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}}) {
        GroupParams p = GroupParams::make(q, n);
        for (uint32_t t = 0; t <= n; t++) {
            auto expected = oracle::ball(q, n, t);
            SupportSet ball = enumerate_ball(p, t);
            EXPECT_EQ(ball.size(), expected.size());
            EXPECT_EQ(ball_size(p, t), expected.size());
            EXPECT_TRUE(std::equal(ball.begin(), ball.end(), expected.begin()));
        }
    }
}

// E_t - E_t = E_2t, exhaustively for q = 2, n <= 8, t <= 3.
TEST(group, ball_difference_identity) {
    for (uint32_t n = 1; n <= 8; n++) {
        GroupParams p = GroupParams::make(2, n);
        for (uint32_t t = 0; t <= std::min(3u, n); t++) {
            SupportSet e = enumerate_ball(p, t);
            SupportSet diffs = difference_set(e, e);
            SupportSet e2 = enumerate_ball(p, std::min(2 * t, n));
            ASSERT_EQ(diffs, e2) << "n=" << n << " t=" << t;
            auto o = oracle::differences(2, n, e.indices(), e.indices());
            ASSERT_EQ(o.size(), diffs.size());
        }
    }
}

TEST(group, ball_difference_identity_odd_q) {
    // Over F_3 the identity also holds: every vector of weight <= 2t splits into two of weight <= t.
    for (uint32_t n = 1; n <= 4; n++) {
        GroupParams p = GroupParams::make(3, n);
        for (uint32_t t = 0; t <= std::min(2u, n); t++) {
            SupportSet e = enumerate_ball(p, t);
            EXPECT_EQ(difference_set(e, e), enumerate_ball(p, std::min(2 * t, n)));
        }
    }
}

TEST(group, weight_distribution_counts) {
    GroupParams p = GroupParams::make(2, 5);
    SupportSet all = enumerate_ball(p, 5);
    auto w = weight_distribution(all);
    const uint64_t binom[] = {1, 5, 10, 10, 5, 1};
    for (uint32_t k = 0; k <= 5; k++) {
        EXPECT_EQ(w[k], binom[k]);
    }
}

TEST(group, mismatched_groups_rejected) {
    GroupVector a = GroupVector::zero(GroupParams::make(2, 3));
    GroupVector b = GroupVector::zero(GroupParams::make(2, 4));
    EXPECT_THROW(add(a, b), ParameterError);
}
