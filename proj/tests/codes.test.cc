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

#include "phasecap/codes.h"

#include <gtest/gtest.h>

#include <bit>
#include <map>
#include <random>

#include "oracles.h"
#include "phasecap/errors.h"

using namespace phasecap;

namespace {

std::map<uint32_t, uint64_t> binary_weights(const SupportSet &s) {
    std::map<uint32_t, uint64_t> w;
    for (uint64_t v : s) {
        w[static_cast<uint32_t>(std::popcount(v))]++;
    }
    return w;
}

bool closed_under_xor(const SupportSet &s) {
    for (uint64_t a : s) {
        for (uint64_t b : s) {
            if (!s.contains(a ^ b)) {
                return false;
            }
        }
    }
    return true;
}

bool sum_nondegenerate(const QuadraticForm &a, const QuadraticForm &b) {
    return oracle::sum_nondegenerate(a.m, a.rows, b.rows);
}

void expect_kerdock_set(const std::vector<QuadraticForm> &forms, uint32_t m) {
    ASSERT_EQ(forms.size(), size_t{1} << (m - 1));
    for (size_t i = 0; i < forms.size(); i++) {
        for (size_t j = i + 1; j < forms.size(); j++) {
            ASSERT_TRUE(sum_nondegenerate(forms[i], forms[j])) << "m=" << m << " pair " << i << "," << j;
        }
    }
}

}  // namespace

TEST(codes, nordstrom_robinson_parameters) {
    CodeRecord nr = nordstrom_robinson();
    EXPECT_EQ(nr.n, 16u);
    EXPECT_EQ(nr.size, 256u);
    EXPECT_EQ(nr.min_distance, 6u);
    EXPECT_EQ(oracle::min_distance(2, 16, nr.support.indices()), 6u);
    EXPECT_EQ(nr.structure, Structure::Nonlinear);
    EXPECT_FALSE(closed_under_xor(nr.support));
    // Known weight enumerator 1 + 112 z^6 + 30 z^8 + 112 z^10 + z^16.
    std::map<uint32_t, uint64_t> expected{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}};
    EXPECT_EQ(binary_weights(nr.support), expected);
    // Distance invariance: the same distribution is seen from every codeword.
    for (uint64_t c : nr.support) {
        std::map<uint32_t, uint64_t> dist;
        for (uint64_t v : nr.support) {
            dist[static_cast<uint32_t>(std::popcount(c ^ v))]++;
        }
        ASSERT_EQ(dist, expected);
    }
    EXPECT_TRUE(verify_phase_correction(nr.support, 2));
    EXPECT_FALSE(verify_phase_correction(nr.support, 3));
}

TEST(codes, kerdock_sets_from_galois_ring) {
    for (uint32_t m : {4u, 6u, 8u}) {
        auto forms = kerdock_set_galois(m);
        expect_kerdock_set(forms, m);
        EXPECT_TRUE(is_kerdock_set(forms));
    }
}

TEST(codes, kerdock_set_search_route) {
    auto forms = kerdock_set_search(4, 12345);
    expect_kerdock_set(forms, 4);
    auto six = kerdock_set_search(6, 1, 5'000'000);
    if (!six.empty()) {
        expect_kerdock_set(six, 6);
    }
    EXPECT_TRUE(kerdock_set_search(6, 1, 3).empty());
}

TEST(codes, kerdock_support_m4) {
    CodeRecord k = kerdock_support(4);
    EXPECT_EQ(k.n, 16u);
    EXPECT_EQ(k.size, 256u);
    EXPECT_EQ(k.min_distance, 6u);
    EXPECT_EQ(oracle::min_distance(2, 16, k.support.indices()), 6u);
    std::map<uint32_t, uint64_t> expected{{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}};
    EXPECT_EQ(binary_weights(k.support), expected);
    EXPECT_EQ(k.structure, Structure::Nonlinear);
}

TEST(codes, kerdock_support_m6) {
    CodeRecord k = kerdock_support(6);
    EXPECT_EQ(k.n, 64u);
    EXPECT_EQ(k.size, 4096u);
    EXPECT_EQ(k.min_distance, 28u);
    // Weights 2^(m-1) +- 2^(m/2-1) occur 2^m (2^(m-1) - 1) times each, 2^(m-1) occurs 2^(m+1) - 2 times.
    std::map<uint32_t, uint64_t> expected{{0, 1}, {28, 1984}, {32, 126}, {36, 1984}, {64, 1}};
    EXPECT_EQ(binary_weights(k.support), expected);
}

TEST(codes, kerdock_search_forms_give_same_parameters) {
    // Build S_K from the independently searched forms and compare parameters.
    auto forms = kerdock_set_search(4, 777);
    ASSERT_EQ(forms.size(), 8u);
    std::vector<uint64_t> words;
    for (const auto &f : forms) {
        for (uint32_t a = 0; a < 16; a++) {
            for (uint32_t b = 0; b < 2; b++) {
                uint64_t w = 0;
                for (uint32_t z = 0; z < 16; z++) {
                    uint32_t bit = oracle::quadratic_form(f.m, f.rows, z) ^ (std::popcount(a & z) & 1) ^ b;
                    w = (w << 1) | bit;
                }
                words.push_back(w);
            }
        }
    }
    SupportSet s(GroupParams::make(2, 16), words);
    EXPECT_EQ(s.size(), 256u);
    EXPECT_EQ(oracle::min_distance(2, 16, s.indices()), 6u);
}

TEST(codes, kerdock_parameter_checks) {
    EXPECT_THROW(kerdock_support(2), ParameterError);
    EXPECT_THROW(kerdock_support(5), ParameterError);
    EXPECT_THROW(kerdock_support(8), ParameterError);
    EXPECT_THROW(kerdock_set_galois(10), ParameterError);
}

TEST(codes, reed_muller_first_order) {
    for (uint32_t m = 1; m <= 6; m++) {
        CodeRecord rm = reed_muller_1(m);
        EXPECT_EQ(rm.n, 1u << m);
        EXPECT_EQ(rm.size, uint64_t{2} << m);
        EXPECT_EQ(rm.min_distance, 1u << (m - 1));
        EXPECT_EQ(rm.structure, Structure::Linear);
        EXPECT_TRUE(closed_under_xor(rm.support));
    }
    EXPECT_THROW(reed_muller_1(0), ParameterError);
    EXPECT_THROW(reed_muller_1(7), ParameterError);
}

TEST(codes, linear_baseline_and_separation) {
    CodeRecord lin = linear_baseline_8_3();
    EXPECT_EQ(lin.size, 16u);
    EXPECT_EQ(oracle::min_distance(2, 8, lin.support.indices()), 3u);
    EXPECT_EQ(rank_over_field(lin.support), 4u);
    EXPECT_TRUE(closed_under_xor(lin.support));
    EXPECT_EQ(lin.structure, Structure::Linear);

    CodeRecord julin = julin_class_search();
    EXPECT_EQ(julin.size, 20u);
    EXPECT_EQ(oracle::min_distance(2, 8, julin.support.indices()), 3u);
    EXPECT_EQ(julin.structure, Structure::Nonlinear);
    EXPECT_EQ(julin.provenance, Provenance::Searched);
    EXPECT_GT(julin.size, lin.size);
}

TEST(codes, julin_search_budget) {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    EXPECT_THROW(julin_class_search(tiny), SearchIncompleteError);
}

TEST(codes, structure_classification) {
    GroupParams p = GroupParams::make(2, 8);
    CodeRecord lin = linear_baseline_8_3();
    std::vector<uint64_t> shifted;
    for (uint64_t v : lin.support) {
        shifted.push_back(v ^ 1);
    }
    EXPECT_EQ(classify_structure(SupportSet(p, shifted)), Structure::Affine);
    EXPECT_EQ(classify_structure(SupportSet(p, {0})), Structure::Linear);
    EXPECT_EQ(classify_structure(SupportSet(p, {5})), Structure::Affine);
    EXPECT_EQ(classify_structure(SupportSet(p, {0, 1, 2})), Structure::Nonlinear);

    GroupParams t = GroupParams::make(3, 2);
    EXPECT_EQ(rank_over_field(SupportSet(t, {3, 6})), 1u);
    EXPECT_EQ(rank_over_field(SupportSet(t, {4, 5})), 2u);
    // {0, v, 2v} is a line over F_3; {0, v} is not a subgroup, nor a translate of one.
    EXPECT_EQ(classify_structure(SupportSet(t, {0, 1, 2})), Structure::Linear);
    EXPECT_EQ(classify_structure(SupportSet(t, {0, 1})), Structure::Nonlinear);
    EXPECT_EQ(classify_structure(SupportSet(t, {1, 4, 7})), Structure::Affine);
    EXPECT_EQ(classify_structure(SupportSet(t, {0, 1, 3})), Structure::Nonlinear);
}

TEST(codes, phase_correction_matches_distance_oracle) {
    std::mt19937_64 rng(77);
    for (auto [q, n] : {std::pair{2u, 7u}, {3u, 4u}}) {
        GroupParams p = GroupParams::make(q, n);
        for (int trial = 0; trial < 60; trial++) {
            std::vector<uint64_t> words;
            size_t k = 2 + rng() % 5;
            for (size_t i = 0; i < k; i++) {
                words.push_back(rng() % p.order());
            }
            SupportSet s(p, words);
            if (s.size() < 2) {
                continue;
            }
            uint32_t d = oracle::min_distance(q, n, s.indices());
            for (uint32_t t = 0; t <= 3; t++) {
                EXPECT_EQ(verify_phase_correction(s, t), d >= 2 * t + 1);
            }
        }
    }
}

TEST(codes, catalog) {
    EXPECT_EQ(catalog_code("repetition-5").min_distance, 5u);
    EXPECT_EQ(catalog_code("rm1-3").size, 16u);
    EXPECT_EQ(catalog_code("kerdock-4").size, 256u);
    EXPECT_EQ(catalog_code("linear-8-3").size, 16u);
    EXPECT_THROW(catalog_code("golay"), ParameterError);
    EXPECT_THROW(catalog_code("rm1-x"), ParameterError);
    EXPECT_FALSE(catalog_names().empty());
}

TEST(codes, json_round_trip_and_recomputed_metadata) {
    CodeRecord nr = nordstrom_robinson();
    std::vector<std::string> warnings;
    CodeRecord back = parse_code(code_json(nr), &warnings);
    EXPECT_TRUE(warnings.empty());
    EXPECT_EQ(back.support, nr.support);
    EXPECT_EQ(back.min_distance, 6u);
    EXPECT_EQ(back.provenance, Provenance::Loaded);

    std::string text = code_json(nr);
    auto pos = text.find("\"d\": 6");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 6, "\"d\": 7");
    CodeRecord fixed = parse_code(text, &warnings);
    EXPECT_EQ(fixed.min_distance, 6u);
    ASSERT_EQ(warnings.size(), 1u);

    EXPECT_THROW(parse_code(R"({"q":2,"n":3,"codewords":["000","000"]})"), InputError);
    EXPECT_THROW(parse_code(R"({"q":2,"n":3,"codewords":["00"]})"), InputError);
    EXPECT_THROW(parse_code(R"({"q":2,"codewords":[]})"), InputError);
    EXPECT_THROW(parse_code("not json"), InputError);
    EXPECT_THROW(load_code("/nonexistent/phasecap/code.json"), InputError);
}
