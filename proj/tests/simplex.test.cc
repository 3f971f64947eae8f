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

#include "phasecap/simplex.h"

#include <gtest/gtest.h>

#include <random>

#include "phasecap/errors.h"

using namespace phasecap;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Best basic feasible solution by trying every basis.
double vertex_enumeration(const MatrixXd &a, const VectorXd &b, const VectorXd &c) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> pick(m);
    std::function<void(int, int)> go = [&](int start, int k) {
        if (k == m) {
            MatrixXd basis(m, m);
            for (int i = 0; i < m; i++) {
                basis.col(i) = a.col(pick[i]);
            }
            Eigen::FullPivLU<MatrixXd> lu(basis);
            if (lu.rank() < m) {
                return;
            }
            VectorXd xb = lu.solve(b);
            if (xb.minCoeff() < -1e-9) {
                return;
            }
            double obj = 0;
            for (int i = 0; i < m; i++) {
                obj += c(pick[i]) * xb(i);
            }
            best = std::min(best, obj);
            return;
        }
        for (int j = start; j < n; j++) {
            pick[k] = j;
            go(j + 1, k + 1);
        }
    };
    go(0, 0);
    return best;
}

}  // namespace

TEST(simplex, small_lp) {
    MatrixXd a(2, 4);
    a << 1, 2, 1, 0, 3, 1, 0, 1;
    VectorXd b(2);
    b << 4, 6;
    VectorXd c(4);
    c << -1, -1, 0, 0;
    auto r = simplex_minimize(a, b, c, {2, 3});
    ASSERT_EQ(r.status, SimplexResult::Status::Optimal);
    EXPECT_NEAR(r.objective, -2.8, 1e-12);
    EXPECT_NEAR(r.x(0), 1.6, 1e-12);
    EXPECT_NEAR(r.x(1), 1.2, 1e-12);
    // Strong duality: b . pi equals the optimum.
    EXPECT_NEAR(b.dot(r.duals), r.objective, 1e-12);
}

TEST(simplex, unbounded) {
    MatrixXd a(1, 3);
    a << 1, -1, 1;
    VectorXd b(1);
    b << 1;
    VectorXd c(3);
    c << 0, -1, 0;
    EXPECT_EQ(simplex_minimize(a, b, c, {2}).status, SimplexResult::Status::Unbounded);
}

// Beale's example cycles forever under the plain largest-coefficient rule.
TEST(simplex, beale_cycling_example) {
    MatrixXd a(3, 7);
    a << 1, 0, 0, 0.25, -8, -1, 9, 0, 1, 0, 0.5, -12, -0.5, 3, 0, 0, 1, 0, 0, 1, 0;
    VectorXd b(3);
    b << 0, 0, 1;
    VectorXd c(7);
    c << 0, 0, 0, -0.75, 20, -0.5, 6;
    SimplexOptions opt;
    opt.stall_limit = 10;
    auto r = simplex_minimize(a, b, c, {0, 1, 2}, opt);
    ASSERT_EQ(r.status, SimplexResult::Status::Optimal);
    EXPECT_NEAR(r.objective, -1.25, 1e-12);
}

TEST(simplex, random_lps_match_vertex_enumeration) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; trial++) {
        const int m = 3;
        const int k = 4;
        MatrixXd a(m, k + m);
        a.setZero();
        for (int i = 0; i < m; i++) {
            for (int j = 0; j < k; j++) {
                a(i, j) = u(rng);
            }
            a(i, k + i) = 1;
        }
        VectorXd b(m);
        for (int i = 0; i < m; i++) {
            b(i) = 0.5 + std::abs(u(rng));
        }
        VectorXd c = VectorXd::Zero(k + m);
        for (int j = 0; j < k; j++) {
            c(j) = u(rng);
        }
        auto r = simplex_minimize(a, b, c, {k, k + 1, k + 2});
        if (r.status == SimplexResult::Status::Unbounded) {
            continue;
        }
        ASSERT_EQ(r.status, SimplexResult::Status::Optimal);
        EXPECT_NEAR(r.objective, vertex_enumeration(a, b, c), 1e-9);
        EXPECT_LE((a * r.x - b).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_GE(r.x.minCoeff(), -1e-12);
        EXPECT_NEAR(b.dot(r.duals), r.objective, 1e-9);
    }
}

TEST(simplex, rejects_bad_start) {
    MatrixXd a(1, 2);
    a << 1, 1;
    VectorXd b(1);
    b << -1;
    VectorXd c(2);
    c << 1, 1;
    EXPECT_ANY_THROW(simplex_minimize(a, b, c, {1}));
    b << 1;
    EXPECT_ANY_THROW(simplex_minimize(a, b, c, {3}));
}
