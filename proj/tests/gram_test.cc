// Copyright 2026 The icgame Authors
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

#include "icgame/gram.h"

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "icgame/strategies.h"
#include "oracles.h"
#include "test_util.h"

namespace icgame {
namespace {

const double kTsirelson = 1.0 / std::numbers::sqrt2;

BiasVector random_feasible(std::mt19937_64 &rng, std::size_t size) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    BiasVector b;
    double norm = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        b.values.push_back(g(rng));
        norm += b.values.back() * b.values.back();
    }
    const double radius = std::sqrt(u(rng)) / std::sqrt(norm);
    for (auto &e : b.values) {
        e *= radius;
    }
    return b;
}

std::vector<double> random_distribution(std::mt19937_64 &rng, std::size_t size) {
    std::exponential_distribution<double> ex(1.0);
    std::vector<double> p(size);
    double total = 0.0;
    for (auto &v : p) {
        v = ex(rng);
        total += v;
    }
    for (auto &v : p) {
        v /= total;
    }
    return p;
}

TEST(GramConstruct, SingleNonzeroTarget) {
    const auto inputs = all_strings(2);
    const auto sys = gram_construct(BiasVector{{1.0, 0.0, 0.0, 0.0}}, 2, inputs);
    for (const auto &u : sys.u_vectors) {
        EXPECT_NEAR(std::abs(u[0]), 1.0, 1e-15);
        for (std::size_t i = 1; i < u.size(); ++i) {
            EXPECT_EQ(u[i], 0.0);
        }
    }
    const auto corr = sys.correlators();
    for (std::size_t x = 0; x < 4; ++x) {
        EXPECT_NEAR(corr[x][0], 1.0, 1e-15);
        for (std::size_t y = 1; y < 4; ++y) {
            EXPECT_NEAR(corr[x][y], 0.0, 1e-15);
        }
    }
}

TEST(GramConstruct, EqualWeightOneBiases) {
    const auto inputs = unit_strings(2);
    const auto sys = gram_construct(BiasVector{{kTsirelson, kTsirelson}}, 2, inputs);
    for (const auto &u : sys.u_vectors) {
        EXPECT_NEAR(std::sqrt(u[0] * u[0] + u[1] * u[1]), 1.0, 1e-15);
    }
    EXPECT_NEAR(sys.max_u_norm(), 1.0, 1e-15);
    for (const auto &row : sys.correlators()) {
        EXPECT_NEAR(row[0], kTsirelson, 1e-15);
        EXPECT_NEAR(row[1], kTsirelson, 1e-15);
    }
}

TEST(GramConstruct, Errors) {
    const auto inputs = unit_strings(2);
    EXPECT_EQ(kind_of([&] { gram_construct(BiasVector{{0.8, 0.8}}, 2, inputs); }), ErrorKind::kInfeasible);
    EXPECT_EQ(kind_of([&] { gram_construct(BiasVector{{0.5}}, 2, inputs); }), ErrorKind::kArgument);
    EXPECT_EQ(kind_of([&] { gram_construct(BiasVector{{1.5, 0.0}}, 2, inputs); }), ErrorKind::kDomain);
    EXPECT_NO_THROW(gram_construct(BiasVector{{0.6, 0.8}}, 2, inputs));
}

TEST(GramToBox, ZeroTargetsGiveUniformNoise) {
    const auto box = gram_to_box(gram_construct(BiasVector{{0.0, 0.0}}, 2, unit_strings(2)));
    for (const auto &s : box.table()) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                EXPECT_DOUBLE_EQ(s[a][b], 0.25);
            }
        }
    }
}

TEST(GramToBox, WeightOneTsirelsonBoxTransfersToChshLevel) {
    const auto box = gram_to_box(gram_construct(BiasVector{{kTsirelson, kTsirelson}}, 2, unit_strings(2)));
    EXPECT_EQ(box.origin(), BoxOrigin::kQuantumRealizable);
    const auto r = evaluate_rac(RacGame::uniform(2, 1), transfer_nonlocal_to_rac(box, 2));
    EXPECT_NEAR(r.success_probability, (2.0 + std::numbers::sqrt2) / 4.0, 1e-12);
}

TEST(GramToBox, FirstUnitTargetOnly) {
    const auto inputs = unit_strings(3);
    const auto box = gram_to_box(gram_construct(BiasVector{{1.0, 0.0, 0.0}}, 3, inputs));
    for (int x = 0; x < 8; ++x) {
        const int target = BitString(3, x).dot(inputs[0]);
        EXPECT_NEAR(box.p(0, target, x, 0), 0.5, 1e-15);
        EXPECT_NEAR(box.p(1, target ^ 1, x, 0), 0.5, 1e-15);
        for (int y = 1; y < 3; ++y) {
            EXPECT_NEAR(box.p(0, 0, x, y), 0.25, 1e-15);
        }
    }
}

TEST(GramToBox, RejectsOutOfRangeCorrelators) {
    GramSystem sys = gram_construct(BiasVector{{0.5, 0.5}}, 2, unit_strings(2));
    sys.u_vectors[3][0] = 3.0;
    EXPECT_EQ(kind_of([&] { gram_to_box(sys); }), ErrorKind::kConstruction);
}

TEST(GramToBox, FourBitUniformTargetsReachQuantumOptimum) {
    const auto box = gram_to_box(gram_construct(BiasVector{{0.5, 0.5, 0.5, 0.5}}, 4, unit_strings(4)));
    const auto r = evaluate_rac(RacGame::uniform(4, 1), transfer_nonlocal_to_rac(box, 4));
    EXPECT_NEAR(r.success_probability, 0.75, 1e-12);
}

// Achieved correlators equal the targets, the vectors stay in the unit ball,
// and every induced box is no-signalling and obeys the quadratic bound for any
// distribution over Bob's inputs.
TEST(GramProperties, RandomFeasibleTargets) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 4;
        const bool weight_one = trial % 2 == 0;
        const auto inputs = weight_one ? unit_strings(n) : all_strings(n);
        const auto targets = random_feasible(rng, inputs.size());
        const auto sys = gram_construct(targets, n, inputs);
        ASSERT_LE(sys.max_u_norm(), 1.0 + 1e-9);
        const auto corr = sys.correlators();
        for (const auto &row : corr) {
            for (std::size_t y = 0; y < inputs.size(); ++y) {
                ASSERT_NEAR(row[y], targets[y], 1e-9);
            }
        }
        const auto box = gram_to_box(sys);
        ASSERT_TRUE(check_no_signalling(box).pass);
        InnerProductGame game = InnerProductGame::uniform(n);
        game.bob_inputs = inputs;
        for (int d = 0; d < 10; ++d) {
            game.y_dist = random_distribution(rng, inputs.size());
            const auto r = evaluate_inner_product(game, box);
            ASSERT_LE(r.bias_per_k.sum_of_squares(), 1.0 + 1e-9);
            double reference = 0.0;
            for (std::size_t y = 0; y < inputs.size(); ++y) {
                reference += game.y_dist[y] * (1.0 + r.bias_per_k[y]) / 2.0;
            }
            ASSERT_NEAR(r.success_probability, reference, 1e-12);
        }
    }
}

TEST(BoundChecks, Examples) {
    const BiasVector tsirelson{{kTsirelson, kTsirelson}};
    const BiasVector pr{{1.0, 1.0}};
    const auto saturated = quadratic_bound_check_inner_product(tsirelson);
    EXPECT_NEAR(saturated.lhs, 1.0, 1e-15);
    EXPECT_EQ(saturated.status, BoundStatus::kSaturated);
    const auto violated = quadratic_bound_check_inner_product(pr);
    EXPECT_DOUBLE_EQ(violated.lhs, 2.0);
    EXPECT_EQ(violated.status, BoundStatus::kViolated);
    const auto ic = quadratic_bound_check_ic(tsirelson, 1);
    EXPECT_NEAR(ic.rhs, 1.386294361119891, 1e-12);
    EXPECT_EQ(ic.status, BoundStatus::kPass);
    EXPECT_EQ(quadratic_bound_check_inner_product(BiasVector{{0.5}}).status, BoundStatus::kPass);
}

TEST(BoundChecks, GeneralizedRhs) {
    const BiasVector b{{0.5, 0.5}};
    const std::vector<double> uniform(8, 0.125);
    EXPECT_NEAR(quadratic_bound_check_generalized(b, uniform).rhs, 1.0, 1e-15);
    const std::vector<double> point{1.0, 0.0, 0.0, 0.0};
    EXPECT_NEAR(quadratic_bound_check_generalized(b, point).rhs, 4.0, 1e-15);
    const std::vector<double> three{0.5, 0.25, 0.25};
    EXPECT_EQ(kind_of([&] { quadratic_bound_check_generalized(b, three); }), ErrorKind::kArgument);
    const std::vector<double> unnormalized{0.5, 0.6};
    EXPECT_EQ(kind_of([&] { quadratic_bound_check_generalized(b, unnormalized); }), ErrorKind::kArgument);
    EXPECT_EQ(kind_of([] { quadratic_bound_check_ic(BiasVector{{1.2}}, 1); }), ErrorKind::kDomain);
}

// With p(x) arbitrary the y-averaged biases of any Gram box stay below 2^n sum p(x)^2.
TEST(BoundChecks, GeneralizedBoundHoldsForGramBoxes) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 3;
        InnerProductGame game = InnerProductGame::uniform(n);
        const auto targets = random_feasible(rng, game.bob_inputs.size());
        const auto box = gram_to_box(gram_construct(targets, n, game.bob_inputs));
        game.x_dist = random_distribution(rng, std::size_t{1} << n);
        const auto r = evaluate_inner_product(game, box);
        ASSERT_NE(quadratic_bound_check_generalized(r.bias_per_k, game.x_dist).status, BoundStatus::kViolated);
    }
}

TEST(BinaryEntropyBiasInequality, Examples) {
    EXPECT_NEAR(binary_entropy_bias_inequality(0.5), 0.0, 1e-15);
    EXPECT_NEAR(binary_entropy_bias_inequality(1.0), 1.0 - 1.0 / (2.0 * std::numbers::ln2), 1e-15);
    EXPECT_NEAR(binary_entropy_bias_inequality(1.0), 0.278652, 1e-6);
    EXPECT_EQ(kind_of([] { binary_entropy_bias_inequality(0.4); }), ErrorKind::kDomain);
    EXPECT_EQ(kind_of([] { binary_entropy_bias_inequality(1.01); }), ErrorKind::kDomain);
}

TEST(BinaryEntropyBiasInequality, SweepIsNonNegative) {
    for (int i = 0; i < 1000; ++i) {
        const double p = 0.5 + 0.5 * i / 999.0;
        const double e = 2 * p - 1;
        const double slack = binary_entropy_bias_inequality(p);
        ASSERT_GE(slack, 0.0) << p;
        ASSERT_NEAR(slack, (1.0 - oracle::h2(p)) - e * e / (2.0 * std::numbers::ln2), 1e-14);
    }
}

}  // namespace
}  // namespace icgame
