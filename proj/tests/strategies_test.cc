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

#include "icgame/strategies.h"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.h"
#include "test_util.h"

namespace icgame {
namespace {

const double kTsirelson = 1.0 / std::numbers::sqrt2;

GameReport play(const Strategy &s, int max_n = kDefaultMaxN) {
    return evaluate_rac(RacGame::uniform(s.n(), s.m()), s, {max_n});
}

TEST(SendFirstM, Examples) {
    auto r = play(send_first_m_strategy(2, 1));
    EXPECT_NEAR(r.success_probability, 0.75, 1e-12);
    EXPECT_NEAR(r.i_value, 1.0, 1e-12);
    for (int n = 1; n <= 4; ++n) {
        r = play(send_first_m_strategy(n, n));
        EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
        EXPECT_NEAR(r.i_value, n, 1e-12);
    }
    r = play(send_first_m_strategy(4, 2));
    EXPECT_NEAR(r.success_probability, 0.75, 1e-12);
    EXPECT_NEAR(r.i_value, 2.0, 1e-12);
}

TEST(SendFirstM, Errors) {
    EXPECT_EQ(kind_of([] { send_first_m_strategy(2, 3); }), ErrorKind::kArgument);
    EXPECT_EQ(kind_of([] { send_first_m_strategy(2, 0); }), ErrorKind::kArgument);
}

TEST(MajorityVote, Examples) {
    EXPECT_NEAR(play(majority_vote_strategy(2)).success_probability, 0.75, 1e-12);
    EXPECT_NEAR(play(majority_vote_strategy(3)).success_probability, 0.75, 1e-12);
    EXPECT_NEAR(play(majority_vote_strategy(5)).success_probability, 0.6875, 1e-12);
}

TEST(ClassicalSuccessFormula, Examples) {
    EXPECT_NEAR(classical_success_formula(1), 1.0, 1e-15);
    EXPECT_NEAR(classical_success_formula(2), 0.75, 1e-15);
    EXPECT_NEAR(classical_success_formula(5), 0.6875, 1e-15);
}

TEST(ClassicalSuccessFormula, MatchesEnumerationAndOracle) {
    for (int n = 1; n <= 8; ++n) {
        const double formula = classical_success_formula(n);
        const double reference =
            0.5 * (1.0 + oracle::binomial(n - 1, (n - 1) / 2) / std::pow(2.0, n - 1));
        EXPECT_NEAR(formula, reference, 1e-14) << n;
        EXPECT_NEAR(play(majority_vote_strategy(n)).success_probability, formula, 1e-12) << n;
    }
}

TEST(ClassicalSuccessFormula, AsymptoticAdvantageAtLargeN) {
    const double exact = classical_success_formula(101) - 0.5;
    const double approx = asymptotic_classical_success(101) - 0.5;
    EXPECT_NEAR(approx, 0.5 * std::sqrt(2.0 / (std::numbers::pi * 101)), 1e-15);
    EXPECT_LT(std::abs(exact - approx) / exact, 0.01);
}

TEST(Chsh, Examples) {
    EXPECT_NEAR(play(chsh_strategy(kTsirelson)).success_probability, (2.0 + std::numbers::sqrt2) / 4.0, 1e-12);
    EXPECT_NEAR(play(chsh_strategy(1.0)).success_probability, 1.0, 1e-12);
    // With E = 0 Bob's output bit is independent of x, so every guess is a coin flip.
    const auto r = play(chsh_strategy(0.0));
    EXPECT_NEAR(r.success_probability, 0.5, 1e-12);
    EXPECT_NEAR(r.i_value, 0.0, 1e-12);
}

TEST(Chsh, BiasIsLinearInBoxBias) {
    for (double e : {0.1, 0.25, 0.5, 0.9}) {
        const auto r = play(chsh_strategy(e));
        EXPECT_NEAR(r.bias_per_k[0], e, 1e-12);
        EXPECT_NEAR(r.bias_per_k[1], e, 1e-12);
    }
}

TEST(Pyramid, PerIndexBiasIsPowerOfBoxBias) {
    for (int levels = 1; levels <= 3; ++levels) {
        for (double e : {0.0, 0.3, kTsirelson, 1.0}) {
            const auto r = play(pyramid_strategy(e, levels));
            for (double ek : r.bias_per_k.values) {
                ASSERT_NEAR(ek, std::pow(e, levels), 1e-9) << "L=" << levels << " E=" << e;
            }
        }
    }
}

TEST(Pyramid, TsirelsonPointReachesQuantumOptimum) {
    for (int levels = 1; levels <= 3; ++levels) {
        const int n = 1 << levels;
        const auto r = play(pyramid_strategy(kTsirelson, levels));
        EXPECT_NEAR(r.success_probability, 0.5 * (1.0 + 1.0 / std::sqrt(n)), 1e-12);
        EXPECT_NEAR(r.bias_per_k.sum_of_squares(), 1.0, 1e-12);
    }
    EXPECT_NEAR(play(pyramid_strategy(kTsirelson, 3)).bias_per_k[0], std::pow(2.0, -1.5), 1e-12);
}

TEST(Pyramid, PrBoxesGivePerfectSuccess) {
    for (int levels = 1; levels <= 3; ++levels) {
        const auto r = play(pyramid_strategy(1.0, levels));
        EXPECT_NEAR(r.success_probability, 1.0, 1e-12);
        EXPECT_NEAR(r.i_value, 1 << levels, 1e-12);
    }
}

TEST(Pyramid, Errors) {
    EXPECT_EQ(kind_of([] { pyramid_strategy(0.5, 0); }), ErrorKind::kArgument);
    EXPECT_EQ(kind_of([] { pyramid_strategy(0.5, 5); }), ErrorKind::kArgument);
    EXPECT_EQ(kind_of([] { parse_strategy("pyramid:1:2", 3, 1); }), ErrorKind::kArgument);
    EXPECT_EQ(kind_of([] { pyramid_strategy(1.5, 2); }), ErrorKind::kDomain);
}

TEST(ClassicalOracle, TwoBitsOneMessageBit) {
    const auto result = run_classical_oracle(RacGame::uniform(2, 1));
    EXPECT_EQ(result.strategies, 256u);
    EXPECT_NEAR(result.max_success, 0.75, 1e-12);
    EXPECT_NEAR(result.max_information, 1.0, 1e-12);
}

TEST(ClassicalOracle, ThreeBitsOneMessageBit) {
    std::uint64_t visited = 0;
    const auto result = run_classical_oracle(RacGame::uniform(3, 1), kDefaultOracleCap,
                                             [&](const Strategy &s, const GameReport &r) {
                                                 ++visited;
                                                 EXPECT_TRUE(s.classical());
                                                 EXPECT_LE(r.i_value, 1.0 + 1e-9);
                                             });
    EXPECT_EQ(result.strategies, visited);
    EXPECT_EQ(visited, 256u * 64u);
    EXPECT_NEAR(result.max_success, 0.75, 1e-12);
    EXPECT_NEAR(result.max_information, 1.0, 1e-12);
}

TEST(ClassicalOracle, CapIsEnforcedBeforeEnumeration) {
    EXPECT_EQ(kind_of([] { ClassicalStrategySpace(3, 2); }), ErrorKind::kResource);
    EXPECT_EQ(kind_of([] { run_classical_oracle(RacGame::uniform(2, 1), 255); }), ErrorKind::kResource);
    EXPECT_EQ(ClassicalStrategySpace(2, 1).size(), 256u);
}

TEST(ExplicitClassical, ReproducesSendFirst) {
    // alpha = x1, beta_1 = alpha, beta_2 = 0.
    const auto s = explicit_classical_strategy(2, 1, {0, 0, 1, 1}, {{0, 0}, {1, 0}});
    const auto a = play(s);
    const auto b = play(send_first_m_strategy(2, 1));
    EXPECT_NEAR(a.success_probability, b.success_probability, 1e-15);
    EXPECT_NEAR(a.i_value, b.i_value, 1e-15);
    EXPECT_TRUE(s.classical());
}

TEST(ExplicitClassical, RejectsBadMaps) {
    EXPECT_EQ(kind_of([] { explicit_classical_strategy(2, 1, {0, 0, 1}, {{0, 0}, {1, 0}}); }), ErrorKind::kShape);
    EXPECT_EQ(kind_of([] { explicit_classical_strategy(2, 1, {0, 0, 2, 1}, {{0, 0}, {1, 0}}); }), ErrorKind::kArgument);
    EXPECT_EQ(kind_of([] { explicit_classical_strategy(2, 1, {0, 0, 1, 1}, {{0, 2}, {1, 0}}); }), ErrorKind::kArgument);
}

TEST(Mixture, HalfAndHalfSendBits) {
    const auto s = parse_strategy("mix:send-bit:1,0.5;send-bit:2,0.5", 2, 1);
    const auto r = play(s);
    EXPECT_NEAR(r.success_probability, 0.75, 1e-12);
    EXPECT_NEAR(r.i_value, 0.377443, 1e-6);
    EXPECT_EQ(s.kind(), StrategyKind::kMixture);
}

TEST(Mixture, NoiseTradesSuccessForInformation) {
    const auto noisy = play(parse_strategy("mix:send-bit:1,0.9;random-message,0.1", 2, 1));
    const auto mixed = play(parse_strategy("mix:send-bit:1,0.5;send-bit:2,0.5", 2, 1));
    EXPECT_GT(noisy.i_value, mixed.i_value);
    EXPECT_LT(noisy.i_value, 1.0);
    EXPECT_LT(noisy.success_probability, mixed.success_probability);
    EXPECT_NEAR(noisy.success_probability, 0.725, 1e-12);
    EXPECT_NEAR(noisy.i_value, 1.0 - oracle::h2(0.95), 1e-12);
}

TEST(Mixture, FlattensNestedMixtures) {
    const auto inner = parse_strategy("mix:send-bit:1,0.5;send-bit:2,0.5", 2, 1);
    const std::vector<Strategy> parts{inner, send_first_m_strategy(2, 1)};
    const std::vector<double> w{0.5, 0.5};
    const auto flat = mixture_strategy(parts, w);
    EXPECT_EQ(flat.components().size(), 3u);
    EXPECT_NEAR(flat.weights()[0], 0.25, 1e-15);
    EXPECT_NEAR(flat.weights()[2], 0.5, 1e-15);
}

TEST(Mixture, Errors) {
    const std::vector<Strategy> parts{send_first_m_strategy(2, 1), majority_vote_strategy(3)};
    const std::vector<double> w{0.5, 0.5};
    EXPECT_EQ(kind_of([&] { mixture_strategy(parts, w); }), ErrorKind::kArgument);
    const std::vector<Strategy> same{send_first_m_strategy(2, 1), send_first_m_strategy(2, 1)};
    const std::vector<double> bad{0.5, 0.6};
    EXPECT_EQ(kind_of([&] { mixture_strategy(same, bad); }), ErrorKind::kArgument);
}

TEST(ParseStrategy, AcceptedForms) {
    EXPECT_EQ(parse_strategy("send-first:1", 3, 1).kind(), StrategyKind::kSendFirstM);
    EXPECT_EQ(parse_strategy("send-bit:2", 3, 1).kind(), StrategyKind::kSendBit);
    EXPECT_EQ(parse_strategy("random-message", 3, 2).kind(), StrategyKind::kRandomMessage);
    EXPECT_EQ(parse_strategy("majority", 3, 1).kind(), StrategyKind::kMajorityVote);
    EXPECT_EQ(parse_strategy("chsh:tsirelson", 2, 1).kind(), StrategyKind::kChsh);
    EXPECT_EQ(parse_strategy("pyramid:0.5:2", 4, 1).kind(), StrategyKind::kPyramid);
    EXPECT_NEAR(play(parse_strategy("chsh:0.70710678", 2, 1)).success_probability, 0.853553, 1e-6);
}

TEST(ParseStrategy, RejectsMalformedSpecs) {
    for (const char *spec : {"", "bogus", "chsh", "chsh:abc", "chsh:0.5x", "pyramid:0.5", "send-first:",
                             "send-first:2", "majority:1", "mix:majority", "mix:majority,0.5;send-bit:9,0.5"}) {
        EXPECT_EQ(kind_of([&] { parse_strategy(spec, 2, 1); }), ErrorKind::kArgument) << spec;
    }
    EXPECT_EQ(kind_of([] { parse_strategy("chsh:2", 2, 1); }), ErrorKind::kDomain);
}

}  // namespace
}  // namespace icgame
