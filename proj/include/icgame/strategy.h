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

#ifndef ICGAME_STRATEGY_H
#define ICGAME_STRATEGY_H

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "icgame/bitstring.h"
#include "icgame/boxes.h"

namespace icgame {

/// Bob feeds `input` into box number `box`.
struct BobQuery {
    int box = 0;
    int input = 0;
};

/// One pure way of playing the RAC game: a list of shared boxes plus the
/// local rules of each party.
///
/// Alice uses the boxes in index order; her input to box j may depend on x
/// and on her outputs from boxes 0..j-1. Her m-bit message is a function of x
/// and all her outputs. Bob's box inputs depend only on his index k, and his
/// guess on (k, message, his box outputs in query order). Bob's k is 0-based
/// here.
struct Protocol {
    int n = 0;
    int m = 0;
    std::vector<NoSignallingBox> boxes;
    std::function<int(BitString x, std::span<const int> earlier_outputs, int box)> alice_input;
    std::function<std::uint32_t(BitString x, std::span<const int> alice_outputs)> message;
    std::vector<std::vector<BobQuery>> bob_queries;
    std::function<int(int k, std::uint32_t message, std::span<const int> bob_outputs)> guess;

    /// No boxes, or only deterministic (hence local) ones.
    bool classical() const;
};

enum class StrategyKind {
    kSendFirstM,
    kSendBit,
    kRandomMessage,
    kMajorityVote,
    kChsh,
    kPyramid,
    kTransferredBox,
    kMixture,
    kExplicitClassical,
};

/// A complete playing recipe: a convex combination of protocols selected by
/// shared randomness B. Pure strategies have a single component of weight 1.
class Strategy {
   public:
    Strategy(StrategyKind kind, std::string label, std::vector<Protocol> components, std::vector<double> weights);

    StrategyKind kind() const {
        return kind_;
    }
    const std::string &label() const {
        return label_;
    }
    int n() const {
        return components_.front().n;
    }
    int m() const {
        return components_.front().m;
    }
    const std::vector<Protocol> &components() const {
        return components_;
    }
    const std::vector<double> &weights() const {
        return weights_;
    }
    bool classical() const;

   private:
    StrategyKind kind_;
    std::string label_;
    std::vector<Protocol> components_;
    std::vector<double> weights_;
};

}  // namespace icgame

#endif
