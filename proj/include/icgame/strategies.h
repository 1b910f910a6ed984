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

#ifndef ICGAME_STRATEGIES_H
#define ICGAME_STRATEGIES_H

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "icgame/games.h"
#include "icgame/strategy.h"

namespace icgame {

/// alpha = (x_1 .. x_m); beta_k = alpha_k for k <= m, else 0.
Strategy send_first_m_strategy(int n, int m);

/// alpha = x_i (1-based i); beta_k = alpha for every k.
Strategy send_bit_strategy(int n, int i);

/// alpha uniformly random and independent of x; Bob decodes as in send_first_m.
Strategy random_message_strategy(int n, int m);

/// alpha = majority bit of x (ties send x_1); beta_k = alpha.
Strategy majority_vote_strategy(int n);

/// Probability of success of majority voting, closed form.
double classical_success_formula(int n);
/// Large-n approximation 1/2 (1 + sqrt(2 / (pi n))).
double asymptotic_classical_success(int n);

/// n = 2, m = 1 protocol over one isotropic box of bias E: Alice inputs
/// x1 xor x2 and sends a xor x1; Bob inputs k-1 and outputs b xor alpha.
Strategy chsh_strategy(double bias);

/// n = 2^levels, m = 1 binary tree of 2^levels - 1 isotropic boxes of bias E.
///
/// Each internal node combines the message bits c_L, c_R of its two subtrees
/// (leaves are the bits of x): Alice inputs c_L xor c_R and the node's message
/// is a xor c_L. Alice sends the root message. Bob walks from the root to leaf
/// k, feeding each box the bit of k-1 that selects the subtree and
/// XOR-ing the outputs into the message. Per-index bias is E^levels.
Strategy pyramid_strategy(double bias, int levels);

/// Flattens nested mixtures; weights must be normalized.
Strategy mixture_strategy(std::span<const Strategy> strategies, std::span<const double> weights);

/// Deterministic strategy: alpha = messages[x], beta_k = guesses[alpha][k-1].
Strategy explicit_classical_strategy(int n, int m, std::vector<std::uint32_t> messages,
                                     std::vector<std::vector<int>> guesses);

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 20;

/// Every deterministic (message map, guess map) pair for given (n, m).
class ClassicalStrategySpace {
   public:
    /// Throws kResource if the space holds more than `cap` strategies.
    ClassicalStrategySpace(int n, int m, std::uint64_t cap = kDefaultOracleCap);

    std::uint64_t size() const {
        return message_maps_ * guess_maps_;
    }
    Strategy at(std::uint64_t index) const;

   private:
    int n_;
    int m_;
    std::uint64_t message_maps_;
    std::uint64_t guess_maps_;
};

struct OracleResult {
    std::uint64_t strategies = 0;
    double max_success = 0.0;
    std::string argmax_success;
    double max_information = 0.0;
    std::string argmax_information;
    double max_sum_sq_bias = 0.0;
};

/// Exhaustive search over ClassicalStrategySpace; `visit` (optional) sees every
/// report in enumeration order.
OracleResult run_classical_oracle(const RacGame &game, std::uint64_t cap = kDefaultOracleCap,
                                  const std::function<void(const Strategy &, const GameReport &)> &visit = {});

/// Parses "send-first:m", "send-bit:i", "random-message", "majority",
/// "chsh:E", "pyramid:E:L", "mix:spec1,w1;spec2,w2". E accepts a number or
/// "tsirelson" (1/sqrt 2). Throws kArgument on malformed specs.
Strategy parse_strategy(std::string_view spec, int n, int m);

}  // namespace icgame

#endif
