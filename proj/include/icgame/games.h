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

#ifndef ICGAME_GAMES_H
#define ICGAME_GAMES_H

#include <string>
#include <string_view>
#include <vector>

#include "icgame/bitstring.h"
#include "icgame/boxes.h"
#include "icgame/probcore.h"
#include "icgame/strategy.h"

namespace icgame {

inline constexpr int kDefaultMaxN = 8;

/// Per-input biases E = 2P - 1. values[i] belongs to Bob's i-th input: k = i+1
/// in the RAC game, bob_inputs[i] in the inner-product game.
struct BiasVector {
    std::vector<double> values;

    std::size_t size() const {
        return values.size();
    }
    double operator[](std::size_t i) const {
        return values[i];
    }
    double sum_of_squares() const;
    /// Throws kDomain if an entry lies outside [-1, 1] beyond rounding.
    void validate() const;
};

/// Alice holds n bits, sends m bits, Bob guesses x_k.
struct RacGame {
    int n = 0;
    int m = 0;
    std::vector<double> input_dist;  // over 2^n strings, index = BitString::value()
    std::vector<double> k_dist;      // over k = 1..n, stored 0-based

    static RacGame uniform(int n, int m);
    void validate() const;
};

struct InnerProductGame {
    int n = 0;
    std::vector<double> x_dist;          // over 2^n strings
    std::vector<BitString> bob_inputs;   // Bob's alphabet
    std::vector<double> y_dist;          // over bob_inputs

    static InnerProductGame uniform(int n);
    void validate() const;
};

struct NamedValue {
    std::string label;
    double value = 0.0;
};

/// Variable names used in RAC report joints.
std::string x_var(int k);  // "x1", ..., 1-based
VarSet x_vars(int n);
inline constexpr std::string_view kAlphaVar = "alpha";
inline constexpr std::string_view kBetaVar = "beta";
inline constexpr std::string_view kSharedVar = "B";

struct GameReport {
    std::string game;  // "rac" or "inner-product"
    std::string strategy;
    int n = 0;
    int m = 0;
    double success_probability = 0.0;
    BiasVector bias_per_k;
    std::vector<double> success_per_k;
    std::vector<double> bob_input_weights;

    // RAC only. joints[k] is over (x1..xn, alpha, beta, B) where beta is
    // Bob's guess for index k+1 and B labels the shared-randomness component.
    std::vector<JointDistribution> joints;
    std::vector<double> info_per_k;  // I_c(x_k : beta_k)
    double i_value = 0.0;
    std::vector<NamedValue> entropic_terms;
    bool classical = false;
    bool inputs_uniform = false;
    bool inputs_independent = false;
    std::string applicable_bound;

    double entropic_term(std::string_view label) const;
};

struct EvaluationOptions {
    int max_n = kDefaultMaxN;
};

/// Exact expectation over x, k and every box outcome.
GameReport evaluate_rac(const RacGame &game, const Strategy &strategy, const EvaluationOptions &options = {});

/// Box Alice alphabet: all 2^n strings. Bob alphabet: either game.bob_inputs in
/// order, or all 2^n strings indexed by value.
GameReport evaluate_inner_product(const InnerProductGame &game, const NoSignallingBox &box);

/// x . y predicate for inner-product boxes whose inputs are n-bit string values.
BoxPredicate inner_product_predicate(int n);

InnerProductGame restrict_to_hamming_weight_one(const InnerProductGame &game);

/// m = 1 RAC strategy: Alice sends a, Bob outputs a xor b. Bob's box input for
/// index k is k-1 when the box has n Bob inputs, or the value of e_k when it
/// has 2^n.
Strategy transfer_nonlocal_to_rac(const NoSignallingBox &box, int n);

}  // namespace icgame

#endif
