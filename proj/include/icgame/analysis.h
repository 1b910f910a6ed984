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

#ifndef ICGAME_ANALYSIS_H
#define ICGAME_ANALYSIS_H

#include <string>
#include <vector>

#include "icgame/games.h"

namespace icgame {

inline constexpr double kVerdictTolerance = 1e-6;
inline constexpr double kChainTolerance = 1e-9;

enum class Verdict { kHolds, kSaturated, kViolated };

std::string verdict_name(Verdict v);

/// Outcome of checking a RAC report against information causality.
///
/// chain_terms are the successive lines of the entropic derivation
///   sum_k H(x_k|beta_k) >= sum_k H(x_k|alpha,B) >= H(x|alpha,B)
///     = H(x,alpha,B) - H(alpha,B) >= H(x,alpha,B) - H(B) - H(alpha)
///     = H(x,alpha,B) - H(x,B) + H(x) - H(alpha)
///     = H(alpha|x,B) + H(x) - H(alpha) >= H(x) - H(alpha)
/// and chain_slacks one entry per step (lhs - rhs for inequalities, -|lhs - rhs|
/// for identities). When the strategy uses non-classical boxes only the two
/// endpoints are observable, so chain_terms holds just those.
struct IcVerdict {
    double i_value = 0.0;
    int m = 0;
    std::string form;
    double bound = 0.0;
    Verdict status = Verdict::kHolds;
    bool message_bound_violated = false;  // I > m beyond tolerance
    bool chain_applicable = false;
    std::vector<NamedValue> chain_terms;
    std::vector<NamedValue> chain_slacks;
    double endpoint_slack = 0.0;  // sum_k H(x_k|beta_k) - (H(x) - H(alpha))

    double min_chain_slack() const;
};

/// sum_k I_c(x_k : beta_k) recomputed from the report joints; kReport if absent.
double ic_quantity(const GameReport &report);

enum class ChainMode {
    kEndpointFallback,  // non-classical strategies report endpoints only
    kStrict,            // non-classical strategies throw kNotApplicable
};

IcVerdict entropic_chain(const GameReport &report, ChainMode mode = ChainMode::kEndpointFallback);

/// With independent inputs: I <= H_c(alpha) <= m. Otherwise falls back to the
/// endpoint inequality of the general chain.
IcVerdict ic_verdict(const GameReport &report, int m);

/// 1 - I/n bits per round; kNotApplicable unless x is uniform.
double supplementary_information(const GameReport &report);

/// sum_k E_k^2 / (2 ln 2) <= sum_k (1 - h(P_k)) <= I. The second inequality is
/// asserted only when every x_k is a uniform bit.
struct QuadraticIcConsistency {
    double scaled_sum_sq_bias = 0.0;
    double sum_one_minus_h = 0.0;
    double i_value = 0.0;
    bool first_holds = false;
    bool second_applicable = false;
    bool second_holds = false;
};

QuadraticIcConsistency quadratic_ic_consistency(const GameReport &report);

}  // namespace icgame

#endif
