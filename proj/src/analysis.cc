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

#include "icgame/analysis.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "icgame/errors.h"

namespace icgame {

namespace {

void require_joints(const GameReport &report) {
    if (report.joints.size() != static_cast<std::size_t>(report.n) || report.n < 1) {
        fail(ErrorKind::kReport, "report carries no per-index joints");
    }
}

Verdict classify_upper(double value, double bound) {
    if (std::abs(value - bound) < kVerdictTolerance) {
        return Verdict::kSaturated;
    }
    return value > bound ? Verdict::kViolated : Verdict::kHolds;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kHolds:
            return "holds";
        case Verdict::kSaturated:
            return "saturated";
        case Verdict::kViolated:
            return "violated";
    }
    return "unknown";
}

double IcVerdict::min_chain_slack() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto &s : chain_slacks) {
        m = std::min(m, s.value);
    }
    return m;
}

double ic_quantity(const GameReport &report) {
    require_joints(report);
    double total = 0.0;
    for (int k = 0; k < report.n; ++k) {
        total += mutual_information(report.joints[static_cast<std::size_t>(k)], {x_var(k + 1)},
                                    {std::string(kBetaVar)});
    }
    return total;
}

IcVerdict entropic_chain(const GameReport &report, ChainMode mode) {
    require_joints(report);
    if (!report.classical && mode == ChainMode::kStrict) {
        fail(ErrorKind::kNotApplicable, "entropic chain needs a classical strategy");
    }

    const double lhs = report.entropic_term("sum_k H(x_k|beta_k)");
    const double h_x = report.entropic_term("H(x)");
    const double h_alpha = report.entropic_term("H(alpha)");
    const double rhs = h_x - h_alpha;

    IcVerdict v;
    v.i_value = report.i_value;
    v.m = report.m;
    v.form = "sum_k H(x_k|beta_k) >= H(x) - H(alpha)";
    v.bound = rhs;
    v.endpoint_slack = lhs - rhs;
    v.chain_applicable = report.classical;
    if (std::abs(v.endpoint_slack) < kVerdictTolerance) {
        v.status = Verdict::kSaturated;
    } else {
        v.status = v.endpoint_slack < 0.0 ? Verdict::kViolated : Verdict::kHolds;
    }

    if (!report.classical) {
        v.chain_terms = {{"sum_k H(x_k|beta_k)", lhs}, {"H(x) - H(alpha)", rhs}};
        v.chain_slacks = {{"endpoint", v.endpoint_slack}};
        return v;
    }

    const auto &joint = report.joints.front();
    const std::string alpha(kAlphaVar), shared(kSharedVar);
    const VarSet xs = x_vars(report.n);
    VarSet xs_shared = xs;
    xs_shared.push_back(shared);

    const double h_x_alpha_b = report.entropic_term("H(x,alpha,B)");
    const double line1 = lhs;
    const double line2 = report.entropic_term("sum_k H(x_k|alpha,B)");
    const double line3 = conditional_entropy(joint, xs, {alpha, shared});
    const double line4 = h_x_alpha_b - report.entropic_term("H(alpha,B)");
    const double line5 = h_x_alpha_b - report.entropic_term("H(B)") - h_alpha;
    const double line6 = h_x_alpha_b - report.entropic_term("H(x,B)") + h_x - h_alpha;
    const double line7 = conditional_entropy(joint, {alpha}, xs_shared) + h_x - h_alpha;
    const double line8 = rhs;

    v.chain_terms = {
        {"sum_k H(x_k|beta_k)", line1},
        {"sum_k H(x_k|alpha,B)", line2},
        {"H(x|alpha,B)", line3},
        {"H(x,alpha,B) - H(alpha,B)", line4},
        {"H(x,alpha,B) - H(B) - H(alpha)", line5},
        {"H(x,alpha,B) - H(x,B) + H(x) - H(alpha)", line6},
        {"H(alpha|x,B) + H(x) - H(alpha)", line7},
        {"H(x) - H(alpha)", line8},
    };
    v.chain_slacks = {
        {"data processing", line1 - line2},
        {"iterated conditional subadditivity", line2 - line3},
        {"conditional entropy identity", -std::abs(line3 - line4)},
        {"subadditivity", line4 - line5},
        {"independence of x and B", -std::abs(line5 - line6)},
        {"conditional entropy identity (alpha)", -std::abs(line6 - line7)},
        {"positivity of classical conditional entropy", line7 - line8},
    };
    return v;
}

IcVerdict ic_verdict(const GameReport &report, int m) {
    IcVerdict v = entropic_chain(report);
    v.m = m;
    v.i_value = ic_quantity(report);
    v.message_bound_violated = v.i_value > m + kVerdictTolerance;
    if (!report.inputs_independent) {
        return v;
    }
    const double h_alpha = report.entropic_term("H(alpha)");
    v.form = "I <= H(alpha) <= m";
    v.bound = h_alpha;
    v.status = classify_upper(v.i_value, h_alpha);
    if (v.status != Verdict::kViolated && v.message_bound_violated) {
        v.status = Verdict::kViolated;
    }
    return v;
}

double supplementary_information(const GameReport &report) {
    require_joints(report);
    if (!report.inputs_uniform) {
        fail(ErrorKind::kNotApplicable, "supplementary information is defined for uniform inputs only");
    }
    return 1.0 - ic_quantity(report) / static_cast<double>(report.n);
}

QuadraticIcConsistency quadratic_ic_consistency(const GameReport &report) {
    require_joints(report);
    QuadraticIcConsistency c;
    c.i_value = ic_quantity(report);
    c.second_applicable = true;
    for (int k = 0; k < report.n; ++k) {
        const double e = report.bias_per_k[static_cast<std::size_t>(k)];
        c.scaled_sum_sq_bias += e * e / (2.0 * std::numbers::ln2);
        c.sum_one_minus_h += 1.0 - binary_entropy(std::clamp(report.success_per_k[static_cast<std::size_t>(k)], 0.0, 1.0));
        auto single = report.joints[static_cast<std::size_t>(k)].marginal({x_var(k + 1)});
        c.second_applicable = c.second_applicable && std::abs(single.table()[0] - 0.5) < 1e-12;
    }
    c.first_holds = c.scaled_sum_sq_bias <= c.sum_one_minus_h + kChainTolerance;
    c.second_holds = !c.second_applicable || c.sum_one_minus_h <= c.i_value + kChainTolerance;
    return c;
}

}  // namespace icgame
