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

#include "icgame/probcore.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <set>

#include "icgame/errors.h"

namespace icgame {

namespace {

std::size_t table_length(const std::vector<Variable> &variables) {
    std::size_t length = 1;
    for (const auto &v : variables) {
        if (v.cardinality < 1) {
            fail(ErrorKind::kShape, "variable '" + v.name + "' has non-positive cardinality");
        }
        if (length > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(v.cardinality)) {
            fail(ErrorKind::kResource, "joint distribution table is too large");
        }
        length *= static_cast<std::size_t>(v.cardinality);
    }
    return length;
}

// Row-major strides: the last variable has stride 1.
std::vector<std::size_t> strides_of(const std::vector<Variable> &variables) {
    std::vector<std::size_t> strides(variables.size());
    std::size_t stride = 1;
    for (std::size_t i = variables.size(); i-- > 0;) {
        strides[i] = stride;
        stride *= static_cast<std::size_t>(variables[i].cardinality);
    }
    return strides;
}

void require_disjoint(const VarSet &a, const VarSet &b) {
    for (const auto &name : a) {
        if (std::find(b.begin(), b.end(), name) != b.end()) {
            fail(ErrorKind::kArgument, "variable sets overlap on '" + name + "'");
        }
    }
}

VarSet concat(const VarSet &a, const VarSet &b) {
    VarSet out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

JointDistribution::JointDistribution(std::vector<Variable> variables, std::vector<double> table)
    : variables_(std::move(variables)), table_(std::move(table)) {
    std::set<std::string> seen;
    for (const auto &v : variables_) {
        if (!seen.insert(v.name).second) {
            fail(ErrorKind::kShape, "duplicate variable name '" + v.name + "'");
        }
    }
    if (table_length(variables_) != table_.size()) {
        fail(ErrorKind::kShape,
             "table has " + std::to_string(table_.size()) + " entries, expected " +
                 std::to_string(table_length(variables_)));
    }
    double total = 0.0;
    for (double p : table_) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            fail(ErrorKind::kShape, "probability entries must be finite and non-negative");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        fail(ErrorKind::kShape, "probabilities sum to " + std::to_string(total) + ", not 1");
    }
}

JointDistribution JointDistribution::uniform(std::vector<Variable> variables) {
    std::size_t length = table_length(variables);
    return JointDistribution(std::move(variables), std::vector<double>(length, 1.0 / static_cast<double>(length)));
}

bool JointDistribution::has_variable(std::string_view name) const {
    return std::any_of(variables_.begin(), variables_.end(), [&](const Variable &v) { return v.name == name; });
}

std::size_t JointDistribution::position(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i].name == name) {
            return i;
        }
    }
    fail(ErrorKind::kName, "unknown variable '" + std::string(name) + "'");
}

int JointDistribution::cardinality(std::string_view name) const {
    return variables_[position(name)].cardinality;
}

std::vector<int> JointDistribution::decode(std::size_t flat) const {
    std::vector<int> values(variables_.size());
    for (std::size_t i = variables_.size(); i-- > 0;) {
        auto card = static_cast<std::size_t>(variables_[i].cardinality);
        values[i] = static_cast<int>(flat % card);
        flat /= card;
    }
    return values;
}

std::size_t JointDistribution::encode(std::span<const int> values) const {
    if (values.size() != variables_.size()) {
        fail(ErrorKind::kShape, "assignment length does not match the variable count");
    }
    std::size_t flat = 0;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (values[i] < 0 || values[i] >= variables_[i].cardinality) {
            fail(ErrorKind::kShape, "value out of range for variable '" + variables_[i].name + "'");
        }
        flat = flat * static_cast<std::size_t>(variables_[i].cardinality) + static_cast<std::size_t>(values[i]);
    }
    return flat;
}

double JointDistribution::at(std::span<const int> values) const {
    return table_[encode(values)];
}

JointDistribution JointDistribution::marginal(const VarSet &names) const {
    std::vector<Variable> kept;
    std::vector<std::size_t> positions;
    for (const auto &name : names) {
        std::size_t pos = position(name);
        if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
            fail(ErrorKind::kArgument, "variable '" + name + "' listed twice");
        }
        positions.push_back(pos);
        kept.push_back(variables_[pos]);
    }

    auto source_strides = strides_of(variables_);
    auto target_strides = strides_of(kept);
    std::vector<double> out(table_length(kept), 0.0);
    for (std::size_t flat = 0; flat < table_.size(); ++flat) {
        if (table_[flat] == 0.0) {
            continue;
        }
        std::size_t target = 0;
        for (std::size_t j = 0; j < positions.size(); ++j) {
            auto card = static_cast<std::size_t>(variables_[positions[j]].cardinality);
            target += ((flat / source_strides[positions[j]]) % card) * target_strides[j];
        }
        out[target] += table_[flat];
    }
    return JointDistribution(std::move(kept), std::move(out));
}

double entropy_of(std::span<const double> probabilities) {
    double h = 0.0;
    for (double p : probabilities) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

double shannon_entropy(const JointDistribution &dist, const VarSet &vars) {
    if (vars.empty()) {
        fail(ErrorKind::kArgument, "entropy of an empty variable set");
    }
    return entropy_of(dist.marginal(vars).table());
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        fail(ErrorKind::kDomain, "binary entropy argument " + std::to_string(p) + " outside [0, 1]");
    }
    const double q[2] = {p, 1.0 - p};
    return entropy_of(q);
}

double conditional_entropy(const JointDistribution &dist, const VarSet &vars_x, const VarSet &vars_y) {
    require_disjoint(vars_x, vars_y);
    if (vars_y.empty()) {
        return shannon_entropy(dist, vars_x);
    }
    return shannon_entropy(dist, concat(vars_x, vars_y)) - shannon_entropy(dist, vars_y);
}

double mutual_information(const JointDistribution &dist, const VarSet &vars_x, const VarSet &vars_y) {
    require_disjoint(vars_x, vars_y);
    return shannon_entropy(dist, vars_x) + shannon_entropy(dist, vars_y) - shannon_entropy(dist, concat(vars_x, vars_y));
}

double EntropySuiteReport::min_slack() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto &s : slacks) {
        m = std::min(m, s.slack);
    }
    return m;
}

double EntropySuiteReport::slack(std::string_view name) const {
    for (const auto &s : slacks) {
        if (s.name == name) {
            return s.slack;
        }
    }
    fail(ErrorKind::kName, "no inequality named '" + std::string(name) + "'");
}

EntropySuiteReport entropy_inequality_suite(
    const JointDistribution &dist, const VarSet &x, const VarSet &y, const VarSet &z) {
    if (x.empty() || y.empty() || z.empty()) {
        fail(ErrorKind::kArgument, "entropy suite needs three non-empty variable sets");
    }
    require_disjoint(x, y);
    require_disjoint(x, z);
    require_disjoint(y, z);

    const VarSet xy = concat(x, y);
    const VarSet yz = concat(y, z);
    const VarSet xyz = concat(xy, z);
    const double h_x = shannon_entropy(dist, x);
    const double h_y = shannon_entropy(dist, y);
    const double h_xy = shannon_entropy(dist, xy);
    const double h_yz = shannon_entropy(dist, yz);
    const double h_xyz = shannon_entropy(dist, xyz);
    const double h_x_given_y = h_xy - h_y;

    double sum_single = 0.0;
    for (const auto &name : x) {
        sum_single += conditional_entropy(dist, {name}, y);
    }

    EntropySuiteReport report;
    report.slacks = {
        {"subadditivity", h_x + h_y - h_xy},
        {"strong_subadditivity", h_xy + h_yz - h_xyz - h_y},
        {"iterated_subadditivity", sum_single - h_x_given_y},
        {"conditional_positivity", h_x_given_y},
    };
    return report;
}

JointDistribution apply_channel(const JointDistribution &dist, std::string_view var, const StochasticMatrix &columns) {
    const std::size_t pos = dist.position(var);
    const auto &vars = dist.variables();
    const int in_card = vars[pos].cardinality;
    if (static_cast<int>(columns.size()) != in_card) {
        fail(ErrorKind::kMatrix, "channel has " + std::to_string(columns.size()) + " columns, variable '" +
                                     std::string(var) + "' has cardinality " + std::to_string(in_card));
    }
    const std::size_t out_card = columns.front().size();
    if (out_card == 0) {
        fail(ErrorKind::kMatrix, "channel has no outputs");
    }
    for (const auto &col : columns) {
        if (col.size() != out_card) {
            fail(ErrorKind::kMatrix, "channel columns have different lengths");
        }
        double total = 0.0;
        for (double p : col) {
            if (!(p >= 0.0)) {
                fail(ErrorKind::kMatrix, "channel entries must be non-negative");
            }
            total += p;
        }
        if (std::abs(total - 1.0) > kNormalizationTolerance) {
            fail(ErrorKind::kMatrix, "channel column sums to " + std::to_string(total));
        }
    }

    std::vector<Variable> out_vars = vars;
    out_vars[pos].cardinality = static_cast<int>(out_card);
    auto out_strides = strides_of(out_vars);
    std::vector<double> out(table_length(out_vars), 0.0);
    for (std::size_t flat = 0; flat < dist.size(); ++flat) {
        double p = dist.table()[flat];
        if (p == 0.0) {
            continue;
        }
        auto values = dist.decode(flat);
        const auto &col = columns[static_cast<std::size_t>(values[pos])];
        std::size_t base = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i != pos) {
                base += static_cast<std::size_t>(values[i]) * out_strides[i];
            }
        }
        for (std::size_t o = 0; o < out_card; ++o) {
            out[base + o * out_strides[pos]] += p * col[o];
        }
    }
    return JointDistribution(std::move(out_vars), std::move(out));
}

JointDistribution random_joint(std::vector<Variable> variables, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> table(table_length(variables));
    for (auto &p : table) {
        p = unit(rng);
    }
    double total = std::accumulate(table.begin(), table.end(), 0.0);
    for (auto &p : table) {
        p /= total;
    }
    return JointDistribution(std::move(variables), std::move(table));
}

StochasticMatrix random_channel(int inputs, int outputs, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    StochasticMatrix columns(static_cast<std::size_t>(inputs), std::vector<double>(static_cast<std::size_t>(outputs)));
    for (auto &col : columns) {
        double total = 0.0;
        for (auto &p : col) {
            p = unit(rng);
            total += p;
        }
        for (auto &p : col) {
            p /= total;
        }
    }
    return columns;
}

EntropySuiteReport entropy_sweep(int trials, std::uint64_t seed) {
    if (trials < 1) {
        fail(ErrorKind::kArgument, "entropy sweep needs at least one trial");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> card(2, 3);
    const VarSet x{"X1", "X2"}, y{"Y"}, z{"Z"};
    EntropySuiteReport out;
    auto record = [&out](const std::string &name, double slack) {
        for (auto &s : out.slacks) {
            if (s.name == name) {
                s.slack = std::min(s.slack, slack);
                return;
            }
        }
        out.slacks.push_back({name, slack});
    };
    for (int t = 0; t < trials; ++t) {
        const int cy = card(rng);
        std::vector<Variable> vars{{"X1", card(rng)}, {"X2", card(rng)}, {"Y", cy}, {"Z", card(rng)}};
        const auto dist = random_joint(std::move(vars), rng());
        for (const auto &s : entropy_inequality_suite(dist, x, y, z).slacks) {
            record(s.name, s.slack);
        }
        const VarSet yz{"Y", "Z"}, xz{"X1", "X2", "Z"};
        const double chain = (mutual_information(dist, x, yz) - mutual_information(dist, x, z)) -
                             (mutual_information(dist, xz, y) - mutual_information(dist, z, y));
        record("chain_rule", -std::abs(chain));
        const int outputs = card(rng);
        const std::uint64_t channel_seed = rng();
        const auto processed = apply_channel(dist, "Y", random_channel(cy, outputs, channel_seed));
        record("data_processing", mutual_information(dist, x, y) - mutual_information(processed, x, y));
    }
    return out;
}

}  // namespace icgame
