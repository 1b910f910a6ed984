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

#ifndef ICGAME_PROBCORE_H
#define ICGAME_PROBCORE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace icgame {

/// Entries must sum to one within this absolute tolerance.
inline constexpr double kNormalizationTolerance = 1e-9;

struct Variable {
    std::string name;
    int cardinality = 0;

    friend bool operator==(const Variable &, const Variable &) = default;
};

using VarSet = std::vector<std::string>;

/// Dense probability table over an ordered tuple of named finite variables.
///
/// The table is row-major over the declared variable order, so the last
/// variable varies fastest. Instances are immutable once constructed and are
/// validated on construction (non-negative, normalized, correct length).
class JointDistribution {
   public:
    JointDistribution(std::vector<Variable> variables, std::vector<double> table);

    /// Product of independent uniform variables.
    static JointDistribution uniform(std::vector<Variable> variables);

    const std::vector<Variable> &variables() const {
        return variables_;
    }
    std::span<const double> table() const {
        return table_;
    }
    std::size_t size() const {
        return table_.size();
    }

    bool has_variable(std::string_view name) const;
    /// Position of `name` in the variable order; throws ErrorKind::kName.
    std::size_t position(std::string_view name) const;
    int cardinality(std::string_view name) const;

    /// Probability of a full assignment given in declared variable order.
    double at(std::span<const int> values) const;

    /// Marginal onto `names`, with variables in the order given.
    JointDistribution marginal(const VarSet &names) const;

    /// Decodes a flat index into per-variable values (declared order).
    std::vector<int> decode(std::size_t flat) const;
    std::size_t encode(std::span<const int> values) const;

   private:
    std::vector<Variable> variables_;
    std::vector<double> table_;
};

/// Shannon entropy in bits of a probability vector, with 0 log 0 = 0.
double entropy_of(std::span<const double> probabilities);

double shannon_entropy(const JointDistribution &dist, const VarSet &vars);

/// h(p) = -p log2 p - (1-p) log2 (1-p); throws kDomain outside [0, 1].
double binary_entropy(double p);

/// H(X|Y) = H(XY) - H(Y). An empty Y gives H(X).
double conditional_entropy(const JointDistribution &dist, const VarSet &vars_x, const VarSet &vars_y);

/// I(X:Y) = H(X) + H(Y) - H(XY).
double mutual_information(const JointDistribution &dist, const VarSet &vars_x, const VarSet &vars_y);

struct InequalitySlack {
    std::string name;
    double slack = 0.0;
};

struct EntropySuiteReport {
    std::vector<InequalitySlack> slacks;

    double min_slack() const;
    /// Slack by name; throws kName if absent.
    double slack(std::string_view name) const;
};

/// Slacks (lhs - rhs, must be >= 0 classically) for
///   subadditivity            H(X) + H(Y) - H(XY)
///   strong_subadditivity     H(XY) + H(YZ) - H(XYZ) - H(Y)
///   iterated_subadditivity   sum_i H(X_i|Y) - H(X|Y), X_i the variables of X
///   conditional_positivity   H(X|Y)
EntropySuiteReport entropy_inequality_suite(
    const JointDistribution &dist, const VarSet &x, const VarSet &y, const VarSet &z);

/// Column-stochastic matrix: `columns[i]` is the output distribution for input i.
using StochasticMatrix = std::vector<std::vector<double>>;

/// Pushes `var` through the channel; the variable keeps its name and position
/// but takes the channel's output cardinality.
JointDistribution apply_channel(const JointDistribution &dist, std::string_view var, const StochasticMatrix &columns);

/// Random joint with i.i.d. uniform entries, normalized. Deterministic in `seed`.
JointDistribution random_joint(std::vector<Variable> variables, std::uint64_t seed);

/// Random column-stochastic matrix with `inputs` columns of length `outputs`.
StochasticMatrix random_channel(int inputs, int outputs, std::uint64_t seed);

/// Runs the inequality suite on `trials` seeded random joints over (X1, X2, Y, Z)
/// with cardinalities in {2, 3}, X = {X1, X2}. Besides the suite entries it
/// checks the chain rule I(X:YZ) - I(X:Z) = I(XZ:Y) - I(Z:Y) (slack -|diff|)
/// and data processing I(X:Y) - I(X:Y') with Y' the output of a random channel
/// on Y. Each entry holds the minimum slack over all trials.
EntropySuiteReport entropy_sweep(int trials, std::uint64_t seed);

}  // namespace icgame

#endif
