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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "icgame/errors.h"
#include "icgame/probcore.h"

namespace icgame {

namespace {

constexpr double kFeasibilityTolerance = 1e-9;

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

BoundStatus classify(double lhs, double rhs) {
    if (std::abs(lhs - rhs) < kSaturationTolerance) {
        return BoundStatus::kSaturated;
    }
    return lhs > rhs ? BoundStatus::kViolated : BoundStatus::kPass;
}

}  // namespace

std::vector<std::vector<double>> GramSystem::correlators() const {
    std::vector<std::vector<double>> out(u_vectors.size(), std::vector<double>(v_vectors.size()));
    for (std::size_t x = 0; x < u_vectors.size(); ++x) {
        const BitString xs(n, static_cast<std::uint32_t>(x));
        for (std::size_t y = 0; y < v_vectors.size(); ++y) {
            const double sign = xs.dot(bob_inputs[y]) ? -1.0 : 1.0;
            out[x][y] = sign * dot(u_vectors[x], v_vectors[y]);
        }
    }
    return out;
}

double GramSystem::max_u_norm() const {
    double m = 0.0;
    for (const auto &u : u_vectors) {
        m = std::max(m, std::sqrt(dot(u, u)));
    }
    return m;
}

GramSystem gram_construct(const BiasVector &targets, int n, std::span<const BitString> bob_inputs) {
    if (n < 1 || n > 16) {
        fail(ErrorKind::kArgument, "Gram construction needs 1 <= n <= 16");
    }
    if (bob_inputs.empty() || targets.size() != bob_inputs.size()) {
        fail(ErrorKind::kArgument, "need one target bias per Bob input");
    }
    for (const auto &y : bob_inputs) {
        if (y.length() != n) {
            fail(ErrorKind::kArgument, "Bob input has the wrong length");
        }
    }
    targets.validate();
    const double norm_sq = targets.sum_of_squares();
    if (norm_sq > 1.0 + kFeasibilityTolerance) {
        fail(ErrorKind::kInfeasible, "target biases have sum of squares " + std::to_string(norm_sq) + " > 1");
    }

    GramSystem sys;
    sys.n = n;
    sys.bob_inputs.assign(bob_inputs.begin(), bob_inputs.end());
    sys.target_biases = targets;
    const std::size_t dim = bob_inputs.size();
    sys.v_vectors.assign(dim, std::vector<double>(dim, 0.0));
    for (std::size_t y = 0; y < dim; ++y) {
        sys.v_vectors[y][y] = 1.0;
    }
    const std::size_t x_count = std::size_t{1} << n;
    sys.u_vectors.assign(x_count, std::vector<double>(dim, 0.0));
    for (std::size_t x = 0; x < x_count; ++x) {
        const BitString xs(n, static_cast<std::uint32_t>(x));
        for (std::size_t y = 0; y < dim; ++y) {
            sys.u_vectors[x][y] = (xs.dot(bob_inputs[y]) ? -1.0 : 1.0) * targets[y];
        }
    }
    return sys;
}

NoSignallingBox gram_to_box(const GramSystem &system) {
    const auto corr = system.correlators();
    const int x_count = static_cast<int>(system.u_vectors.size());
    const int y_count = static_cast<int>(system.v_vectors.size());
    std::vector<NoSignallingBox::Slice> table;
    table.reserve(static_cast<std::size_t>(x_count) * static_cast<std::size_t>(y_count));
    for (int x = 0; x < x_count; ++x) {
        const BitString xs(system.n, static_cast<std::uint32_t>(x));
        for (int y = 0; y < y_count; ++y) {
            double e = corr[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (!(std::abs(e) <= 1.0 + kFeasibilityTolerance)) {
                fail(ErrorKind::kConstruction, "correlator " + std::to_string(e) + " outside [-1, 1]");
            }
            e = std::clamp(e, -1.0, 1.0);
            const int target = xs.dot(system.bob_inputs[static_cast<std::size_t>(y)]);
            NoSignallingBox::Slice s{};
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const double sign = ((a ^ b) == target) ? 1.0 : -1.0;
                    s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 0.25 * (1.0 + sign * e);
                }
            }
            table.push_back(s);
        }
    }
    return NoSignallingBox(x_count, y_count, std::move(table), BoxOrigin::kQuantumRealizable);
}

std::string bound_kind_name(BoundKind kind) {
    switch (kind) {
        case BoundKind::kIcEntropic:
            return "ic_entropic";
        case BoundKind::kInnerProduct:
            return "inner_product";
        case BoundKind::kGeneralized:
            return "generalized";
    }
    return "unknown";
}

std::string bound_status_name(BoundStatus status) {
    switch (status) {
        case BoundStatus::kPass:
            return "pass";
        case BoundStatus::kSaturated:
            return "saturated";
        case BoundStatus::kViolated:
            return "violated";
    }
    return "unknown";
}

BoundReport quadratic_bound_check_ic(const BiasVector &biases, int m) {
    biases.validate();
    if (m < 0) {
        fail(ErrorKind::kArgument, "message length must be non-negative");
    }
    BoundReport r{BoundKind::kIcEntropic, biases.sum_of_squares(), 2.0 * m * std::numbers::ln2};
    r.status = classify(r.lhs, r.rhs);
    return r;
}

BoundReport quadratic_bound_check_inner_product(const BiasVector &biases) {
    biases.validate();
    BoundReport r{BoundKind::kInnerProduct, biases.sum_of_squares(), 1.0};
    r.status = classify(r.lhs, r.rhs);
    return r;
}

BoundReport quadratic_bound_check_generalized(const BiasVector &biases, std::span<const double> x_dist) {
    biases.validate();
    if (x_dist.empty() || !std::has_single_bit(x_dist.size())) {
        fail(ErrorKind::kArgument, "x distribution must cover 2^n strings");
    }
    double total = 0.0;
    double sq = 0.0;
    for (double p : x_dist) {
        if (!(p >= 0.0)) {
            fail(ErrorKind::kArgument, "x distribution has a negative entry");
        }
        total += p;
        sq += p * p;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        fail(ErrorKind::kArgument, "x distribution sums to " + std::to_string(total));
    }
    BoundReport r{BoundKind::kGeneralized, biases.sum_of_squares(), static_cast<double>(x_dist.size()) * sq};
    r.status = classify(r.lhs, r.rhs);
    return r;
}

double binary_entropy_bias_inequality(double p) {
    if (!(p >= 0.5 && p <= 1.0)) {
        fail(ErrorKind::kDomain, "success probability " + std::to_string(p) + " outside [1/2, 1]");
    }
    const double bias = 2.0 * p - 1.0;
    return (1.0 - binary_entropy(p)) - bias * bias / (2.0 * std::numbers::ln2);
}

}  // namespace icgame
