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

#ifndef ICGAME_GRAM_H
#define ICGAME_GRAM_H

#include <span>
#include <string>
#include <vector>

#include "icgame/bitstring.h"
#include "icgame/boxes.h"
#include "icgame/games.h"

namespace icgame {

inline constexpr double kSaturationTolerance = 1e-6;

/// Real vectors u_x (one per n-bit string x) and v_y (one per Bob input)
/// whose signed inner products (-1)^{x.y} u_x . v_y are the correlators of an
/// inner-product strategy. By Tsirelson's theorem any such unit-bounded family
/// is quantum-realizable.
struct GramSystem {
    int n = 0;
    std::vector<BitString> bob_inputs;
    std::vector<std::vector<double>> u_vectors;  // [x][coordinate]
    std::vector<std::vector<double>> v_vectors;  // [y][coordinate]
    BiasVector target_biases;

    std::size_t dimension() const {
        return bob_inputs.size();
    }
    /// E_xy = (-1)^{x . y} u_x . v_y, indexed [x][y].
    std::vector<std::vector<double>> correlators() const;
    double max_u_norm() const;
};

/// u_x = sum_y (-1)^{x.y} E_y e_y, v_y = e_y, in a space with one axis per Bob
/// input. Throws kInfeasible when sum E_y^2 > 1 (+1e-9).
GramSystem gram_construct(const BiasVector &targets, int n, std::span<const BitString> bob_inputs);

/// Uniform-marginal box with P(a,b|x,y) = (1 + (-1)^{a xor b xor x.y} E_xy) / 4.
/// Bob input j is bob_inputs[j]. Throws kConstruction if some |E_xy| > 1.
NoSignallingBox gram_to_box(const GramSystem &system);

enum class BoundKind {
    kIcEntropic,     // sum E_k^2 <= 2 m ln 2
    kInnerProduct,   // sum E_y^2 <= 1
    kGeneralized,    // sum E_y^2 <= 2^n sum_x p(x)^2
};

enum class BoundStatus { kPass, kSaturated, kViolated };

std::string bound_kind_name(BoundKind kind);
std::string bound_status_name(BoundStatus status);

struct BoundReport {
    BoundKind kind = BoundKind::kInnerProduct;
    double lhs = 0.0;
    double rhs = 0.0;
    BoundStatus status = BoundStatus::kPass;
};

/// Saturated iff |lhs - rhs| < 1e-6; violated iff lhs exceeds rhs by more.
BoundReport quadratic_bound_check_ic(const BiasVector &biases, int m);
BoundReport quadratic_bound_check_inner_product(const BiasVector &biases);
/// `x_dist` is over the 2^n strings of Alice's input.
BoundReport quadratic_bound_check_generalized(const BiasVector &biases, std::span<const double> x_dist);

/// (1 - h(P)) - (2P - 1)^2 / (2 ln 2) for P in [1/2, 1]; kDomain otherwise.
double binary_entropy_bias_inequality(double p);

}  // namespace icgame

#endif
