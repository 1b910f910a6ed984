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

#ifndef ICGAME_BOXES_H
#define ICGAME_BOXES_H

#include <array>
#include <functional>
#include <span>
#include <vector>

namespace icgame {

/// Tolerance for no-signalling and slice normalization checks.
inline constexpr double kNoSignallingTolerance = 1e-9;

/// Where a box came from. Gram-derived and sub-Tsirelson isotropic boxes are
/// certified quantum-realizable without constructing states or observables.
enum class BoxOrigin {
    kGeneric,
    kLocalDeterministic,
    kQuantumRealizable,
};

/// Bipartite box P(a, b | x, y) with binary outputs and finite input alphabets.
class NoSignallingBox {
   public:
    using Slice = std::array<std::array<double, 2>, 2>;  // [a][b]

    /// `table` is indexed [x][y] and must have x_size * y_size normalized
    /// slices. No-signalling is not enforced here; see check_no_signalling.
    NoSignallingBox(int x_size, int y_size, std::vector<Slice> table, BoxOrigin origin = BoxOrigin::kGeneric);

    int x_size() const {
        return x_size_;
    }
    int y_size() const {
        return y_size_;
    }
    BoxOrigin origin() const {
        return origin_;
    }

    const Slice &slice(int x, int y) const {
        return table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(y_size_) + static_cast<std::size_t>(y)];
    }
    double p(int a, int b, int x, int y) const {
        return slice(x, y)[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    /// P(a | x), read off the y = 0 slice.
    double alice_marginal(int a, int x) const;

    /// True when every entry is 0 or 1 (a deterministic local box).
    bool is_deterministic() const;

    const std::vector<Slice> &table() const {
        return table_;
    }

   private:
    int x_size_;
    int y_size_;
    std::vector<Slice> table_;
    BoxOrigin origin_;
};

/// Binary-input box with uniform marginals and P(a xor b = x y | x, y) = (1 + E)/2.
NoSignallingBox isotropic_box(double bias);

/// n-bit generalization: inputs are all n-bit strings on both sides and
/// P(a xor b = x.y | x, y) = (1 + E)/2. n = 1 is isotropic_box.
NoSignallingBox isotropic_inner_product_box(int n, double bias);

struct NoSignallingReport {
    double alice_deviation = 0.0;  // max over a, x, y, y' of |P_A(a|x,y) - P_A(a|x,y')|
    double bob_deviation = 0.0;
    bool pass = false;

    double max_deviation() const {
        return alice_deviation > bob_deviation ? alice_deviation : bob_deviation;
    }
};

NoSignallingReport check_no_signalling(const NoSignallingBox &box);

/// Deterministic product box a = alice[x], b = bob[y].
NoSignallingBox local_deterministic_box(std::span<const int> alice, std::span<const int> bob);

/// Convex combination; throws kArgument on bad weights, kShape on alphabet mismatch.
NoSignallingBox mix(std::span<const NoSignallingBox> boxes, std::span<const double> weights);

/// Winning predicate for (a, b, x, y).
using BoxPredicate = std::function<bool(int a, int b, int x, int y)>;

/// a xor b = x y with x, y read as single bits (CHSH).
bool chsh_predicate(int a, int b, int x, int y);

/// sum_{a,b} P(a,b|x,y) (-1)^[predicate violated] = 2 P(win|x,y) - 1.
double correlator(const NoSignallingBox &box, int x, int y, const BoxPredicate &predicate);

}  // namespace icgame

#endif
