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

#include "icgame/boxes.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "icgame/errors.h"

namespace icgame {

namespace {

constexpr double kTsirelsonBias = 0.70710678118654752440;

void check_bias(double bias) {
    if (!(bias >= 0.0 && bias <= 1.0)) {
        fail(ErrorKind::kDomain, "box bias " + std::to_string(bias) + " outside [0, 1]");
    }
}

}  // namespace

NoSignallingBox::NoSignallingBox(int x_size, int y_size, std::vector<Slice> table, BoxOrigin origin)
    : x_size_(x_size), y_size_(y_size), table_(std::move(table)), origin_(origin) {
    if (x_size_ < 1 || y_size_ < 1) {
        fail(ErrorKind::kShape, "box input alphabets must be non-empty");
    }
    if (table_.size() != static_cast<std::size_t>(x_size_) * static_cast<std::size_t>(y_size_)) {
        fail(ErrorKind::kShape, "box table has " + std::to_string(table_.size()) + " slices, expected " +
                                    std::to_string(x_size_ * y_size_));
    }
    for (const auto &s : table_) {
        double total = 0.0;
        for (const auto &row : s) {
            for (double p : row) {
                if (!(p >= 0.0) || !std::isfinite(p)) {
                    fail(ErrorKind::kShape, "box entries must be finite and non-negative");
                }
                total += p;
            }
        }
        if (std::abs(total - 1.0) > kNoSignallingTolerance) {
            fail(ErrorKind::kShape, "box slice sums to " + std::to_string(total));
        }
    }
}

double NoSignallingBox::alice_marginal(int a, int x) const {
    const auto &s = slice(x, 0);
    return s[static_cast<std::size_t>(a)][0] + s[static_cast<std::size_t>(a)][1];
}

bool NoSignallingBox::is_deterministic() const {
    return std::all_of(table_.begin(), table_.end(), [](const Slice &s) {
        for (const auto &row : s) {
            for (double p : row) {
                if (p != 0.0 && p != 1.0) {
                    return false;
                }
            }
        }
        return true;
    });
}

NoSignallingBox isotropic_inner_product_box(int n, double bias) {
    check_bias(bias);
    if (n < 1 || n > 16) {
        fail(ErrorKind::kDomain, "inner-product box needs 1 <= n <= 16");
    }
    const int size = 1 << n;
    std::vector<NoSignallingBox::Slice> table;
    table.reserve(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
    for (int x = 0; x < size; ++x) {
        for (int y = 0; y < size; ++y) {
            const int target = std::popcount(static_cast<unsigned>(x & y)) & 1;
            NoSignallingBox::Slice s{};
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const double sign = ((a ^ b) == target) ? 1.0 : -1.0;
                    s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 0.25 * (1.0 + sign * bias);
                }
            }
            table.push_back(s);
        }
    }
    BoxOrigin origin = bias <= kTsirelsonBias ? BoxOrigin::kQuantumRealizable : BoxOrigin::kGeneric;
    return NoSignallingBox(size, size, std::move(table), origin);
}

NoSignallingBox isotropic_box(double bias) {
    return isotropic_inner_product_box(1, bias);
}

NoSignallingReport check_no_signalling(const NoSignallingBox &box) {
    NoSignallingReport r;
    for (int x = 0; x < box.x_size(); ++x) {
        for (int a = 0; a < 2; ++a) {
            const double ref = box.p(a, 0, x, 0) + box.p(a, 1, x, 0);
            for (int y = 1; y < box.y_size(); ++y) {
                r.alice_deviation = std::max(r.alice_deviation, std::abs(box.p(a, 0, x, y) + box.p(a, 1, x, y) - ref));
            }
        }
    }
    for (int y = 0; y < box.y_size(); ++y) {
        for (int b = 0; b < 2; ++b) {
            const double ref = box.p(0, b, 0, y) + box.p(1, b, 0, y);
            for (int x = 1; x < box.x_size(); ++x) {
                r.bob_deviation = std::max(r.bob_deviation, std::abs(box.p(0, b, x, y) + box.p(1, b, x, y) - ref));
            }
        }
    }
    r.pass = r.alice_deviation < kNoSignallingTolerance && r.bob_deviation < kNoSignallingTolerance;
    return r;
}

NoSignallingBox local_deterministic_box(std::span<const int> alice, std::span<const int> bob) {
    if (alice.empty() || bob.empty()) {
        fail(ErrorKind::kShape, "deterministic box maps must be non-empty");
    }
    auto is_bit = [](int v) { return v == 0 || v == 1; };
    if (!std::all_of(alice.begin(), alice.end(), is_bit) || !std::all_of(bob.begin(), bob.end(), is_bit)) {
        fail(ErrorKind::kShape, "deterministic box outputs must be bits");
    }
    std::vector<NoSignallingBox::Slice> table;
    table.reserve(alice.size() * bob.size());
    for (int a : alice) {
        for (int b : bob) {
            NoSignallingBox::Slice s{};
            s[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1.0;
            table.push_back(s);
        }
    }
    return NoSignallingBox(static_cast<int>(alice.size()), static_cast<int>(bob.size()), std::move(table),
                           BoxOrigin::kLocalDeterministic);
}

NoSignallingBox mix(std::span<const NoSignallingBox> boxes, std::span<const double> weights) {
    if (boxes.empty() || boxes.size() != weights.size()) {
        fail(ErrorKind::kArgument, "mix needs one weight per box");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            fail(ErrorKind::kArgument, "mixture weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kNoSignallingTolerance) {
        fail(ErrorKind::kArgument, "mixture weights sum to " + std::to_string(total));
    }
    const auto &first = boxes.front();
    std::vector<NoSignallingBox::Slice> table(first.table().size(), NoSignallingBox::Slice{});
    bool all_quantum = true;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const auto &box = boxes[i];
        if (box.x_size() != first.x_size() || box.y_size() != first.y_size()) {
            fail(ErrorKind::kShape, "mixed boxes must share input alphabets");
        }
        all_quantum = all_quantum && box.origin() != BoxOrigin::kGeneric;
        for (std::size_t s = 0; s < table.size(); ++s) {
            for (std::size_t a = 0; a < 2; ++a) {
                for (std::size_t b = 0; b < 2; ++b) {
                    table[s][a][b] += weights[i] * box.table()[s][a][b];
                }
            }
        }
    }
    // Local and quantum sets are convex, so the mixture keeps the weaker certificate.
    BoxOrigin origin = BoxOrigin::kGeneric;
    if (all_quantum) {
        bool all_local = std::all_of(boxes.begin(), boxes.end(),
                                     [](const NoSignallingBox &b) { return b.origin() == BoxOrigin::kLocalDeterministic; });
        origin = (all_local && boxes.size() == 1) ? BoxOrigin::kLocalDeterministic : BoxOrigin::kQuantumRealizable;
    }
    return NoSignallingBox(first.x_size(), first.y_size(), std::move(table), origin);
}

bool chsh_predicate(int a, int b, int x, int y) {
    return (a ^ b) == (x & y & 1);
}

double correlator(const NoSignallingBox &box, int x, int y, const BoxPredicate &predicate) {
    double c = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double p = box.p(a, b, x, y);
            c += predicate(a, b, x, y) ? p : -p;
        }
    }
    return c;
}

}  // namespace icgame
