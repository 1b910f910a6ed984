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

#include "icgame/strategy.h"

#include <algorithm>
#include <cmath>

#include "icgame/errors.h"

namespace icgame {

bool Protocol::classical() const {
    return std::all_of(boxes.begin(), boxes.end(), [](const NoSignallingBox &b) { return b.is_deterministic(); });
}

Strategy::Strategy(StrategyKind kind, std::string label, std::vector<Protocol> components, std::vector<double> weights)
    : kind_(kind), label_(std::move(label)), components_(std::move(components)), weights_(std::move(weights)) {
    if (components_.empty() || components_.size() != weights_.size()) {
        fail(ErrorKind::kArgument, "strategy needs one weight per component");
    }
    double total = 0.0;
    for (double w : weights_) {
        if (!(w >= 0.0)) {
            fail(ErrorKind::kArgument, "strategy weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        fail(ErrorKind::kArgument, "strategy weights sum to " + std::to_string(total));
    }
    for (const auto &c : components_) {
        if (c.n != components_.front().n || c.m != components_.front().m) {
            fail(ErrorKind::kArgument, "mixed components must share n and m");
        }
        if (c.n < 1 || c.m < 0 || c.m > c.n) {
            fail(ErrorKind::kArgument, "component needs n >= 1 and 0 <= m <= n");
        }
        if (static_cast<int>(c.bob_queries.size()) != c.n || !c.message || !c.guess) {
            fail(ErrorKind::kArgument, "protocol is incomplete");
        }
        if (!c.boxes.empty() && !c.alice_input) {
            fail(ErrorKind::kArgument, "protocol with boxes needs an Alice wiring");
        }
    }
}

bool Strategy::classical() const {
    return std::all_of(components_.begin(), components_.end(), [](const Protocol &p) { return p.classical(); });
}

}  // namespace icgame
