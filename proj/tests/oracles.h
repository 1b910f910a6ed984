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

// Reference computations written against the definitions only. They share no
// code with the library so the tests compare two independent routes.

#ifndef ICGAME_TESTS_ORACLES_H
#define ICGAME_TESTS_ORACLES_H

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

inline double h2(double p) {
    double h = 0.0;
    if (p > 0.0) {
        h -= p * std::log2(p);
    }
    if (p < 1.0) {
        h -= (1.0 - p) * std::log2(1.0 - p);
    }
    return h;
}

inline double binomial(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return c;
}

// Bit k (1-based, x_1 most significant) of an n-bit value.
inline int bit(std::uint32_t x, int n, int k) {
    return static_cast<int>((x >> (n - k)) & 1u);
}

struct RacFigures {
    double success = 0.0;
    std::vector<double> bias;
    std::vector<double> info;  // I(x_k : beta_k)
    double total_info = 0.0;
};

// Classical RAC over uniform x and uniform k. `weights[r]` mixes components;
// component r sends encode(r, x) and Bob answers decode(r, alpha, k).
inline RacFigures classical_rac(int n, const std::vector<double> &weights,
                                const std::function<std::uint32_t(int, std::uint32_t)> &encode,
                                const std::function<int(int, std::uint32_t, int)> &decode) {
    RacFigures out;
    const double px = 1.0 / static_cast<double>(1u << n);
    for (int k = 1; k <= n; ++k) {
        double joint[2][2] = {{0, 0}, {0, 0}};  // [x_k][beta]
        for (std::size_t r = 0; r < weights.size(); ++r) {
            for (std::uint32_t x = 0; x < (1u << n); ++x) {
                const int beta = decode(static_cast<int>(r), encode(static_cast<int>(r), x), k);
                joint[bit(x, n, k)][beta] += weights[r] * px;
            }
        }
        const double p = joint[0][0] + joint[1][1];
        out.bias.push_back(2 * p - 1);
        out.success += p / n;
        double mi = 0.0;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const double pa = joint[a][0] + joint[a][1];
                const double pb = joint[0][b] + joint[1][b];
                if (joint[a][b] > 0) {
                    mi += joint[a][b] * std::log2(joint[a][b] / (pa * pb));
                }
            }
        }
        out.info.push_back(mi);
        out.total_info += mi;
    }
    return out;
}

}  // namespace oracle

#endif
