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

#include "icgame/strategies.h"

#include <charconv>
#include <cmath>
#include <numbers>

#include "icgame/errors.h"

namespace icgame {

namespace {

void require_n(int n) {
    if (n < 1 || n > 24) {
        fail(ErrorKind::kArgument, "strategy needs 1 <= n <= 24, got " + std::to_string(n));
    }
}

std::vector<std::vector<BobQuery>> no_queries(int n) {
    return std::vector<std::vector<BobQuery>>(static_cast<std::size_t>(n));
}

// Bob reads bit k of an m-bit message (k <= m), else guesses 0.
int decode_prefix(int k, std::uint32_t alpha, int m) {
    if (k >= m) {
        return 0;
    }
    return static_cast<int>((alpha >> (m - 1 - k)) & 1u);
}

Protocol constant_message_protocol(int n, int m, std::uint32_t alpha) {
    Protocol p;
    p.n = n;
    p.m = m;
    p.message = [alpha](BitString, std::span<const int>) { return alpha; };
    p.bob_queries = no_queries(n);
    p.guess = [m](int k, std::uint32_t a, std::span<const int>) { return decode_prefix(k, a, m); };
    return p;
}

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view token, std::string_view spec) {
    if (token == "tsirelson") {
        return 1.0 / std::numbers::sqrt2;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        fail(ErrorKind::kArgument, "bad number '" + std::string(token) + "' in strategy '" + std::string(spec) + "'");
    }
    return v;
}

int parse_int(std::string_view token, std::string_view spec) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        fail(ErrorKind::kArgument, "bad integer '" + std::string(token) + "' in strategy '" + std::string(spec) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

}  // namespace

Strategy send_first_m_strategy(int n, int m) {
    require_n(n);
    if (m < 1 || m > n) {
        fail(ErrorKind::kArgument, "send-first needs 1 <= m <= n");
    }
    Protocol p;
    p.n = n;
    p.m = m;
    p.message = [n, m](BitString x, std::span<const int>) { return x.value() >> (n - m); };
    p.bob_queries = no_queries(n);
    p.guess = [m](int k, std::uint32_t alpha, std::span<const int>) { return decode_prefix(k, alpha, m); };
    return Strategy(StrategyKind::kSendFirstM, "send-first:" + std::to_string(m), {std::move(p)}, {1.0});
}

Strategy send_bit_strategy(int n, int i) {
    require_n(n);
    if (i < 1 || i > n) {
        fail(ErrorKind::kArgument, "send-bit index must lie in 1..n");
    }
    Protocol p;
    p.n = n;
    p.m = 1;
    p.message = [i](BitString x, std::span<const int>) { return static_cast<std::uint32_t>(x.bit(i - 1)); };
    p.bob_queries = no_queries(n);
    p.guess = [](int, std::uint32_t alpha, std::span<const int>) { return static_cast<int>(alpha); };
    return Strategy(StrategyKind::kSendBit, "send-bit:" + std::to_string(i), {std::move(p)}, {1.0});
}

Strategy random_message_strategy(int n, int m) {
    require_n(n);
    if (m < 1 || m > n || m > 16) {
        fail(ErrorKind::kArgument, "random-message needs 1 <= m <= n");
    }
    const std::uint32_t count = 1u << m;
    std::vector<Protocol> components;
    for (std::uint32_t alpha = 0; alpha < count; ++alpha) {
        components.push_back(constant_message_protocol(n, m, alpha));
    }
    return Strategy(StrategyKind::kRandomMessage, "random-message", std::move(components),
                    std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

Strategy majority_vote_strategy(int n) {
    require_n(n);
    Protocol p;
    p.n = n;
    p.m = 1;
    p.message = [n](BitString x, std::span<const int>) -> std::uint32_t {
        const int ones = x.weight();
        if (2 * ones > n) {
            return 1;
        }
        if (2 * ones < n) {
            return 0;
        }
        return static_cast<std::uint32_t>(x.bit(0));
    };
    p.bob_queries = no_queries(n);
    p.guess = [](int, std::uint32_t alpha, std::span<const int>) { return static_cast<int>(alpha); };
    return Strategy(StrategyKind::kMajorityVote, "majority", {std::move(p)}, {1.0});
}

double classical_success_formula(int n) {
    if (n < 1) {
        fail(ErrorKind::kArgument, "classical success formula needs n >= 1");
    }
    const int top = n - 1;
    const int r = top / 2;
    // C(top, r) / 2^top, built as a running product to stay within double range.
    double ratio = std::ldexp(1.0, -top);
    for (int i = 1; i <= r; ++i) {
        ratio = ratio * static_cast<double>(top - r + i) / static_cast<double>(i);
    }
    return 0.5 * (1.0 + ratio);
}

double asymptotic_classical_success(int n) {
    if (n < 1) {
        fail(ErrorKind::kArgument, "asymptotic formula needs n >= 1");
    }
    return 0.5 * (1.0 + std::sqrt(2.0 / (std::numbers::pi * static_cast<double>(n))));
}

Strategy chsh_strategy(double bias) {
    Protocol p;
    p.n = 2;
    p.m = 1;
    p.boxes = {isotropic_box(bias)};
    p.alice_input = [](BitString x, std::span<const int>, int) { return x.bit(0) ^ x.bit(1); };
    p.message = [](BitString x, std::span<const int> a) { return static_cast<std::uint32_t>(a[0] ^ x.bit(0)); };
    p.bob_queries = {{BobQuery{0, 0}}, {BobQuery{0, 1}}};
    p.guess = [](int, std::uint32_t alpha, std::span<const int> b) { return b[0] ^ static_cast<int>(alpha); };
    return Strategy(StrategyKind::kChsh, "chsh:" + format_number(bias), {std::move(p)}, {1.0});
}

Strategy pyramid_strategy(double bias, int levels) {
    if (levels < 1 || levels > 4) {
        fail(ErrorKind::kArgument, "pyramid depth must lie in 1..4");
    }
    const int n = 1 << levels;
    // Boxes are stored level by level (level 1 first); level l holds n / 2^l nodes.
    std::vector<int> level_offset(static_cast<std::size_t>(levels) + 2, 0);
    for (int l = 1; l <= levels; ++l) {
        level_offset[static_cast<std::size_t>(l) + 1] = level_offset[static_cast<std::size_t>(l)] + (n >> l);
    }
    auto box_index = [level_offset](int level, int node) { return level_offset[static_cast<std::size_t>(level)] + node; };

    // Message bit of subtree (level, node): the XOR of the outputs along its
    // left spine and the leftmost leaf bit. Level 0 nodes are the bits of x.
    auto message_of = [box_index](BitString x, std::span<const int> a, int level, int node) {
        int value = 0;
        while (level > 0) {
            value ^= a[static_cast<std::size_t>(box_index(level, node))];
            --level;
            node *= 2;
        }
        return value ^ x.bit(node);
    };

    Protocol p;
    p.n = n;
    p.m = 1;
    for (int j = 0; j < n - 1; ++j) {
        p.boxes.push_back(isotropic_box(bias));
    }
    std::vector<std::pair<int, int>> node_of_box;
    for (int l = 1; l <= levels; ++l) {
        for (int node = 0; node < (n >> l); ++node) {
            node_of_box.emplace_back(l, node);
        }
    }
    p.alice_input = [node_of_box, message_of](BitString x, std::span<const int> earlier, int box) {
        auto [level, node] = node_of_box[static_cast<std::size_t>(box)];
        return message_of(x, earlier, level - 1, 2 * node) ^ message_of(x, earlier, level - 1, 2 * node + 1);
    };
    p.message = [message_of, levels](BitString x, std::span<const int> a) {
        return static_cast<std::uint32_t>(message_of(x, a, levels, 0));
    };
    for (int k = 0; k < n; ++k) {
        std::vector<BobQuery> path;
        for (int l = levels; l >= 1; --l) {
            path.push_back({box_index(l, k >> l), (k >> (l - 1)) & 1});
        }
        p.bob_queries.push_back(std::move(path));
    }
    p.guess = [](int, std::uint32_t alpha, std::span<const int> b) {
        int beta = static_cast<int>(alpha);
        for (int v : b) {
            beta ^= v;
        }
        return beta;
    };
    return Strategy(StrategyKind::kPyramid, "pyramid:" + format_number(bias) + ":" + std::to_string(levels),
                    {std::move(p)}, {1.0});
}

Strategy mixture_strategy(std::span<const Strategy> strategies, std::span<const double> weights) {
    if (strategies.empty() || strategies.size() != weights.size()) {
        fail(ErrorKind::kArgument, "mixture needs one weight per strategy");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            fail(ErrorKind::kArgument, "mixture weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        fail(ErrorKind::kArgument, "mixture weights sum to " + std::to_string(total));
    }
    std::vector<Protocol> components;
    std::vector<double> flat_weights;
    std::string label = "mix:";
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        const auto &s = strategies[i];
        if (s.n() != strategies.front().n() || s.m() != strategies.front().m()) {
            fail(ErrorKind::kArgument, "mixed strategies must share n and m");
        }
        for (std::size_t c = 0; c < s.components().size(); ++c) {
            components.push_back(s.components()[c]);
            flat_weights.push_back(weights[i] * s.weights()[c]);
        }
        label += (i ? ";" : "") + s.label() + "," + format_number(weights[i]);
    }
    return Strategy(StrategyKind::kMixture, label, std::move(components), std::move(flat_weights));
}

Strategy explicit_classical_strategy(int n, int m, std::vector<std::uint32_t> messages,
                                     std::vector<std::vector<int>> guesses) {
    require_n(n);
    if (m < 0 || m > n || m > 16) {
        fail(ErrorKind::kArgument, "explicit strategy needs 0 <= m <= n");
    }
    if (messages.size() != (std::size_t{1} << n) || guesses.size() != (std::size_t{1} << m)) {
        fail(ErrorKind::kShape, "explicit strategy tables have the wrong size");
    }
    std::string label = "classical:f=";
    for (auto alpha : messages) {
        if (alpha >= (1u << m)) {
            fail(ErrorKind::kArgument, "message does not fit in m bits");
        }
        label += std::to_string(alpha);
    }
    label += ";g=";
    for (std::size_t alpha = 0; alpha < guesses.size(); ++alpha) {
        if (guesses[alpha].size() != static_cast<std::size_t>(n)) {
            fail(ErrorKind::kShape, "guess table row has the wrong length");
        }
        label += alpha ? "," : "";
        for (int beta : guesses[alpha]) {
            if (beta != 0 && beta != 1) {
                fail(ErrorKind::kArgument, "guesses must be bits");
            }
            label += std::to_string(beta);
        }
    }
    Protocol p;
    p.n = n;
    p.m = m;
    p.message = [messages = std::move(messages)](BitString x, std::span<const int>) { return messages[x.value()]; };
    p.bob_queries = no_queries(n);
    p.guess = [guesses = std::move(guesses)](int k, std::uint32_t alpha, std::span<const int>) {
        return guesses[alpha][static_cast<std::size_t>(k)];
    };
    return Strategy(StrategyKind::kExplicitClassical, label, {std::move(p)}, {1.0});
}

ClassicalStrategySpace::ClassicalStrategySpace(int n, int m, std::uint64_t cap) : n_(n), m_(m) {
    require_n(n);
    if (m < 1 || m > n) {
        fail(ErrorKind::kArgument, "classical oracle needs 1 <= m <= n");
    }
    // |messages| = 2^(m 2^n), |guesses| = 2^(n 2^m).
    const double message_bits = static_cast<double>(m) * std::ldexp(1.0, n);
    const double guess_bits = static_cast<double>(n) * std::ldexp(1.0, m);
    if (message_bits + guess_bits > 62.0 ||
        (std::uint64_t{1} << static_cast<int>(message_bits + guess_bits)) > cap) {
        fail(ErrorKind::kResource, "classical strategy space for (n, m) = (" + std::to_string(n) + ", " +
                                       std::to_string(m) + ") has 2^" +
                                       std::to_string(static_cast<long long>(message_bits + guess_bits)) +
                                       " members, above the cap " + std::to_string(cap));
    }
    message_maps_ = std::uint64_t{1} << static_cast<int>(message_bits);
    guess_maps_ = std::uint64_t{1} << static_cast<int>(guess_bits);
}

Strategy ClassicalStrategySpace::at(std::uint64_t index) const {
    if (index >= size()) {
        fail(ErrorKind::kArgument, "classical strategy index out of range");
    }
    const std::uint64_t f = index / guess_maps_;
    const std::uint64_t g = index % guess_maps_;
    const std::uint32_t alpha_mask = (1u << m_) - 1u;
    std::vector<std::uint32_t> messages(std::size_t{1} << n_);
    for (std::size_t x = 0; x < messages.size(); ++x) {
        messages[x] = static_cast<std::uint32_t>(f >> (static_cast<std::uint64_t>(m_) * x)) & alpha_mask;
    }
    std::vector<std::vector<int>> guesses(std::size_t{1} << m_, std::vector<int>(static_cast<std::size_t>(n_)));
    for (std::size_t alpha = 0; alpha < guesses.size(); ++alpha) {
        for (int k = 0; k < n_; ++k) {
            guesses[alpha][static_cast<std::size_t>(k)] =
                static_cast<int>((g >> (alpha * static_cast<std::size_t>(n_) + static_cast<std::size_t>(k))) & 1u);
        }
    }
    return explicit_classical_strategy(n_, m_, std::move(messages), std::move(guesses));
}

OracleResult run_classical_oracle(const RacGame &game, std::uint64_t cap,
                                  const std::function<void(const Strategy &, const GameReport &)> &visit) {
    ClassicalStrategySpace space(game.n, game.m, cap);
    OracleResult result;
    result.max_success = -1.0;
    result.max_information = -1.0;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
        Strategy s = space.at(i);
        GameReport r = evaluate_rac(game, s, EvaluationOptions{game.n});
        ++result.strategies;
        if (r.success_probability > result.max_success + 1e-12) {
            result.max_success = r.success_probability;
            result.argmax_success = s.label();
        }
        if (r.i_value > result.max_information + 1e-12) {
            result.max_information = r.i_value;
            result.argmax_information = s.label();
        }
        result.max_sum_sq_bias = std::max(result.max_sum_sq_bias, r.bias_per_k.sum_of_squares());
        if (visit) {
            visit(s, r);
        }
    }
    return result;
}

Strategy parse_strategy(std::string_view spec, int n, int m) {
    const auto colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    auto require_single_bit = [&]() {
        if (m != 1) {
            fail(ErrorKind::kArgument, "strategy '" + std::string(spec) + "' needs m = 1");
        }
    };

    if (head == "send-first") {
        const int mm = parse_int(rest, spec);
        if (mm != m) {
            fail(ErrorKind::kArgument, "send-first:" + std::to_string(mm) + " does not match m = " + std::to_string(m));
        }
        return send_first_m_strategy(n, mm);
    }
    if (head == "send-bit") {
        require_single_bit();
        return send_bit_strategy(n, parse_int(rest, spec));
    }
    if (head == "random-message" && rest.empty()) {
        return random_message_strategy(n, m);
    }
    if (head == "majority" && rest.empty()) {
        require_single_bit();
        return majority_vote_strategy(n);
    }
    if (head == "chsh") {
        require_single_bit();
        if (n != 2) {
            fail(ErrorKind::kArgument, "chsh strategy needs n = 2");
        }
        return chsh_strategy(parse_number(rest, spec));
    }
    if (head == "pyramid") {
        require_single_bit();
        auto parts = split(rest, ':');
        if (parts.size() != 2) {
            fail(ErrorKind::kArgument, "pyramid spec is pyramid:E:L");
        }
        const int levels = parse_int(parts[1], spec);
        if (levels < 1 || levels > 4 || n != (1 << levels)) {
            fail(ErrorKind::kArgument, "pyramid depth " + std::to_string(levels) + " does not give n = " +
                                           std::to_string(n));
        }
        return pyramid_strategy(parse_number(parts[0], spec), levels);
    }
    if (head == "mix") {
        std::vector<Strategy> parts;
        std::vector<double> weights;
        for (auto item : split(rest, ';')) {
            const auto comma = item.rfind(',');
            if (comma == std::string_view::npos) {
                fail(ErrorKind::kArgument, "mixture item '" + std::string(item) + "' lacks a weight");
            }
            parts.push_back(parse_strategy(item.substr(0, comma), n, m));
            weights.push_back(parse_number(item.substr(comma + 1), spec));
        }
        return mixture_strategy(parts, weights);
    }
    fail(ErrorKind::kArgument, "unknown strategy '" + std::string(spec) + "'");
}

}  // namespace icgame
