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

#include "icgame/games.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "icgame/errors.h"

namespace icgame {

namespace {

constexpr double kBiasTolerance = 1e-9;

void validate_distribution(std::span<const double> p, std::size_t expected, const std::string &what) {
    if (p.size() != expected) {
        fail(ErrorKind::kShape, what + " has " + std::to_string(p.size()) + " entries, expected " +
                                    std::to_string(expected));
    }
    double total = 0.0;
    for (double v : p) {
        if (!(v >= 0.0)) {
            fail(ErrorKind::kArgument, what + " has a negative entry");
        }
        total += v;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        fail(ErrorKind::kArgument, what + " sums to " + std::to_string(total));
    }
}

std::vector<double> uniform_vector(std::size_t size) {
    return std::vector<double>(size, 1.0 / static_cast<double>(size));
}

// Accumulates the exact joint of one protocol for a fixed (x, k) by walking
// every combination of box outcomes. Boxes Bob does not query for this k only
// contribute Alice's marginal.
class ProtocolWalker {
   public:
    ProtocolWalker(const Protocol &protocol, int k) : protocol_(protocol), k_(k) {
        const auto box_count = protocol.boxes.size();
        bob_input_.assign(box_count, -1);
        bob_slot_.assign(box_count, -1);
        const auto &queries = protocol.bob_queries[static_cast<std::size_t>(k)];
        for (std::size_t q = 0; q < queries.size(); ++q) {
            const auto &query = queries[q];
            if (query.box < 0 || static_cast<std::size_t>(query.box) >= box_count) {
                fail(ErrorKind::kWiring, "Bob queries a box that does not exist");
            }
            const auto &box = protocol.boxes[static_cast<std::size_t>(query.box)];
            if (query.input < 0 || query.input >= box.y_size()) {
                fail(ErrorKind::kWiring, "Bob's box input outside the box alphabet");
            }
            if (bob_input_[static_cast<std::size_t>(query.box)] >= 0) {
                fail(ErrorKind::kWiring, "Bob queries the same box twice");
            }
            bob_input_[static_cast<std::size_t>(query.box)] = query.input;
            bob_slot_[static_cast<std::size_t>(query.box)] = static_cast<int>(q);
        }
        alice_outputs_.assign(box_count, 0);
        bob_outputs_.assign(queries.size(), 0);
    }

    template <typename Sink>
    void walk(BitString x, double weight, Sink &&sink) {
        step(x, 0, weight, sink);
    }

   private:
    template <typename Sink>
    void step(BitString x, std::size_t j, double weight, Sink &sink) {
        if (j == protocol_.boxes.size()) {
            const std::uint32_t alpha = protocol_.message(x, alice_outputs_);
            if (alpha >= (1u << protocol_.m)) {
                fail(ErrorKind::kWiring, "message does not fit in m bits");
            }
            const int beta = protocol_.guess(k_, alpha, bob_outputs_);
            if (beta != 0 && beta != 1) {
                fail(ErrorKind::kWiring, "Bob's guess must be a bit");
            }
            sink(alpha, beta, weight);
            return;
        }
        const auto &box = protocol_.boxes[j];
        const int x_in = protocol_.alice_input(x, std::span<const int>(alice_outputs_.data(), j), static_cast<int>(j));
        if (x_in < 0 || x_in >= box.x_size()) {
            fail(ErrorKind::kWiring, "Alice's box input outside the box alphabet");
        }
        const int y_in = bob_input_[j];
        for (int a = 0; a < 2; ++a) {
            alice_outputs_[j] = a;
            if (y_in < 0) {
                const double p = box.alice_marginal(a, x_in);
                if (p != 0.0) {
                    step(x, j + 1, weight * p, sink);
                }
                continue;
            }
            for (int b = 0; b < 2; ++b) {
                const double p = box.p(a, b, x_in, y_in);
                if (p == 0.0) {
                    continue;
                }
                bob_outputs_[static_cast<std::size_t>(bob_slot_[j])] = b;
                step(x, j + 1, weight * p, sink);
            }
        }
    }

    const Protocol &protocol_;
    int k_;
    std::vector<int> bob_input_;
    std::vector<int> bob_slot_;
    std::vector<int> alice_outputs_;
    std::vector<int> bob_outputs_;
};

bool all_close(std::span<const double> v, double target, double tol) {
    return std::all_of(v.begin(), v.end(), [&](double p) { return std::abs(p - target) <= tol; });
}

bool factorizes(const JointDistribution &x_joint, int n) {
    std::vector<std::vector<double>> singles;
    for (int k = 1; k <= n; ++k) {
        const auto single = x_joint.marginal({x_var(k)});
        singles.emplace_back(single.table().begin(), single.table().end());
    }
    for (std::size_t flat = 0; flat < x_joint.size(); ++flat) {
        BitString x(n, static_cast<std::uint32_t>(flat));
        double prod = 1.0;
        for (int i = 0; i < n; ++i) {
            prod *= singles[static_cast<std::size_t>(i)][static_cast<std::size_t>(x.bit(i))];
        }
        if (std::abs(prod - x_joint.table()[flat]) > 1e-9) {
            return false;
        }
    }
    return true;
}

}  // namespace

double BiasVector::sum_of_squares() const {
    double s = 0.0;
    for (double e : values) {
        s += e * e;
    }
    return s;
}

void BiasVector::validate() const {
    for (double e : values) {
        if (!(std::abs(e) <= 1.0 + kBiasTolerance)) {
            fail(ErrorKind::kDomain, "bias " + std::to_string(e) + " outside [-1, 1]");
        }
    }
}

RacGame RacGame::uniform(int n, int m) {
    if (n < 1 || n > 24) {
        fail(ErrorKind::kArgument, "RAC game needs 1 <= n <= 24");
    }
    RacGame g;
    g.n = n;
    g.m = m;
    g.input_dist = uniform_vector(std::size_t{1} << n);
    g.k_dist = uniform_vector(static_cast<std::size_t>(n));
    g.validate();
    return g;
}

void RacGame::validate() const {
    if (n < 1 || n > 24) {
        fail(ErrorKind::kArgument, "RAC game needs 1 <= n <= 24");
    }
    if (m < 0 || m > n) {
        fail(ErrorKind::kArgument, "RAC game needs 0 <= m <= n");
    }
    validate_distribution(input_dist, std::size_t{1} << n, "input distribution");
    validate_distribution(k_dist, static_cast<std::size_t>(n), "index distribution");
}

InnerProductGame InnerProductGame::uniform(int n) {
    if (n < 1 || n > 16) {
        fail(ErrorKind::kArgument, "inner-product game needs 1 <= n <= 16");
    }
    InnerProductGame g;
    g.n = n;
    g.x_dist = uniform_vector(std::size_t{1} << n);
    g.bob_inputs = all_strings(n);
    g.y_dist = uniform_vector(g.bob_inputs.size());
    return g;
}

void InnerProductGame::validate() const {
    if (n < 1 || n > 16) {
        fail(ErrorKind::kArgument, "inner-product game needs 1 <= n <= 16");
    }
    validate_distribution(x_dist, std::size_t{1} << n, "x distribution");
    if (bob_inputs.empty()) {
        fail(ErrorKind::kArgument, "Bob needs at least one input");
    }
    for (const auto &y : bob_inputs) {
        if (y.length() != n) {
            fail(ErrorKind::kArgument, "Bob input has the wrong length");
        }
    }
    validate_distribution(y_dist, bob_inputs.size(), "y distribution");
}

std::string x_var(int k) {
    return "x" + std::to_string(k);
}

VarSet x_vars(int n) {
    VarSet out;
    for (int k = 1; k <= n; ++k) {
        out.push_back(x_var(k));
    }
    return out;
}

double GameReport::entropic_term(std::string_view label) const {
    for (const auto &t : entropic_terms) {
        if (t.label == label) {
            return t.value;
        }
    }
    fail(ErrorKind::kReport, "report has no entropic term '" + std::string(label) + "'");
}

GameReport evaluate_rac(const RacGame &game, const Strategy &strategy, const EvaluationOptions &options) {
    game.validate();
    if (game.n > options.max_n) {
        fail(ErrorKind::kResource,
             "n = " + std::to_string(game.n) + " exceeds the enumeration cap " + std::to_string(options.max_n));
    }
    if (strategy.n() != game.n || strategy.m() != game.m) {
        fail(ErrorKind::kWiring, "strategy is for (n, m) = (" + std::to_string(strategy.n()) + ", " +
                                     std::to_string(strategy.m()) + "), game is (" + std::to_string(game.n) + ", " +
                                     std::to_string(game.m) + ")");
    }

    const int n = game.n;
    const std::size_t x_count = std::size_t{1} << n;
    const std::size_t alpha_count = std::size_t{1} << game.m;
    const std::size_t component_count = strategy.components().size();

    std::vector<Variable> variables;
    for (int k = 1; k <= n; ++k) {
        variables.push_back({x_var(k), 2});
    }
    variables.push_back({std::string(kAlphaVar), static_cast<int>(alpha_count)});
    variables.push_back({std::string(kBetaVar), 2});
    variables.push_back({std::string(kSharedVar), static_cast<int>(component_count)});

    // Flat layout matches `variables`: ((x * |alpha| + alpha) * 2 + beta) * |B| + c.
    auto flat_index = [&](std::size_t x, std::uint32_t alpha, int beta, std::size_t c) {
        return ((x * alpha_count + alpha) * 2 + static_cast<std::size_t>(beta)) * component_count + c;
    };

    GameReport report;
    report.game = "rac";
    report.strategy = strategy.label();
    report.n = n;
    report.m = game.m;
    report.bob_input_weights = game.k_dist;
    report.classical = strategy.classical();

    for (int k = 0; k < n; ++k) {
        std::vector<double> table(x_count * alpha_count * 2 * component_count, 0.0);
        for (std::size_t c = 0; c < component_count; ++c) {
            const auto &protocol = strategy.components()[c];
            const double w = strategy.weights()[c];
            if (w == 0.0) {
                continue;
            }
            ProtocolWalker walker(protocol, k);
            for (std::size_t x = 0; x < x_count; ++x) {
                const double px = game.input_dist[x];
                if (px == 0.0) {
                    continue;
                }
                walker.walk(BitString(n, static_cast<std::uint32_t>(x)), w * px,
                            [&](std::uint32_t alpha, int beta, double p) { table[flat_index(x, alpha, beta, c)] += p; });
            }
        }
        report.joints.emplace_back(variables, std::move(table));
    }

    double success = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto &joint = report.joints[static_cast<std::size_t>(k)];
        auto pair = joint.marginal({x_var(k + 1), std::string(kBetaVar)});
        const double p_k = pair.table()[0] + pair.table()[3];
        report.success_per_k.push_back(p_k);
        report.bias_per_k.values.push_back(2.0 * p_k - 1.0);
        success += game.k_dist[static_cast<std::size_t>(k)] * p_k;
        const double info = mutual_information(pair, {x_var(k + 1)}, {std::string(kBetaVar)});
        report.info_per_k.push_back(info);
        report.i_value += info;
    }
    report.success_probability = success;

    const auto &joint = report.joints.front();
    const VarSet xs = x_vars(n);
    const std::string alpha(kAlphaVar), beta(kBetaVar), shared(kSharedVar);
    auto with = [](VarSet a, const VarSet &b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };
    double sum_h_given_beta = 0.0;
    double sum_h_given_message = 0.0;
    double sum_h_single = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto &jk = report.joints[static_cast<std::size_t>(k)];
        sum_h_given_beta += conditional_entropy(jk, {x_var(k + 1)}, {beta});
        sum_h_given_message += conditional_entropy(jk, {x_var(k + 1)}, {alpha, shared});
        sum_h_single += shannon_entropy(jk, {x_var(k + 1)});
    }
    report.entropic_terms = {
        {"sum_k H(x_k|beta_k)", sum_h_given_beta},
        {"sum_k H(x_k|alpha,B)", sum_h_given_message},
        {"sum_k H(x_k)", sum_h_single},
        {"H(x)", shannon_entropy(joint, xs)},
        {"H(alpha)", shannon_entropy(joint, {alpha})},
        {"H(B)", shannon_entropy(joint, {shared})},
        {"H(alpha,B)", shannon_entropy(joint, {alpha, shared})},
        {"H(x,B)", shannon_entropy(joint, with(xs, {shared}))},
        {"H(x,alpha,B)", shannon_entropy(joint, with(xs, {alpha, shared}))},
    };

    report.inputs_uniform = all_close(game.input_dist, 1.0 / static_cast<double>(x_count), 1e-12);
    report.inputs_independent = report.inputs_uniform || factorizes(joint.marginal(xs), n);
    if (report.inputs_uniform) {
        report.applicable_bound = "I <= m";
    } else if (report.inputs_independent) {
        report.applicable_bound = "I <= H(alpha) <= m";
    } else {
        report.applicable_bound = "sum_k H(x_k|beta_k) >= H(x) - H(alpha)";
    }
    return report;
}

BoxPredicate inner_product_predicate(int n) {
    return [n](int a, int b, int x, int y) {
        BitString xs(n, static_cast<std::uint32_t>(x));
        BitString ys(n, static_cast<std::uint32_t>(y));
        return (a ^ b) == xs.dot(ys);
    };
}

GameReport evaluate_inner_product(const InnerProductGame &game, const NoSignallingBox &box) {
    game.validate();
    const int n = game.n;
    const int x_count = 1 << n;
    if (box.x_size() != x_count) {
        fail(ErrorKind::kWiring, "box has " + std::to_string(box.x_size()) + " Alice inputs, game needs " +
                                     std::to_string(x_count));
    }
    // A box over exactly the game's inputs is indexed by position; otherwise it
    // must cover all 2^n strings and is indexed by string value.
    const bool positional = box.y_size() == static_cast<int>(game.bob_inputs.size());
    if (!positional && box.y_size() != x_count) {
        fail(ErrorKind::kWiring, "box Bob alphabet matches neither the game's inputs nor all strings");
    }

    GameReport report;
    report.game = "inner-product";
    report.n = n;
    report.bob_input_weights = game.y_dist;
    report.classical = box.is_deterministic();

    double success = 0.0;
    for (std::size_t j = 0; j < game.bob_inputs.size(); ++j) {
        const BitString y = game.bob_inputs[j];
        const int y_in = positional ? static_cast<int>(j) : static_cast<int>(y.value());
        double e_y = 0.0;
        for (int x = 0; x < x_count; ++x) {
            const double px = game.x_dist[static_cast<std::size_t>(x)];
            if (px == 0.0) {
                continue;
            }
            const int target = BitString(n, static_cast<std::uint32_t>(x)).dot(y);
            double e_xy = 0.0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    const double p = box.p(a, b, x, y_in);
                    e_xy += ((a ^ b) == target) ? p : -p;
                }
            }
            e_y += px * e_xy;
        }
        report.bias_per_k.values.push_back(e_y);
        report.success_per_k.push_back(0.5 * (1.0 + e_y));
        success += game.y_dist[j] * 0.5 * (1.0 + e_y);
    }
    report.success_probability = success;
    return report;
}

InnerProductGame restrict_to_hamming_weight_one(const InnerProductGame &game) {
    if (game.n < 1) {
        fail(ErrorKind::kArgument, "restriction needs n >= 1");
    }
    InnerProductGame out = game;
    out.bob_inputs = unit_strings(game.n);
    out.y_dist = uniform_vector(out.bob_inputs.size());
    return out;
}

Strategy transfer_nonlocal_to_rac(const NoSignallingBox &box, int n) {
    if (n < 1 || n > 24) {
        fail(ErrorKind::kArgument, "transfer needs 1 <= n <= 24");
    }
    const int x_count = 1 << n;
    if (box.x_size() != x_count) {
        fail(ErrorKind::kWiring, "transferred box needs 2^n Alice inputs");
    }
    const bool by_index = box.y_size() == n;
    if (!by_index && box.y_size() != x_count) {
        fail(ErrorKind::kWiring, "transferred box needs n or 2^n Bob inputs");
    }
    Protocol p;
    p.n = n;
    p.m = 1;
    p.boxes = {box};
    p.alice_input = [](BitString x, std::span<const int>, int) { return static_cast<int>(x.value()); };
    p.message = [](BitString, std::span<const int> a) { return static_cast<std::uint32_t>(a[0]); };
    for (int k = 1; k <= n; ++k) {
        const int input = by_index ? k - 1 : static_cast<int>(BitString::unit(n, k).value());
        p.bob_queries.push_back({BobQuery{0, input}});
    }
    p.guess = [](int, std::uint32_t alpha, std::span<const int> b) { return static_cast<int>(alpha) ^ b[0]; };
    return Strategy(StrategyKind::kTransferredBox, "transfer", {std::move(p)}, {1.0});
}

}  // namespace icgame
