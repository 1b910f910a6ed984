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

#include "icgame/cli.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "icgame/analysis.h"
#include "icgame/errors.h"
#include "icgame/games.h"
#include "icgame/gram.h"
#include "icgame/json_io.h"
#include "icgame/strategies.h"

namespace icgame {

namespace {

enum class Format { kTable, kJson, kCsv };

struct RunConfig {
    int n = 2;
    int m = 1;
    std::string strategy = "majority";
    std::string bias = "tsirelson";
    std::string format = "table";
    std::uint64_t cap = 0;  // 0 selects the per-command default
    std::uint64_t seed = 1;
    std::string dist_file;
    std::string biases_file;
    bool expect_holds = false;

    // Command-specific extras.
    std::string box = "isotropic";
    std::string box_file;
    std::uint32_t alpha = 1;
    bool hw1 = false;
    int levels = 4;
    int trials = 1000;
};

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    const std::string s = buf;
    return s == "-0.000000" ? "0.000000" : s;
}

Format format_of(const RunConfig &cfg) {
    if (cfg.format == "json") {
        return Format::kJson;
    }
    return cfg.format == "csv" ? Format::kCsv : Format::kTable;
}

double parse_bias(const std::string &text) {
    if (text == "tsirelson") {
        return 1.0 / std::numbers::sqrt2;
    }
    double v = 0.0;
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        fail(ErrorKind::kArgument, "bad bias '" + text + "'");
    }
    return v;
}

int max_n(const RunConfig &cfg) {
    return cfg.cap == 0 ? kDefaultMaxN : static_cast<int>(std::min<std::uint64_t>(cfg.cap, 30));
}

std::vector<double> load_x_dist(const RunConfig &cfg, int n) {
    if (cfg.dist_file.empty()) {
        return std::vector<double>(std::size_t{1} << n, 1.0 / static_cast<double>(std::size_t{1} << n));
    }
    return input_dist_from_json(read_json_file(cfg.dist_file), n);
}

void print_json(std::ostream &out, const Json &j) {
    out << j.dump(2) << '\n';
}

void print_bounds_table(std::ostream &out, const std::vector<BoundReport> &bounds) {
    for (const auto &b : bounds) {
        out << "bound " << bound_kind_name(b.kind) << ": lhs=" << fixed6(b.lhs) << " rhs=" << fixed6(b.rhs)
            << " status=" << bound_status_name(b.status) << '\n';
    }
}

bool any_violated(const std::vector<BoundReport> &bounds) {
    for (const auto &b : bounds) {
        if (b.status == BoundStatus::kViolated) {
            return true;
        }
    }
    return false;
}

int finish(const RunConfig &cfg, bool violated) {
    return cfg.expect_holds && violated ? kExitBoundViolated : kExitOk;
}

int run_rac(const RunConfig &cfg, std::ostream &out) {
    if (cfg.n > max_n(cfg)) {
        fail(ErrorKind::kResource, "n = " + std::to_string(cfg.n) + " exceeds the cap " + std::to_string(max_n(cfg)));
    }
    RacGame game = RacGame::uniform(cfg.n, cfg.m);
    game.input_dist = load_x_dist(cfg, cfg.n);
    const Strategy strategy = parse_strategy(cfg.strategy, cfg.n, cfg.m);
    const GameReport report = evaluate_rac(game, strategy, {max_n(cfg)});
    const IcVerdict verdict = ic_verdict(report, cfg.m);
    const bool violated = verdict.status == Verdict::kViolated;

    switch (format_of(cfg)) {
        case Format::kJson:
            print_json(out, Json{{"report", to_json(report)}, {"verdict", to_json(verdict)}});
            break;
        case Format::kCsv:
            out << to_csv(report);
            break;
        case Format::kTable:
            out << "game rac  strategy " << report.strategy << "  n=" << report.n << " m=" << report.m << '\n';
            out << "P = " << fixed6(report.success_probability) << '\n';
            for (std::size_t k = 0; k < report.bias_per_k.size(); ++k) {
                out << "k=" << k + 1 << "  E_k = " << fixed6(report.bias_per_k[k])
                    << "  I_c = " << fixed6(report.info_per_k[k]) << '\n';
            }
            out << "I = " << fixed6(verdict.i_value) << '\n';
            out << "bound " << verdict.form << "  (" << fixed6(verdict.bound) << ")\n";
            out << "verdict " << verdict_name(verdict.status)
                << (verdict.message_bound_violated ? "  (I exceeds m)" : "") << '\n';
            break;
    }
    return finish(cfg, violated);
}

NoSignallingBox build_box(const RunConfig &cfg, const InnerProductGame &game) {
    if (!cfg.box_file.empty()) {
        return box_from_json(read_json_file(cfg.box_file));
    }
    if (cfg.box == "isotropic") {
        return isotropic_inner_product_box(cfg.n, parse_bias(cfg.bias));
    }
    if (cfg.box == "pr") {
        return isotropic_inner_product_box(cfg.n, 1.0);
    }
    if (cfg.box == "classical") {
        const std::uint32_t strings = 1u << cfg.n;
        if (cfg.alpha >= strings) {
            fail(ErrorKind::kArgument, "--alpha must be an n-bit string value");
        }
        const BitString alpha(cfg.n, cfg.alpha);
        std::vector<int> a(strings), b(strings, 0);
        for (std::uint32_t x = 0; x < strings; ++x) {
            a[x] = alpha.dot(BitString(cfg.n, x));
        }
        return local_deterministic_box(a, b);
    }
    if (cfg.box == "gram-uniform") {
        BiasVector targets;
        const double e = 1.0 / std::sqrt(static_cast<double>(game.bob_inputs.size()));
        targets.values.assign(game.bob_inputs.size(), e);
        return gram_to_box(gram_construct(targets, cfg.n, game.bob_inputs));
    }
    fail(ErrorKind::kArgument, "unknown box '" + cfg.box + "'");
}

int run_inner_product(const RunConfig &cfg, std::ostream &out) {
    if (cfg.n < 1 || cfg.n > max_n(cfg)) {
        fail(ErrorKind::kResource, "n = " + std::to_string(cfg.n) + " outside [1, " + std::to_string(max_n(cfg)) + "]");
    }
    InnerProductGame game = InnerProductGame::uniform(cfg.n);
    game.x_dist = load_x_dist(cfg, cfg.n);
    if (cfg.hw1) {
        game = restrict_to_hamming_weight_one(game);
    }
    const NoSignallingBox box = build_box(cfg, game);
    const GameReport report = evaluate_inner_product(game, box);
    const std::vector<BoundReport> bounds{quadratic_bound_check_inner_product(report.bias_per_k),
                                          quadratic_bound_check_generalized(report.bias_per_k, game.x_dist)};

    switch (format_of(cfg)) {
        case Format::kJson: {
            Json arr = Json::array();
            for (const auto &b : bounds) {
                arr.push_back(to_json(b));
            }
            print_json(out, Json{{"report", to_json(report)}, {"bounds", arr}});
            break;
        }
        case Format::kCsv:
            out << "y,E_y\n";
            for (std::size_t y = 0; y < game.bob_inputs.size(); ++y) {
                std::ostringstream row;
                row.precision(17);
                row << game.bob_inputs[y].to_string() << ',' << report.bias_per_k[y] << '\n';
                out << row.str();
            }
            break;
        case Format::kTable:
            out << "game inner-product  n=" << cfg.n << (cfg.hw1 ? "  (Hamming weight 1)" : "") << '\n';
            out << "P = " << fixed6(report.success_probability) << '\n';
            for (std::size_t y = 0; y < game.bob_inputs.size(); ++y) {
                out << "y=" << game.bob_inputs[y].to_string() << "  E_y = " << fixed6(report.bias_per_k[y]) << '\n';
            }
            print_bounds_table(out, bounds);
            break;
    }
    return finish(cfg, any_violated(bounds));
}

int run_bounds(const RunConfig &cfg, std::ostream &out) {
    BiasVector biases;
    int n = cfg.n;
    if (!cfg.biases_file.empty()) {
        biases = biases_from_json(read_json_file(cfg.biases_file));
    } else {
        const RacGame game = RacGame::uniform(cfg.n, cfg.m);
        biases = evaluate_rac(game, parse_strategy(cfg.strategy, cfg.n, cfg.m), {max_n(cfg)}).bias_per_k;
    }
    if (n < 1 || n > 30) {
        fail(ErrorKind::kArgument, "--n must lie in [1, 30]");
    }
    const std::vector<BoundReport> bounds{quadratic_bound_check_ic(biases, cfg.m),
                                          quadratic_bound_check_inner_product(biases),
                                          quadratic_bound_check_generalized(biases, load_x_dist(cfg, n))};
    if (format_of(cfg) == Format::kJson) {
        Json arr = Json::array();
        for (const auto &b : bounds) {
            arr.push_back(to_json(b));
        }
        print_json(out, Json{{"biases", biases.values}, {"bounds", arr}});
    } else if (format_of(cfg) == Format::kCsv) {
        out << "kind,lhs,rhs,status\n";
        for (const auto &b : bounds) {
            std::ostringstream row;
            row.precision(17);
            row << bound_kind_name(b.kind) << ',' << b.lhs << ',' << b.rhs << ',' << bound_status_name(b.status)
                << '\n';
            out << row.str();
        }
    } else {
        out << "sum E^2 = " << fixed6(biases.sum_of_squares()) << "  over " << biases.size() << " biases\n";
        print_bounds_table(out, bounds);
    }
    return finish(cfg, any_violated(bounds));
}

int run_entropy_suite(const RunConfig &cfg, std::ostream &out) {
    const EntropySuiteReport sweep = entropy_sweep(cfg.trials, cfg.seed);
    const bool violated = sweep.min_slack() < -kChainTolerance;
    if (format_of(cfg) == Format::kJson) {
        Json slacks = Json::object();
        for (const auto &s : sweep.slacks) {
            slacks[s.name] = s.slack;
        }
        print_json(out, Json{{"trials", cfg.trials}, {"seed", cfg.seed}, {"min_slacks", slacks}, {"holds", !violated}});
    } else if (format_of(cfg) == Format::kCsv) {
        out << "inequality,min_slack\n";
        for (const auto &s : sweep.slacks) {
            std::ostringstream row;
            row.precision(17);
            row << s.name << ',' << s.slack << '\n';
            out << row.str();
        }
    } else {
        out << cfg.trials << " random joints, seed " << cfg.seed << '\n';
        for (const auto &s : sweep.slacks) {
            out << s.name << "  min slack " << fixed6(s.slack) << '\n';
        }
        out << (violated ? "violated" : "holds") << '\n';
    }
    return finish(cfg, violated);
}

int run_oracle(const RunConfig &cfg, std::ostream &out) {
    RacGame game = RacGame::uniform(cfg.n, cfg.m);
    game.input_dist = load_x_dist(cfg, cfg.n);
    std::uint64_t ic_violations = 0;
    std::uint64_t endpoint_violations = 0;
    const auto result = run_classical_oracle(game, cfg.cap == 0 ? kDefaultOracleCap : cfg.cap,
                                             [&](const Strategy &, const GameReport &report) {
                                                 if (report.i_value > cfg.m + kChainTolerance) {
                                                     ++ic_violations;
                                                 }
                                                 if (entropic_chain(report).endpoint_slack < -kChainTolerance) {
                                                     ++endpoint_violations;
                                                 }
                                             });
    const bool violated = ic_violations + endpoint_violations > 0;
    if (format_of(cfg) == Format::kJson) {
        print_json(out, Json{{"n", cfg.n},
                             {"m", cfg.m},
                             {"strategies", result.strategies},
                             {"max_success", result.max_success},
                             {"argmax_success", result.argmax_success},
                             {"max_I_bits", result.max_information},
                             {"argmax_I", result.argmax_information},
                             {"max_sum_sq_bias", result.max_sum_sq_bias},
                             {"ic_violations", ic_violations},
                             {"endpoint_violations", endpoint_violations}});
    } else {
        out << "strategies " << result.strategies << '\n';
        out << "max P = " << fixed6(result.max_success) << "  (" << result.argmax_success << ")\n";
        out << "max I = " << fixed6(result.max_information) << "  (" << result.argmax_information << ")\n";
        out << "max sum E^2 = " << fixed6(result.max_sum_sq_bias) << '\n';
        out << "I > m: " << ic_violations << "  endpoint violations: " << endpoint_violations << '\n';
    }
    return finish(cfg, violated);
}

int run_tsirelson_demo(const RunConfig &cfg, std::ostream &out) {
    const double e = parse_bias(cfg.bias);
    if (!(e >= 0.0 && e <= 1.0)) {
        fail(ErrorKind::kDomain, "bias must lie in [0, 1]");
    }
    if (cfg.levels < 1 || cfg.levels > 20) {
        fail(ErrorKind::kArgument, "--levels must lie in [1, 20]");
    }
    const double limit = 2.0 * std::numbers::ln2;
    Json rows = Json::array();
    bool violated = false;
    if (format_of(cfg) == Format::kTable) {
        out << "numerical illustration: pyramid biases against sum E_k^2 <= 2 ln 2\n";
        out << "L  n  E_k  sum E_k^2  2ln2  method\n";
    } else if (format_of(cfg) == Format::kCsv) {
        out << "L,n,E,E_k,sum_sq_bias,two_ln2,exceeds,method\n";
    }
    for (int level = 1; level <= cfg.levels; ++level) {
        const int n = 1 << level;
        double ek = std::pow(e, level);
        double sum_sq = std::pow(2.0 * e * e, level);
        std::string method = "formula";
        if (n <= max_n(cfg)) {
            const auto report = evaluate_rac(RacGame::uniform(n, 1), pyramid_strategy(e, level), {max_n(cfg)});
            ek = report.bias_per_k[0];
            sum_sq = report.bias_per_k.sum_of_squares();
            method = "exact";
        }
        const bool exceeds = sum_sq > limit + kSaturationTolerance;
        violated = violated || exceeds;
        if (format_of(cfg) == Format::kJson) {
            rows.push_back({{"L", level},
                            {"n", n},
                            {"E", e},
                            {"E_k", ek},
                            {"sum_sq_bias", sum_sq},
                            {"two_ln2", limit},
                            {"exceeds", exceeds},
                            {"method", method}});
        } else if (format_of(cfg) == Format::kCsv) {
            std::ostringstream row;
            row.precision(17);
            row << level << ',' << n << ',' << e << ',' << ek << ',' << sum_sq << ',' << limit << ','
                << (exceeds ? 1 : 0) << ',' << method << '\n';
            out << row.str();
        } else {
            out << level << "  " << n << "  " << fixed6(ek) << "  " << fixed6(sum_sq) << "  " << fixed6(limit) << "  "
                << method << (exceeds ? "  exceeds" : "") << '\n';
        }
    }
    if (format_of(cfg) == Format::kJson) {
        print_json(out, Json{{"illustration", "pyramid biases against sum E_k^2 <= 2 ln 2"}, {"rows", rows}});
    }
    return finish(cfg, violated);
}

void add_common(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--cap", cfg.cap, "Enumeration cap (max n, or strategy count for oracle)");
    cmd->add_flag("--expect-holds", cfg.expect_holds, "Exit with code 2 if a bound is violated");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Information-causality game simulator and bound checker", "icgame"};
    app.require_subcommand(1);

    auto *rac = app.add_subcommand("rac", "Evaluate a random-access-coding strategy");
    rac->add_option("--n", cfg.n, "Number of Alice's bits");
    rac->add_option("--m", cfg.m, "Message length in bits");
    rac->add_option("--strategy", cfg.strategy, "Strategy spec");
    rac->add_option("--dist", cfg.dist_file, "JSON distribution over x");
    add_common(rac, cfg);

    auto *ip = app.add_subcommand("inner-product", "Evaluate a box on the inner-product game");
    ip->add_option("--n", cfg.n, "Input length");
    ip->add_option("--box", cfg.box, "isotropic | pr | classical | gram-uniform");
    ip->add_option("--box-file", cfg.box_file, "JSON box table");
    ip->add_option("--bias", cfg.bias, "Isotropic box bias E (number or 'tsirelson')");
    ip->add_option("--alpha", cfg.alpha, "String value for the classical box a = alpha.x");
    ip->add_flag("--hw1", cfg.hw1, "Restrict Bob's inputs to Hamming weight one");
    ip->add_option("--dist", cfg.dist_file, "JSON distribution over x");
    add_common(ip, cfg);

    auto *bounds = app.add_subcommand("bounds", "Quadratic bias bound checks");
    bounds->add_option("--biases", cfg.biases_file, "JSON bias vector");
    bounds->add_option("--strategy", cfg.strategy, "Strategy spec to take biases from");
    bounds->add_option("--n", cfg.n, "Number of bits");
    bounds->add_option("--m", cfg.m, "Message length in bits");
    bounds->add_option("--dist", cfg.dist_file, "JSON distribution over x");
    add_common(bounds, cfg);

    auto *suite = app.add_subcommand("entropy-suite", "Entropy inequalities on random joints");
    suite->add_option("--seed", cfg.seed, "Random seed");
    suite->add_option("--trials", cfg.trials, "Number of random joints")->check(CLI::PositiveNumber);
    add_common(suite, cfg);

    auto *oracle = app.add_subcommand("oracle", "Exhaustive search over deterministic strategies");
    oracle->add_option("--n", cfg.n, "Number of Alice's bits");
    oracle->add_option("--m", cfg.m, "Message length in bits");
    oracle->add_option("--dist", cfg.dist_file, "JSON distribution over x");
    add_common(oracle, cfg);

    auto *demo = app.add_subcommand("tsirelson-demo", "Pyramid biases against the quadratic IC bound");
    demo->add_option("--bias", cfg.bias, "Box bias E (number or 'tsirelson')");
    demo->add_option("--levels", cfg.levels, "Largest pyramid depth L");
    add_common(demo, cfg);

    std::vector<const char *> argv{"icgame"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (demo->parsed() && demo->count("--bias") == 0) {
        cfg.bias = "0.75";
    }

    try {
        if (rac->parsed()) {
            return run_rac(cfg, out);
        }
        if (ip->parsed()) {
            return run_inner_product(cfg, out);
        }
        if (bounds->parsed()) {
            return run_bounds(cfg, out);
        }
        if (suite->parsed()) {
            return run_entropy_suite(cfg, out);
        }
        if (oracle->parsed()) {
            return run_oracle(cfg, out);
        }
        return run_tsirelson_demo(cfg, out);
    } catch (const Error &e) {
        err << "icgame: " << e.what() << '\n';
        return e.kind() == ErrorKind::kResource ? kExitResource : kExitUsage;
    }
}

}  // namespace icgame
