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

#include "icgame/json_io.h"

#include <fstream>
#include <sstream>

#include "icgame/errors.h"

namespace icgame {

namespace {

Json named_pairs(const std::vector<NamedValue> &values) {
    Json arr = Json::array();
    for (const auto &v : values) {
        arr.push_back(Json::array({v.label, v.value}));
    }
    return arr;
}

template <typename Fn>
auto guarded(Fn &&fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Json::exception &e) {
        fail(ErrorKind::kFormat, e.what());
    }
}

}  // namespace

Json to_json(const JointDistribution &dist) {
    Json vars = Json::array();
    for (const auto &v : dist.variables()) {
        vars.push_back({{"name", v.name}, {"cardinality", v.cardinality}});
    }
    Json table = Json::array();
    for (double p : dist.table()) {
        table.push_back(p);
    }
    return {{"variables", vars}, {"table", table}};
}

JointDistribution joint_from_json(const Json &j) {
    return guarded([&] {
        std::vector<Variable> vars;
        for (const auto &v : j.at("variables")) {
            vars.push_back({v.at("name").get<std::string>(), v.at("cardinality").get<int>()});
        }
        return JointDistribution(std::move(vars), j.at("table").get<std::vector<double>>());
    });
}

Json to_json(const NoSignallingBox &box) {
    Json table = Json::array();
    for (int x = 0; x < box.x_size(); ++x) {
        Json row = Json::array();
        for (int y = 0; y < box.y_size(); ++y) {
            const auto &s = box.slice(x, y);
            row.push_back(Json::array({Json::array({s[0][0], s[0][1]}), Json::array({s[1][0], s[1][1]})}));
        }
        table.push_back(row);
    }
    return {{"x_size", box.x_size()}, {"y_size", box.y_size()}, {"table", table}};
}

NoSignallingBox box_from_json(const Json &j) {
    return guarded([&] {
        const int x_size = j.at("x_size").get<int>();
        const int y_size = j.at("y_size").get<int>();
        const auto &table = j.at("table");
        if (!table.is_array() || static_cast<int>(table.size()) != x_size) {
            fail(ErrorKind::kShape, "box table must have x_size rows");
        }
        std::vector<NoSignallingBox::Slice> slices;
        for (const auto &row : table) {
            if (!row.is_array() || static_cast<int>(row.size()) != y_size) {
                fail(ErrorKind::kShape, "box table rows must have y_size entries");
            }
            for (const auto &cell : row) {
                NoSignallingBox::Slice s{};
                if (cell.size() != 2 || cell.at(0).size() != 2 || cell.at(1).size() != 2) {
                    fail(ErrorKind::kShape, "box cells must be 2x2");
                }
                for (std::size_t a = 0; a < 2; ++a) {
                    for (std::size_t b = 0; b < 2; ++b) {
                        s[a][b] = cell.at(a).at(b).get<double>();
                    }
                }
                slices.push_back(s);
            }
        }
        return NoSignallingBox(x_size, y_size, std::move(slices));
    });
}

Json to_json(const GameReport &report) {
    Json j;
    j["game"] = report.game;
    if (!report.strategy.empty()) {
        j["strategy"] = report.strategy;
    }
    j["n"] = report.n;
    if (report.game == "rac") {
        j["m"] = report.m;
    }
    j["success_probability"] = report.success_probability;
    j["bias_per_k"] = report.bias_per_k.values;
    j["success_per_k"] = report.success_per_k;
    if (report.game == "rac") {
        j["I_bits"] = report.i_value;
        j["I_per_k"] = report.info_per_k;
        Json terms = Json::object();
        for (const auto &t : report.entropic_terms) {
            terms[t.label] = t.value;
        }
        j["entropic_terms"] = terms;
        j["classical"] = report.classical;
        j["applicable_bound"] = report.applicable_bound;
    }
    return j;
}

Json to_json(const BoundReport &bound) {
    return {{"kind", bound_kind_name(bound.kind)},
            {"lhs", bound.lhs},
            {"rhs", bound.rhs},
            {"status", bound_status_name(bound.status)}};
}

Json to_json(const IcVerdict &verdict) {
    Json j;
    j["I_bits"] = verdict.i_value;
    j["m"] = verdict.m;
    j["form"] = verdict.form;
    j["bound"] = verdict.bound;
    j["status"] = verdict_name(verdict.status);
    j["message_bound_violated"] = verdict.message_bound_violated;
    j["chain_applicable"] = verdict.chain_applicable;
    j["endpoint_slack"] = verdict.endpoint_slack;
    j["chain_terms"] = named_pairs(verdict.chain_terms);
    j["chain_slacks"] = named_pairs(verdict.chain_slacks);
    return j;
}

BiasVector biases_from_json(const Json &j) {
    return guarded([&] {
        BiasVector b;
        b.values = j.is_array() ? j.get<std::vector<double>>() : j.at("values").get<std::vector<double>>();
        if (b.values.empty()) {
            fail(ErrorKind::kFormat, "bias vector is empty");
        }
        b.validate();
        return b;
    });
}

std::vector<double> input_dist_from_json(const Json &j, int n) {
    return guarded([&] {
        if (j.is_array()) {
            auto p = j.get<std::vector<double>>();
            if (p.size() != (std::size_t{1} << n)) {
                fail(ErrorKind::kFormat, "input distribution needs 2^n entries");
            }
            return p;
        }
        auto joint = joint_from_json(j).marginal(x_vars(n));
        for (const auto &v : joint.variables()) {
            if (v.cardinality != 2) {
                fail(ErrorKind::kFormat, "input variables must be bits");
            }
        }
        return std::vector<double>(joint.table().begin(), joint.table().end());
    });
}

std::string to_csv(const GameReport &report) {
    std::ostringstream out;
    out.precision(17);
    out << "k,E_k,I_c\n";
    for (std::size_t k = 0; k < report.bias_per_k.size(); ++k) {
        out << k + 1 << ',' << report.bias_per_k[k] << ',';
        if (k < report.info_per_k.size()) {
            out << report.info_per_k[k];
        }
        out << '\n';
    }
    return out.str();
}

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::kFormat, "cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception &e) {
        fail(ErrorKind::kFormat, "'" + path + "': " + e.what());
    }
}

}  // namespace icgame
