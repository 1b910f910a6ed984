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

#ifndef ICGAME_JSON_IO_H
#define ICGAME_JSON_IO_H

#include <string>
#include <vector>

#include "json.hpp"

#include "icgame/analysis.h"
#include "icgame/boxes.h"
#include "icgame/games.h"
#include "icgame/gram.h"
#include "icgame/probcore.h"

namespace icgame {

using Json = nlohmann::ordered_json;

// {"variables": [{"name": str, "cardinality": int}, ...], "table": [float, ...]}
Json to_json(const JointDistribution &dist);
JointDistribution joint_from_json(const Json &j);

// {"x_size": int, "y_size": int, "table": [x][y][a][b]}
Json to_json(const NoSignallingBox &box);
NoSignallingBox box_from_json(const Json &j);

// success_probability, bias_per_k, I_bits, entropic_terms plus context fields.
Json to_json(const GameReport &report);

// {"kind": str, "lhs": float, "rhs": float, "status": "pass|saturated|violated"}
Json to_json(const BoundReport &bound);

// chain_terms / chain_slacks are arrays of [label, value] pairs, in derivation order.
Json to_json(const IcVerdict &verdict);

/// Bias vector from either a bare array or {"values": [...]}.
BiasVector biases_from_json(const Json &j);

/// Distribution over Alice's 2^n strings: either a bare array indexed by
/// string value (x_1 most significant) or a JointDistribution over x1..xn.
std::vector<double> input_dist_from_json(const Json &j, int n);

/// Rows "k,E_k,I_c" with 1-based k and a header line.
std::string to_csv(const GameReport &report);

/// Parses a file; throws kFormat on I/O or syntax errors.
Json read_json_file(const std::string &path);

}  // namespace icgame

#endif
