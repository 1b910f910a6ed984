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

#ifndef ICGAME_ERRORS_H
#define ICGAME_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace icgame {

enum class ErrorKind {
    kName,            // unknown variable name
    kDomain,          // scalar argument outside its allowed range
    kArgument,        // malformed or inconsistent arguments
    kShape,           // table dimensions inconsistent
    kMatrix,          // stochastic matrix not column-normalized
    kWiring,          // strategy/box alphabets do not match the game
    kResource,        // enumeration size exceeds the configured cap
    kInfeasible,      // requested biases violate the quadratic bound
    kConstruction,    // correlator outside [-1, 1]
    kNotApplicable,   // quantity undefined for this report
    kReport,          // report is missing required data
    kFormat,          // malformed input file
};

std::string_view error_kind_name(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers (and the CLI
/// exit-code mapping) what went wrong.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string &message);

}  // namespace icgame

#endif
