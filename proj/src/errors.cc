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

#include "icgame/errors.h"

namespace icgame {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kName:
            return "name error";
        case ErrorKind::kDomain:
            return "domain error";
        case ErrorKind::kArgument:
            return "argument error";
        case ErrorKind::kShape:
            return "shape error";
        case ErrorKind::kMatrix:
            return "matrix error";
        case ErrorKind::kWiring:
            return "wiring error";
        case ErrorKind::kResource:
            return "resource error";
        case ErrorKind::kInfeasible:
            return "infeasibility error";
        case ErrorKind::kConstruction:
            return "construction error";
        case ErrorKind::kNotApplicable:
            return "not applicable";
        case ErrorKind::kReport:
            return "report error";
        case ErrorKind::kFormat:
            return "format error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace icgame
