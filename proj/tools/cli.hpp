// Copyright 2026 The mdsarray Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mdsarray/cluster.hpp"
#include "mdsarray/error.hpp"
#include "mdsarray/families.hpp"

namespace mdsarray::cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kViolation = 2, kIo = 3 };

int exit_code_for(ErrorKind kind);

nlohmann::json to_json(const RepairReport& report);
nlohmann::json to_json(const MdsReport& report);
nlohmann::json to_json(const RepairSuiteReport& report);
nlohmann::json to_json(const ConditionReport& report);
nlohmann::json to_json(const NodeRepairReport& report);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mdsarray::cli
