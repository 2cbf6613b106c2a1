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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "mdsarray/lift.hpp"

namespace mdsarray {

struct CodeSpec {
  Family family = Family::C1;
  std::size_t nbar = 0;  // for C0/C1 this is 2m
  std::size_t w = 2;
  std::size_t r = 3;
  std::size_t s = 1;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> seed;

  std::size_t m() const { return nbar / 2; }
};

CodeSpec parse_code_spec(const nlohmann::json& j);
CodeSpec load_code_spec(const std::string& path);
nlohmann::json to_json(const CodeSpec& spec);

// Runs the builder named by the spec; q (if set) overrides the default field.
ArrayCode build_code(const CodeSpec& spec);

// Summary of a built code: parameters, field and bandwidth figures.
nlohmann::json describe(const ArrayCode& code);

}  // namespace mdsarray
