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
#include <optional>
#include <string>
#include <vector>

#include "mdsarray/lift.hpp"

namespace mdsarray {

ArrayCode build_c1(std::size_t m, std::size_t w, std::size_t r, std::size_t s,
                   std::optional<Field> field = std::nullopt);
ArrayCode build_c2(std::size_t nbar, std::size_t w, std::size_t r, std::size_t s,
                   std::optional<Field> field = std::nullopt);
ArrayCode build_c2prime(std::size_t nbar, std::size_t w, std::size_t r, std::size_t s,
                        std::optional<Field> field = std::nullopt);
ArrayCode build_c3(std::size_t nbar, std::size_t w, std::size_t r, std::size_t s,
                   std::optional<Field> field = std::nullopt);

// Default field bounds (q must exceed the bound).
std::size_t c1_field_bound(std::size_t m, std::size_t w, std::size_t s);
std::size_t c2_field_bound(std::size_t nbar, std::size_t w, std::size_t s);
std::size_t c3_field_bound(std::size_t nbar, std::size_t w, std::size_t s);

struct ConditionClause {
  std::string name;
  bool pass = true;
  std::string witness;  // first counterexample, empty on pass
};

struct ConditionReport {
  Family family = Family::Custom;
  std::vector<ConditionClause> clauses;
  bool pass() const;
};

// Clauses i-iv for a lifted C0 code with x_{t,i} = x_i^t.
ConditionReport check_c1_tables(const Field& f, std::size_t m, std::size_t w,
                                const std::vector<Felt>& x, const LambdaTable& lambda);
// Clauses i-ii on xi_{i,u} (C2 and C2P), nbar is the congruence modulus.
ConditionReport check_xi_tables(std::size_t nbar, const std::vector<std::vector<Felt>>& xi);
// Clauses i-ii for a lifted YB2 code, checked for every failed node.
ConditionReport check_c3_tables(const Field& f, std::size_t nbar, std::size_t w,
                                const std::vector<Felt>& x, const LambdaTable& lambda);

ConditionReport check_conditions(const ArrayCode& code);

}  // namespace mdsarray
