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
#include <vector>

#include "json.hpp"
#include "mdsarray/lift.hpp"

namespace mdsarray::cli {

// One parameter row. C0/C1 rows with odd nbar use m = ceil(nbar/2) and are
// formula-only (no builder exists for them).
struct TableRow {
  Family family = Family::C1;
  std::size_t r = 0;
  std::size_t nbar = 0;
  std::size_t s = 1;
  std::size_t w = 2;
  CodeParams params;
  std::optional<std::uint64_t> N;          // empty on overflow
  std::size_t q_bound = 0;                  // builder bound, q must exceed it
  std::optional<std::uint64_t> q_generic;   // N * C(n-1, r-1) + 1, empty on overflow
  BandwidthRatio ratio;
};

struct TableQuery {
  Family family = Family::C1;
  std::vector<std::size_t> r, w, nbar, s;
};

std::vector<TableQuery> desk_rows();

// Invalid combinations are skipped.
std::vector<TableRow> table_rows(const TableQuery& query);
std::optional<TableRow> table_row(Family family, std::size_t r, std::size_t nbar,
                                  std::size_t s, std::size_t w);

// "1" or "1+0.1250", fractional part rounded up to 4 places.
std::string format_ratio(std::size_t num, std::size_t den);
// dc/(n-1) as a percentage with 2 decimals.
std::string format_percent(std::size_t num, std::size_t den);

// "3", "3-6" or "2,4,8" (pieces may mix).
std::vector<std::size_t> parse_range(const std::string& text);

std::string render_text(const std::vector<TableRow>& rows);
std::string render_csv(const std::vector<TableRow>& rows);
nlohmann::json render_json(const std::vector<TableRow>& rows);

}  // namespace mdsarray::cli
