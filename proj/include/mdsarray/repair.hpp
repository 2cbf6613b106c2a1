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
#include <utility>
#include <vector>

#include "mdsarray/codec.hpp"

namespace mdsarray {

struct RepairPlan {
  std::size_t failed = 0;
  std::vector<std::size_t> helpers;     // ascending, size d
  std::vector<std::size_t> avoided;     // ascending, size r - w
  std::vector<std::size_t> compulsory;  // subset of helpers
  std::vector<SelectorSum> repair;      // R_{failed, helpers[h]}
  std::vector<SelectorSum> select;      // S_{failed, t}
};

// Nodes that may be left out when repairing the failed node.
std::vector<std::size_t> avoidable_nodes(const ArrayCode& code, std::size_t failed);
std::vector<std::vector<std::size_t>> admissible_avoid_sets(const ArrayCode& code,
                                                            std::size_t failed);

RepairPlan plan_repair(const ArrayCode& code, std::size_t failed,
                       std::optional<std::vector<std::size_t>> avoid = std::nullopt);

// B with B * R_{i,j} = S_{i,t} * A_{t,j}.
Mat factor_interference(const ArrayCode& code, const RepairPlan& plan, std::size_t j,
                        std::size_t t);

struct HelperTraffic {
  std::size_t node = 0;
  std::size_t symbols = 0;
  std::size_t accessed = 0;
};

struct RepairReport {
  std::size_t failed = 0;
  std::vector<std::size_t> helpers;
  std::vector<std::size_t> avoided;
  std::size_t downloaded_symbols = 0;
  std::size_t accessed_columns = 0;
  std::size_t gamma_optimal = 0;
  std::size_t ratio_num = 1;
  std::size_t ratio_den = 1;
  std::vector<HelperTraffic> per_helper;
};

// Compiled repair for one (code, plan): the regenerated column is a fixed
// linear map of the downloaded symbols.
class Repairer {
 public:
  Repairer(const ArrayCode& code, RepairPlan plan);

  const RepairPlan& plan() const { return plan_; }
  // R_{i,j} f_j for each helper, in helper order.
  std::vector<Column> download(const Codeword& cw) const;
  Column regenerate(const std::vector<Column>& downloads) const;
  RepairReport report() const;

 private:
  Field field_;
  CodeParams params_;
  RepairPlan plan_;
  Mat map_;  // N x gamma
};

std::pair<Column, RepairReport> execute_repair(const ArrayCode& code, const Codeword& cw,
                                               const RepairPlan& plan);

struct RepairFailure {
  std::size_t failed = 0;
  std::vector<std::size_t> avoided;
  std::string reason;
};

struct RepairSuiteReport {
  std::size_t runs = 0;
  std::size_t passes = 0;
  std::size_t ratio_num = 0;
  std::size_t ratio_den = 0;
  std::size_t gamma = 0;
  std::size_t gamma_optimal = 0;
  bool bandwidth_exact = true;
  std::vector<RepairFailure> failures;
  bool pass() const { return passes == runs && bandwidth_exact; }
};

RepairSuiteReport verify_repair_all(const ArrayCode& code, std::uint64_t seed = 0);

// (sum_u V_{i,u}) f: entry b is mu^{(g_{i,0}(b))}.
std::vector<Felt> aggregate_projection(const Field& f, const Column& column, std::size_t i,
                                       std::size_t w, std::size_t digits);

// Coefficients of x^iota * prod_u (x - roots[u]) for iota in [0, r - w).
Mat annihilator_matrix(const Field& f, const std::vector<Felt>& roots, std::size_t r);

// For diagonal families: P kills the failed node's Vandermonde columns and
// rank(PM) = r - w for every index a. Throws RankDeficient with a witness.
bool annihilator_check_tables(const Field& f, std::size_t nbar, std::size_t w, std::size_t r,
                              const std::vector<std::vector<Felt>>& xi, std::size_t failed);
bool annihilator_check(const ArrayCode& code, std::size_t failed);

}  // namespace mdsarray
