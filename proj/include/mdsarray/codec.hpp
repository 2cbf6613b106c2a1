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

#include "mdsarray/lift.hpp"

namespace mdsarray {

using Column = std::vector<Felt>;

struct Codeword {
  std::vector<Column> columns;  // f_0 .. f_{n-1}, each of length N
};

// Recovers a fixed set of erased columns from the others. Precomputes the
// linear map once so repeated use (encoding many stripes) is a matvec.
class ErasureSolver {
 public:
  ErasureSolver(const ArrayCode& code, std::vector<std::size_t> erased);

  const std::vector<std::size_t>& erased() const { return erased_; }
  const std::vector<std::size_t>& known() const { return known_; }
  // Overwrites the erased columns of cw using the known ones.
  void solve(Codeword& cw) const;

 private:
  Field field_;
  std::size_t N_;
  std::vector<std::size_t> erased_;
  std::vector<std::size_t> known_;
  Mat map_;  // erased symbols = map_ * known symbols
};

std::vector<std::size_t> default_parity_positions(const ArrayCode& code);

Codeword encode(const ArrayCode& code, const std::vector<Column>& data,
                const std::vector<std::size_t>& parity_positions);
Codeword encode(const ArrayCode& code, const std::vector<Column>& data);

// Columns set to nullopt are erased.
Codeword decode_erasures(const ArrayCode& code, const std::vector<std::optional<Column>>& partial);

// Stacked sum_i A_{t,i} f_i for t in [0, r).
std::vector<Felt> parity_residual(const ArrayCode& code, const Codeword& cw);
bool is_codeword(const ArrayCode& code, const Codeword& cw);

std::vector<Column> random_data(const ArrayCode& code, std::size_t columns, std::uint64_t seed);
Codeword random_codeword(const ArrayCode& code, std::uint64_t seed);
// Random kernel vector of the full parity-check matrix; needs no MDS property.
Codeword sample_codeword(const ArrayCode& code, std::uint64_t seed);

struct MdsReport {
  std::size_t patterns = 0;
  std::size_t determinant_pass = 0;
  std::size_t decode_pass = 0;
  bool agree = true;
  std::vector<std::vector<std::size_t>> failures;  // patterns failing either mode
  bool pass() const { return determinant_pass == patterns && decode_pass == patterns && agree; }
};

MdsReport verify_mds(const ArrayCode& code, std::uint64_t seed = 0);

bool verify_optimal_update(const ArrayCode& code);

// All k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(const std::vector<std::size_t>& items,
                                                   std::size_t k);

}  // namespace mdsarray
