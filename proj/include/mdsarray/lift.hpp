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
#include <memory>
#include <string>
#include <vector>

#include "mdsarray/msrbase.hpp"

namespace mdsarray {

enum class Family { C0, YB1, YB2, C1, C2, C2P, C3, Custom };

const char* to_string(Family f);
Family family_from_string(const std::string& name);

struct CodeParams {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t d = 0;
  std::size_t dc = 0;
  std::size_t N = 0;
  std::size_t w = 0;
  std::size_t nbar = 0;
  std::size_t s = 0;
};

struct LiftSpec {
  std::size_t s = 1;
  std::vector<std::vector<Felt>> x;  // [t][node]

  static LiftSpec identity(std::size_t s, std::size_t nbar, std::size_t r);
  // x_{t,i} = x_i^t
  static LiftSpec powers(const Field& f, const std::vector<Felt>& xi, std::size_t r,
                         std::size_t nbar);
};

struct CoeffTables {
  std::vector<Felt> x;                  // power-form multipliers, one per node
  std::vector<std::vector<Felt>> xi;    // C2: xi_{i,u}; C2P: xi'_{i,u}
  Felt delta = 0;                       // C2 only
};

struct ArrayCode {
  Family family = Family::Custom;
  CodeParams params;
  Field field;
  std::shared_ptr<const MsrCode> base;
  std::vector<std::vector<Felt>> x;  // [t][node]; empty for direct constructions
  BlockMat blocks;
  CoeffTables coeffs;

  const Mat& block(std::size_t t, std::size_t i) const { return blocks.at(t, i); }
  std::size_t nbar_of(std::size_t i) const { return i % params.nbar; }
  bool congruent(std::size_t i, std::size_t j) const {
    return i % params.nbar == j % params.nbar;
  }
  SelectorSum repair_matrix(std::size_t i, std::size_t j) const;
  SelectorSum select_matrix(std::size_t i, std::size_t t) const;
};

ArrayCode lift(std::shared_ptr<const MsrCode> base, const LiftSpec& spec,
               Family tag = Family::Custom);

// Base code as an s = 1 identity lift.
ArrayCode as_array_code(const MsrCode& base);

std::vector<std::size_t> compulsory_helpers(const ArrayCode& code, std::size_t i);

struct BandwidthRatio {
  std::size_t num = 1;
  std::size_t den = 1;
  std::size_t gamma = 0;
  std::size_t gamma_optimal = 0;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

BandwidthRatio bandwidth_ratio(const CodeParams& p);
inline BandwidthRatio bandwidth_ratio(const ArrayCode& code) {
  return bandwidth_ratio(code.params);
}

}  // namespace mdsarray
