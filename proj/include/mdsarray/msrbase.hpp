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
#include <vector>

#include "mdsarray/digits.hpp"
#include "mdsarray/gf.hpp"
#include "mdsarray/gfmatrix.hpp"

namespace mdsarray {

enum class BaseKind { C0, YB1, YB2 };

const char* to_string(BaseKind kind);

struct MsrParams {
  std::size_t nbar = 0;
  std::size_t kbar = 0;
  std::size_t r = 0;
  std::size_t w = 0;
  std::size_t digits = 0;  // m for C0, nbar for YB1/YB2
  std::size_t dbar = 0;
  std::size_t N = 0;
};

using LambdaTable = std::vector<std::vector<Felt>>;  // [node][digit value]

struct MsrCode {
  BaseKind kind;
  MsrParams params;
  Field field;
  LambdaTable lambda;
  BlockMat blocks;  // blocks.at(t, i) = Abar_{t,i}

  const Mat& block(std::size_t t, std::size_t i) const { return blocks.at(t, i); }
  // Digit of the index that node i's repair schema acts on.
  std::size_t digit_position(std::size_t i) const;
  SelectorSum repair_matrix(std::size_t i, std::size_t j) const;
  SelectorSum select_matrix(std::size_t i, std::size_t t) const;
};

LambdaTable c0_lambda(const Field& f, std::size_t m, std::size_t w);

MsrCode build_c0(std::size_t m, std::size_t w, std::size_t r,
                 std::optional<Field> field = std::nullopt);
MsrCode build_yb1(std::size_t nbar, std::size_t w, std::size_t r,
                  std::optional<Field> field = std::nullopt,
                  std::optional<LambdaTable> lambda = std::nullopt);
MsrCode build_yb2(std::size_t nbar, std::size_t w, std::size_t r,
                  std::optional<Field> field = std::nullopt);

// Abar_i of YB2 (the t = 1 block) for a given lambda table.
Mat yb2_generator(const Field& f, const LambdaTable& lambda, std::size_t i,
                  std::size_t w, std::size_t nbar);

}  // namespace mdsarray
