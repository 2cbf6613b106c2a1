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
#include <vector>

#include "mdsarray/gf.hpp"

namespace mdsarray {

class Mat;

using Digits = std::vector<std::size_t>;

std::size_t ipow(std::size_t base, std::size_t exp);

// Digits of a in radix w, a_0 most significant.
Digits expand(std::size_t a, std::size_t w, std::size_t m);
std::size_t compose(const Digits& digits, std::size_t w);

// Returns the i-th digit of a (a_0 most significant).
std::size_t digit_of(std::size_t a, std::size_t i, std::size_t w, std::size_t m);

// a(i,u)
std::size_t replace_digit(std::size_t a, std::size_t i, std::size_t u,
                          std::size_t w, std::size_t m);

// g_{i,u}(a): a has m-1 digits, result has m.
std::size_t insert_digit(std::size_t a, std::size_t i, std::size_t u,
                         std::size_t w, std::size_t m);

std::size_t digit_add(std::size_t u, std::size_t v, std::size_t w);

// A 0/1 row-selection matrix; row r is e_{rows[r]}.
struct Selector {
  std::vector<std::size_t> rows;
  std::size_t width = 0;
};

// V_{i,t}: row a is e_{g_{i,t}(a)}, a ascending.
Selector partition_selector(std::size_t i, std::size_t t, std::size_t w,
                            std::size_t m);

// A 0/1 matrix whose rows are sums of distinct basis vectors. Covers single
// selectors, sums of partition selectors and the identity.
class SelectorSum {
 public:
  SelectorSum() = default;
  SelectorSum(std::vector<std::vector<std::size_t>> rows, std::size_t width);
  static SelectorSum identity(std::size_t n);
  static SelectorSum from(const Selector& s);
  // Sum of equally sized selectors.
  static SelectorSum sum(const std::vector<Selector>& parts);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<std::vector<std::size_t>>& rows() const { return rows_; }
  std::size_t nonzero_columns() const;
  bool is_identity() const;

  std::vector<Felt> apply(const Field& f, const std::vector<Felt>& v) const;
  Mat times(const Field& f, const Mat& m) const;
  Mat to_dense() const;

 private:
  std::vector<std::vector<std::size_t>> rows_;
  std::size_t width_ = 0;
};

}  // namespace mdsarray
