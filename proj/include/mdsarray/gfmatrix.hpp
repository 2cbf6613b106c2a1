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

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Felt> data);

  static Mat identity(std::size_t n);
  static Mat scalar(std::size_t n, Felt v);
  static Mat diagonal(const std::vector<Felt>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  Felt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Felt operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Felt>& data() const { return data_; }

  bool is_zero() const;
  bool is_diagonal() const;
  bool is_upper_triangular() const;
  std::vector<Felt> diag() const;

  Mat submatrix_rows(const std::vector<std::size_t>& rows) const;
  Mat submatrix_cols(const std::vector<std::size_t>& cols) const;
  Mat transpose() const;

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Felt> data_;
};

Mat multiply(const Field& f, const Mat& a, const Mat& b);
Mat add(const Field& f, const Mat& a, const Mat& b);
Mat sub(const Field& f, const Mat& a, const Mat& b);
Mat scale(const Field& f, const Mat& a, Felt s);
Mat power(const Field& f, const Mat& a, std::size_t e);
std::vector<Felt> matvec(const Field& f, const Mat& a, const std::vector<Felt>& v);
Mat vstack(const std::vector<Mat>& parts);
Mat hstack(const std::vector<Mat>& parts);

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& f, Mat& m);
std::size_t rank(const Field& f, const Mat& m);
// Row indices forming a basis of the row space (first-nonzero pivoting).
std::vector<std::size_t> independent_rows(const Field& f, const Mat& m);
bool nonsingular(const Field& f, const Mat& m);

std::vector<Felt> solve(const Field& f, const Mat& a, const std::vector<Felt>& b);
Mat inverse(const Field& f, const Mat& a);
// L with L*A = I for a tall matrix of full column rank.
Mat left_inverse(const Field& f, const Mat& a);
// X with A*X = I for a wide matrix of full row rank.
Mat right_inverse(const Field& f, const Mat& a);

// r x n grid of N x N blocks.
class BlockMat {
 public:
  BlockMat() = default;
  BlockMat(std::size_t r, std::size_t n, std::size_t block);

  std::size_t block_rows() const { return r_; }
  std::size_t block_cols() const { return n_; }
  std::size_t block_size() const { return bs_; }
  Mat& at(std::size_t t, std::size_t i) { return grid_[t * n_ + i]; }
  const Mat& at(std::size_t t, std::size_t i) const { return grid_[t * n_ + i]; }

  // rN x |cols|N matrix built from the chosen block columns.
  Mat assemble(const std::vector<std::size_t>& cols) const;
  Mat assemble() const;

 private:
  std::size_t r_ = 0, n_ = 0, bs_ = 0;
  std::vector<Mat> grid_;
};

bool is_block_vandermonde_nonsingular(const Field& f, const std::vector<Mat>& blocks);

// grid[t][i] = B_{t,i}, t,i in [0, r).
bool is_upper_triangular_family_nonsingular(const Field& f,
                                            const std::vector<std::vector<Mat>>& grid);

}  // namespace mdsarray
