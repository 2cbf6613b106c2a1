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

#include "mdsarray/gfmatrix.hpp"

#include <string>

#include "mdsarray/error.hpp"

namespace mdsarray {

namespace {

void same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::ShapeMismatch, what);
  }
}

}  // namespace

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Felt> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorKind::ShapeMismatch, "Mat data length");
}

Mat Mat::identity(std::size_t n) { return scalar(n, 1); }

Mat Mat::scalar(std::size_t n, Felt v) {
  Mat m(n, n);
  for (std::size_t a = 0; a < n; ++a) m(a, a) = v;
  return m;
}

Mat Mat::diagonal(const std::vector<Felt>& diag) {
  Mat m(diag.size(), diag.size());
  for (std::size_t a = 0; a < diag.size(); ++a) m(a, a) = diag[a];
  return m;
}

bool Mat::is_zero() const {
  for (Felt v : data_) {
    if (v) return false;
  }
  return true;
}

bool Mat::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c)) return false;
    }
  }
  return true;
}

bool Mat::is_upper_triangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < r && c < cols_; ++c) {
      if ((*this)(r, c)) return false;
    }
  }
  return true;
}

std::vector<Felt> Mat::diag() const {
  std::vector<Felt> d;
  for (std::size_t a = 0; a < rows_ && a < cols_; ++a) d.push_back((*this)(a, a));
  return d;
}

Mat Mat::submatrix_rows(const std::vector<std::size_t>& rows) const {
  Mat out(rows.size(), cols_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(rows[r], c);
  }
  return out;
}

Mat Mat::submatrix_cols(const std::vector<std::size_t>& cols) const {
  Mat out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(r, cols[c]);
  }
  return out;
}

Mat Mat::transpose() const {
  Mat out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Mat multiply(const Field& f, const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "multiply");
  Mat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Felt v = a(r, k);
      if (!v) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        Felt w = b(k, c);
        if (w) out(r, c) = f.add(out(r, c), f.mul(v, w));
      }
    }
  }
  return out;
}

Mat add(const Field& f, const Mat& a, const Mat& b) {
  same_shape(a, b, "add");
  Mat out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.add(a(r, c), b(r, c));
  }
  return out;
}

Mat sub(const Field& f, const Mat& a, const Mat& b) {
  same_shape(a, b, "sub");
  Mat out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.sub(a(r, c), b(r, c));
  }
  return out;
}

Mat scale(const Field& f, const Mat& a, Felt s) {
  Mat out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.mul(a(r, c), s);
  }
  return out;
}

Mat power(const Field& f, const Mat& a, std::size_t e) {
  if (!a.square()) throw Error(ErrorKind::ShapeMismatch, "power of non-square matrix");
  Mat acc = Mat::identity(a.rows());
  for (std::size_t i = 0; i < e; ++i) acc = multiply(f, acc, a);
  return acc;
}

std::vector<Felt> matvec(const Field& f, const Mat& a, const std::vector<Felt>& v) {
  if (a.cols() != v.size()) throw Error(ErrorKind::ShapeMismatch, "matvec");
  std::vector<Felt> out(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Felt acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) && v[c]) acc = f.add(acc, f.mul(a(r, c), v[c]));
    }
    out[r] = acc;
  }
  return out;
}

Mat vstack(const std::vector<Mat>& parts) {
  if (parts.empty()) return Mat();
  std::size_t rows = 0, cols = parts.front().cols();
  for (const auto& p : parts) {
    if (p.cols() != cols) throw Error(ErrorKind::ShapeMismatch, "vstack");
    rows += p.rows();
  }
  Mat out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = p(r, c);
    }
    r0 += p.rows();
  }
  return out;
}

Mat hstack(const std::vector<Mat>& parts) {
  if (parts.empty()) return Mat();
  std::size_t rows = parts.front().rows(), cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw Error(ErrorKind::ShapeMismatch, "hstack");
    cols += p.cols();
  }
  Mat out(rows, cols);
  std::size_t c0 = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < p.cols(); ++c) out(r, c0 + c) = p(r, c);
    }
    c0 += p.cols();
  }
  return out;
}

std::vector<std::size_t> rref(const Field& f, Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    Felt inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Felt factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c)) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Field& f, const Mat& m) {
  Mat copy = m;
  return rref(f, copy).size();
}

std::vector<std::size_t> independent_rows(const Field& f, const Mat& m) {
  Mat t = m.transpose();
  return rref(f, t);
}

bool nonsingular(const Field& f, const Mat& m) {
  return m.square() && rank(f, m) == m.rows();
}

std::vector<Felt> solve(const Field& f, const Mat& a, const std::vector<Felt>& b) {
  if (!a.square() || b.size() != a.rows()) throw Error(ErrorKind::ShapeMismatch, "solve");
  Mat aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref(f, aug);
  if (pivots.size() < a.rows() || pivots.back() >= a.cols()) {
    throw Error(ErrorKind::SingularSystem,
                "rank below " + std::to_string(a.rows()) + " in solve");
  }
  std::vector<Felt> x(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) x[r] = aug(r, a.cols());
  return x;
}

Mat inverse(const Field& f, const Mat& a) {
  if (!a.square()) throw Error(ErrorKind::ShapeMismatch, "inverse of non-square matrix");
  std::size_t n = a.rows();
  Mat aug = hstack({a, Mat::identity(n)});
  auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots.back() >= n) {
    throw Error(ErrorKind::SingularSystem, "matrix of order " + std::to_string(n) + " is singular");
  }
  Mat out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

Mat left_inverse(const Field& f, const Mat& a) {
  auto rows = independent_rows(f, a);
  if (rows.size() < a.cols()) {
    throw Error(ErrorKind::SingularSystem, "matrix lacks full column rank");
  }
  Mat inv = inverse(f, a.submatrix_rows(rows));
  Mat out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t k = 0; k < rows.size(); ++k) out(r, rows[k]) = inv(r, k);
  }
  return out;
}

Mat right_inverse(const Field& f, const Mat& a) {
  Mat copy = a;
  auto cols = rref(f, copy);
  if (cols.size() < a.rows()) {
    throw Error(ErrorKind::SingularSystem, "matrix lacks full row rank");
  }
  Mat inv = inverse(f, a.submatrix_cols(cols));
  Mat out(a.cols(), a.rows());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t c = 0; c < a.rows(); ++c) out(cols[k], c) = inv(k, c);
  }
  return out;
}

BlockMat::BlockMat(std::size_t r, std::size_t n, std::size_t block)
    : r_(r), n_(n), bs_(block), grid_(r * n, Mat(block, block)) {}

Mat BlockMat::assemble(const std::vector<std::size_t>& cols) const {
  Mat out(r_ * bs_, cols.size() * bs_);
  for (std::size_t t = 0; t < r_; ++t) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (cols[k] >= n_) throw Error(ErrorKind::OutOfRange, "block column");
      const Mat& b = at(t, cols[k]);
      for (std::size_t x = 0; x < bs_; ++x) {
        for (std::size_t y = 0; y < bs_; ++y) out(t * bs_ + x, k * bs_ + y) = b(x, y);
      }
    }
  }
  return out;
}

Mat BlockMat::assemble() const {
  std::vector<std::size_t> all(n_);
  for (std::size_t i = 0; i < n_; ++i) all[i] = i;
  return assemble(all);
}

bool is_block_vandermonde_nonsingular(const Field& f, const std::vector<Mat>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!blocks[i].square() || blocks[i].rows() != blocks.front().rows()) {
      throw Error(ErrorKind::ShapeMismatch, "Vandermonde blocks differ in order");
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (!(multiply(f, blocks[i], blocks[j]) == multiply(f, blocks[j], blocks[i]))) {
        throw Error(ErrorKind::NonCommuting,
                    "blocks " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (!nonsingular(f, sub(f, blocks[i], blocks[j]))) return false;
    }
  }
  return true;
}

bool is_upper_triangular_family_nonsingular(const Field& f,
                                            const std::vector<std::vector<Mat>>& grid) {
  std::size_t r = grid.size();
  for (const auto& row : grid) {
    if (row.size() != r) throw Error(ErrorKind::ShapeMismatch, "grid is not r x r");
    for (const auto& b : row) {
      if (!b.square()) throw Error(ErrorKind::ShapeMismatch, "non-square block");
      if (!b.is_upper_triangular()) {
        throw Error(ErrorKind::NotUpperTriangular, "block has entries below the diagonal");
      }
    }
  }
  if (r == 0) return true;
  std::size_t n = grid[0][0].rows();
  if (r == 1) {
    for (std::size_t a = 0; a < n; ++a) {
      if (grid[0][0](a, a) == 0) return false;
    }
    return true;
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < r; ++i) {
      Felt base = grid[1][i](a, a);
      for (std::size_t t = 0; t < r; ++t) {
        if (grid[t][i](a, a) != f.pow(base, static_cast<std::int64_t>(t))) return false;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (grid[1][j](a, a) == base) return false;
      }
    }
  }
  return true;
}

}  // namespace mdsarray
