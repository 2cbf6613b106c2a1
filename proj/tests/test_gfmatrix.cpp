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

#include <random>

#include "doctest.h"
#include "mdsarray/digits.hpp"
#include "mdsarray/error.hpp"
#include "mdsarray/gfmatrix.hpp"
#include "oracles.hpp"

using namespace mdsarray;

namespace {

Mat random_mat(std::size_t r, std::size_t c, std::uint64_t q, std::mt19937_64& rng) {
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng() % q;
  }
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  Field f = Field::of(29);
  CHECK(rank(f, Mat::identity(8)) == 8);
  CHECK(rank(f, Mat(4, 4)) == 0);
  Mat v0 = SelectorSum::from(partition_selector(0, 0, 2, 3)).to_dense();
  Mat v1 = SelectorSum::from(partition_selector(0, 1, 2, 3)).to_dense();
  CHECK(rank(f, vstack({v0, v1})) == 8);
}

TEST_CASE("rank and nonsingularity agree with the determinant oracle") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {3ull, 5ull, 13ull}) {
    Field f = Field::of(q);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t n = 1 + trial % 6;
      Mat m = random_mat(n, n, q, rng);
      auto d = oracle::det(oracle::dense(m), static_cast<std::int64_t>(q));
      CHECK(nonsingular(f, m) == (d != 0));
      CHECK(rank(f, m) == oracle::rank(oracle::dense(m), static_cast<std::int64_t>(q)));
      Mat wide = random_mat(n, n + 2, q, rng);
      CHECK(rank(f, wide) == oracle::rank(oracle::dense(wide), static_cast<std::int64_t>(q)));
    }
  }
}

TEST_CASE("solve") {
  Field f = Field::of(11);
  std::vector<Felt> b{3, 7, 1};
  CHECK(solve(f, Mat::identity(3), b) == b);
  // [[1,1],[l0,l1]] x = (b0,b1), Cramer: x0 = (b0 l1 - b1)/(l1-l0), x1 = (b1 - b0 l0)/(l1-l0)
  Felt l0 = 3, l1 = 5, b0 = 4, b1 = 9;
  Mat a(2, 2, {1, 1, l0, l1});
  Felt det = f.sub(l1, l0);
  auto x = solve(f, a, {b0, b1});
  CHECK(x[0] == f.mul(f.sub(f.mul(b0, l1), b1), f.inv(det)));
  CHECK(x[1] == f.mul(f.sub(b1, f.mul(b0, l0)), f.inv(det)));
  try {
    solve(f, Mat(2, 2, {1, 2, 2, 4}), {1, 1});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularSystem);
  }
}

TEST_CASE("inverses") {
  std::mt19937_64 rng(11);
  Field f = Field::of(29);
  int found = 0;
  while (found < 20) {
    Mat m = random_mat(5, 5, 29, rng);
    if (!nonsingular(f, m)) continue;
    ++found;
    CHECK(multiply(f, m, inverse(f, m)) == Mat::identity(5));
    CHECK(multiply(f, inverse(f, m), m) == Mat::identity(5));
  }
  Mat tall = vstack({Mat::identity(3), Mat(2, 3, {1, 2, 3, 4, 5, 6})});
  CHECK(multiply(f, left_inverse(f, tall), tall) == Mat::identity(3));
  Mat wide = tall.transpose();
  CHECK(multiply(f, wide, right_inverse(f, wide)) == Mat::identity(3));
  CHECK_THROWS_AS(inverse(f, Mat(2, 2)), Error);
}

TEST_CASE("matrix helpers") {
  Field f = Field::of(13);
  Mat a(2, 3, {1, 2, 3, 4, 5, 6});
  CHECK(a.transpose().rows() == 3);
  CHECK(a.transpose()(2, 1) == 6);
  CHECK(hstack({a, a}).cols() == 6);
  CHECK(vstack({a, a}).rows() == 4);
  CHECK(a.submatrix_rows({1})(0, 2) == 6);
  CHECK(a.submatrix_cols({2, 0})(1, 1) == 4);
  CHECK(scale(f, a, 3)(1, 2) == 5);
  CHECK(add(f, a, a)(1, 2) == 12);
  CHECK(sub(f, a, a).is_zero());
  Mat d = Mat::diagonal({2, 3});
  CHECK(d.is_diagonal());
  CHECK(d.is_upper_triangular());
  CHECK(power(f, d, 3) == Mat::diagonal({8, 1}));
  CHECK(power(f, d, 0) == Mat::identity(2));
  CHECK(Mat::scalar(2, 7) == Mat::diagonal({7, 7}));
  CHECK(matvec(f, a, {1, 1, 1}) == std::vector<Felt>{6, 2});
  Mat u(2, 2, {1, 5, 0, 2});
  CHECK(u.is_upper_triangular());
  CHECK_FALSE(u.is_diagonal());
  CHECK(u.transpose().is_upper_triangular() == false);
}

TEST_CASE("block vandermonde predicate") {
  Field f = Field::of(13);
  Mat d0 = Mat::diagonal({1, 2, 3}), d1 = Mat::diagonal({4, 5, 6}), d2 = Mat::diagonal({7, 8, 9});
  CHECK(is_block_vandermonde_nonsingular(f, {d0, d1, d2}));
  CHECK_FALSE(is_block_vandermonde_nonsingular(f, {d0, d0}));
  // shares one diagonal entry, so the difference is singular
  CHECK_FALSE(is_block_vandermonde_nonsingular(f, {d0, Mat::diagonal({1, 9, 9})}));
  Mat nc(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
  try {
    is_block_vandermonde_nonsingular(f, {d0, nc});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonCommuting);
  }
}

TEST_CASE("upper triangular family predicate against determinants") {
  Field f = Field::of(13);
  Mat u(2, 2, {3, 1, 0, 5});
  CHECK(is_upper_triangular_family_nonsingular(f, {{u}}));
  CHECK_FALSE(is_upper_triangular_family_nonsingular(f, {{Mat(2, 2, {0, 1, 0, 5})}}));
  Mat a = Mat::diagonal({2, 3}), b = Mat::diagonal({2, 3});
  CHECK_FALSE(is_upper_triangular_family_nonsingular(
      f, {{Mat::identity(2), Mat::identity(2)}, {a, b}}));
  // t-th row holds t-th powers of distinct diagonals with upper parts
  Mat x(2, 2, {2, 7, 0, 3}), y(2, 2, {4, 1, 0, 5});
  std::vector<std::vector<Mat>> grid{{Mat::identity(2), Mat::identity(2)},
                                     {x, y}};
  Mat whole = vstack({hstack(grid[0]), hstack(grid[1])});
  bool pred = is_upper_triangular_family_nonsingular(f, grid);
  CHECK(pred);
  CHECK(oracle::det(oracle::dense(whole), 13) != 0);
  try {
    is_upper_triangular_family_nonsingular(f, {{Mat(2, 2, {1, 0, 1, 1})}});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUpperTriangular);
  }
}

TEST_CASE("block matrix assembly") {
  BlockMat bm(2, 3, 2);
  for (std::size_t t = 0; t < 2; ++t) {
    for (std::size_t i = 0; i < 3; ++i) bm.at(t, i) = Mat::scalar(2, 1 + t * 3 + i);
  }
  Mat all = bm.assemble();
  CHECK(all.rows() == 4);
  CHECK(all.cols() == 6);
  CHECK(all(2, 4) == 6);
  Mat sub2 = bm.assemble({2, 0});
  CHECK(sub2(0, 0) == 3);
  CHECK(sub2(3, 3) == 4);
}
