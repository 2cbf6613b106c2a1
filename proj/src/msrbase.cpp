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

#include "mdsarray/msrbase.hpp"

#include <set>
#include <string>

#include "mdsarray/error.hpp"

namespace mdsarray {

namespace {

void check_field_size(const Field& f, std::size_t w) {
  if (f.q() - 1 < w) {
    throw Error(ErrorKind::FieldTooSmall,
                "q=" + std::to_string(f.q()) + " too small for w=" + std::to_string(w));
  }
}

std::vector<Selector> all_partitions(std::size_t pos, std::size_t w, std::size_t m) {
  std::vector<Selector> parts;
  for (std::size_t u = 0; u < w; ++u) parts.push_back(partition_selector(pos, u, w, m));
  return parts;
}

}  // namespace

const char* to_string(BaseKind kind) {
  switch (kind) {
    case BaseKind::C0: return "C0";
    case BaseKind::YB1: return "YB1";
    case BaseKind::YB2: return "YB2";
  }
  return "?";
}

std::size_t MsrCode::digit_position(std::size_t i) const {
  if (i >= params.nbar) throw Error(ErrorKind::OutOfRange, "node " + std::to_string(i));
  if (kind == BaseKind::C0) return i < params.digits ? i : i - params.digits;
  return i;
}

SelectorSum MsrCode::repair_matrix(std::size_t i, std::size_t j) const {
  if (i == j) throw Error(ErrorKind::InvalidParams, "repair matrix of a node for itself");
  if (j >= params.nbar) throw Error(ErrorKind::OutOfRange, "node " + std::to_string(j));
  return select_matrix(i, 0);
}

SelectorSum MsrCode::select_matrix(std::size_t i, std::size_t t) const {
  if (t >= params.r) throw Error(ErrorKind::OutOfRange, "group " + std::to_string(t));
  std::size_t pos = digit_position(i);
  std::size_t w = params.w, m = params.digits;
  bool single = kind == BaseKind::YB2 || (kind == BaseKind::C0 && i < params.digits);
  if (single) return SelectorSum::from(partition_selector(pos, 0, w, m));
  return SelectorSum::sum(all_partitions(pos, w, m));
}

LambdaTable c0_lambda(const Field& f, std::size_t m, std::size_t w) {
  LambdaTable lam(2 * m, std::vector<Felt>(w));
  auto e = [](std::size_t v) { return static_cast<std::int64_t>(v); };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t u = 0; u < w; ++u) {
      if (w == 2) {
        lam[i][u] = f.cpow(e(i * (w + 2) + u));
        lam[i + m][u] = f.cpow(e(i * (w + 2) + w + u));
      } else {
        lam[i][u] = f.cpow(e(i * (w + 1) + u));
        lam[i + m][u] = u == 0 ? f.cpow(e(i * (w + 1) + w))
                               : f.cpow(e(i * (w + 1) + u % (w - 1) + 1));
      }
    }
  }
  return lam;
}

MsrCode build_c0(std::size_t m, std::size_t w, std::size_t r, std::optional<Field> field) {
  if (w < 2 || w >= r || r + 1 > 2 * m) {
    throw Error(ErrorKind::InvalidParams, "C0 needs 2 <= w < r <= 2m-1");
  }
  Field f = field ? *field : find_field(w == 2 ? m * (w + 2) : m * (w + 1));
  check_field_size(f, w);
  std::size_t nbar = 2 * m, N = ipow(w, m);
  MsrParams p{nbar, nbar - r, r, w, m, nbar - r + w - 1, N};
  LambdaTable lam = c0_lambda(f, m, w);

  BlockMat blocks(r, nbar, N);
  for (std::size_t t = 0; t < r; ++t) {
    auto te = static_cast<std::int64_t>(t);
    for (std::size_t i = 0; i < nbar; ++i) {
      Mat& b = blocks.at(t, i);
      std::size_t pos = i < m ? i : i - m;
      for (std::size_t a = 0; a < N; ++a) {
        std::size_t ai = digit_of(a, pos, w, m);
        b(a, a) = f.pow(lam[i][ai], te);
        if (i < m && ai == 0) {
          for (std::size_t u = 1; u < w; ++u) {
            b(a, replace_digit(a, i, u, w, m)) =
                f.sub(f.pow(lam[i][0], te), f.pow(lam[i][u], te));
          }
        }
      }
    }
  }
  return MsrCode{BaseKind::C0, p, f, std::move(lam), std::move(blocks)};
}

MsrCode build_yb1(std::size_t nbar, std::size_t w, std::size_t r, std::optional<Field> field,
                  std::optional<LambdaTable> lambda) {
  if (w < 2 || w >= r || r >= nbar) {
    throw Error(ErrorKind::InvalidParams, "YB1 needs 2 <= w < r < nbar");
  }
  Field f = field ? *field : find_field(w * nbar);
  check_field_size(f, w);
  LambdaTable lam;
  if (lambda) {
    lam = *lambda;
    if (lam.size() != nbar) throw Error(ErrorKind::ShapeMismatch, "lambda rows != nbar");
    for (auto& row : lam) {
      if (row.size() != w) throw Error(ErrorKind::ShapeMismatch, "lambda cols != w");
      for (Felt& v : row) v %= f.q();
    }
  } else {
    lam.assign(nbar, std::vector<Felt>(w));
    for (std::size_t i = 0; i < nbar; ++i) {
      for (std::size_t u = 0; u < w; ++u) lam[i][u] = f.cpow(static_cast<std::int64_t>(i * w + u));
    }
  }
  std::set<Felt> seen;
  for (std::size_t i = 0; i < nbar; ++i) {
    for (std::size_t u = 0; u < w; ++u) {
      if (lam[i][u] == 0) throw Error(ErrorKind::ZeroCoefficient, "lambda is zero");
      if (!seen.insert(lam[i][u]).second) {
        throw Error(ErrorKind::DuplicateLambda,
                    "lambda[" + std::to_string(i) + "][" + std::to_string(u) + "] repeats");
      }
    }
  }
  std::size_t N = ipow(w, nbar);
  MsrParams p{nbar, nbar - r, r, w, nbar, nbar - r + w - 1, N};
  BlockMat blocks(r, nbar, N);
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t i = 0; i < nbar; ++i) {
      Mat& b = blocks.at(t, i);
      for (std::size_t a = 0; a < N; ++a) {
        b(a, a) = f.pow(lam[i][digit_of(a, i, w, nbar)], static_cast<std::int64_t>(t));
      }
    }
  }
  return MsrCode{BaseKind::YB1, p, f, std::move(lam), std::move(blocks)};
}

Mat yb2_generator(const Field& f, const LambdaTable& lambda, std::size_t i, std::size_t w,
                  std::size_t nbar) {
  std::size_t N = ipow(w, nbar);
  Mat g(N, N);
  for (std::size_t a = 0; a < N; ++a) {
    std::size_t ai = digit_of(a, i, w, nbar);
    g(a, replace_digit(a, i, digit_add(ai, 1, w), w, nbar)) = lambda[i][ai] % f.q();
  }
  return g;
}

MsrCode build_yb2(std::size_t nbar, std::size_t w, std::size_t r, std::optional<Field> field) {
  if (w < 2 || w >= r || r >= nbar) {
    throw Error(ErrorKind::InvalidParams, "YB2 needs 2 <= w < r < nbar");
  }
  Field f = field ? *field : find_field(nbar);
  check_field_size(f, w);
  LambdaTable lam(nbar, std::vector<Felt>(w, 1));
  for (std::size_t i = 0; i < nbar; ++i) lam[i][0] = f.cpow(static_cast<std::int64_t>(i + 1));
  std::size_t N = ipow(w, nbar);
  MsrParams p{nbar, nbar - r, r, w, nbar, nbar - r + w - 1, N};
  BlockMat blocks(r, nbar, N);
  for (std::size_t i = 0; i < nbar; ++i) {
    Mat g = yb2_generator(f, lam, i, w, nbar);
    Mat acc = Mat::identity(N);
    for (std::size_t t = 0; t < r; ++t) {
      blocks.at(t, i) = acc;
      acc = multiply(f, acc, g);
    }
  }
  return MsrCode{BaseKind::YB2, p, f, std::move(lam), std::move(blocks)};
}

}  // namespace mdsarray
