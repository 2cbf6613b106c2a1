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

#include "mdsarray/digits.hpp"

#include <algorithm>
#include <string>

#include "mdsarray/error.hpp"
#include "mdsarray/gfmatrix.hpp"

namespace mdsarray {

namespace {

void check_digit(std::size_t u, std::size_t w) {
  if (u >= w) {
    throw Error(ErrorKind::OutOfRange,
                "digit " + std::to_string(u) + " not below radix " + std::to_string(w));
  }
}

void check_position(std::size_t i, std::size_t m) {
  if (i >= m) {
    throw Error(ErrorKind::OutOfRange,
                "position " + std::to_string(i) + " not below " + std::to_string(m));
  }
}

}  // namespace

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

Digits expand(std::size_t a, std::size_t w, std::size_t m) {
  if (w < 2) throw Error(ErrorKind::InvalidParams, "radix below 2");
  if (a >= ipow(w, m)) {
    throw Error(ErrorKind::OutOfRange, "index " + std::to_string(a) + " too large");
  }
  Digits d(m);
  for (std::size_t j = m; j-- > 0;) {
    d[j] = a % w;
    a /= w;
  }
  return d;
}

std::size_t compose(const Digits& digits, std::size_t w) {
  std::size_t a = 0;
  for (std::size_t d : digits) {
    check_digit(d, w);
    a = a * w + d;
  }
  return a;
}

std::size_t digit_of(std::size_t a, std::size_t i, std::size_t w, std::size_t m) {
  check_position(i, m);
  return (a / ipow(w, m - 1 - i)) % w;
}

std::size_t replace_digit(std::size_t a, std::size_t i, std::size_t u,
                          std::size_t w, std::size_t m) {
  check_position(i, m);
  check_digit(u, w);
  if (a >= ipow(w, m)) throw Error(ErrorKind::OutOfRange, "index too large");
  std::size_t p = ipow(w, m - 1 - i);
  std::size_t cur = (a / p) % w;
  return a - cur * p + u * p;
}

std::size_t insert_digit(std::size_t a, std::size_t i, std::size_t u,
                         std::size_t w, std::size_t m) {
  check_position(i, m);
  check_digit(u, w);
  if (a >= ipow(w, m - 1)) throw Error(ErrorKind::OutOfRange, "index too large");
  std::size_t low_p = ipow(w, m - 1 - i);
  std::size_t high = a / low_p;
  std::size_t low = a % low_p;
  return (high * w + u) * low_p + low;
}

std::size_t digit_add(std::size_t u, std::size_t v, std::size_t w) {
  return (u + v) % w;
}

Selector partition_selector(std::size_t i, std::size_t t, std::size_t w,
                            std::size_t m) {
  check_position(i, m);
  check_digit(t, w);
  Selector s;
  s.width = ipow(w, m);
  std::size_t count = s.width / w;
  s.rows.reserve(count);
  for (std::size_t a = 0; a < count; ++a) s.rows.push_back(insert_digit(a, i, t, w, m));
  return s;
}

SelectorSum::SelectorSum(std::vector<std::vector<std::size_t>> rows, std::size_t width)
    : rows_(std::move(rows)), width_(width) {
  for (auto& r : rows_) {
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) {
      throw Error(ErrorKind::InvalidParams, "repeated column in selector row");
    }
    if (!r.empty() && r.back() >= width_) {
      throw Error(ErrorKind::OutOfRange, "selector column beyond width");
    }
  }
}

SelectorSum SelectorSum::identity(std::size_t n) {
  std::vector<std::vector<std::size_t>> rows(n);
  for (std::size_t a = 0; a < n; ++a) rows[a] = {a};
  return SelectorSum(std::move(rows), n);
}

SelectorSum SelectorSum::from(const Selector& s) {
  std::vector<std::vector<std::size_t>> rows;
  rows.reserve(s.rows.size());
  for (std::size_t b : s.rows) rows.push_back({b});
  return SelectorSum(std::move(rows), s.width);
}

SelectorSum SelectorSum::sum(const std::vector<Selector>& parts) {
  if (parts.empty()) throw Error(ErrorKind::ShapeMismatch, "empty selector sum");
  std::size_t count = parts.front().rows.size();
  std::vector<std::vector<std::size_t>> rows(count);
  for (const auto& p : parts) {
    if (p.rows.size() != count || p.width != parts.front().width) {
      throw Error(ErrorKind::ShapeMismatch, "selector shapes differ");
    }
    for (std::size_t r = 0; r < count; ++r) rows[r].push_back(p.rows[r]);
  }
  return SelectorSum(std::move(rows), parts.front().width);
}

std::size_t SelectorSum::nonzero_columns() const {
  std::vector<bool> seen(width_, false);
  std::size_t count = 0;
  for (const auto& r : rows_) {
    for (std::size_t b : r) {
      if (!seen[b]) {
        seen[b] = true;
        ++count;
      }
    }
  }
  return count;
}

bool SelectorSum::is_identity() const {
  if (rows_.size() != width_) return false;
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (rows_[a].size() != 1 || rows_[a][0] != a) return false;
  }
  return true;
}

std::vector<Felt> SelectorSum::apply(const Field& f, const std::vector<Felt>& v) const {
  if (v.size() != width_) throw Error(ErrorKind::ShapeMismatch, "selector apply");
  std::vector<Felt> out(rows_.size(), 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Felt acc = 0;
    for (std::size_t b : rows_[r]) acc = f.add(acc, v[b]);
    out[r] = acc;
  }
  return out;
}

Mat SelectorSum::times(const Field& f, const Mat& m) const {
  if (m.rows() != width_) throw Error(ErrorKind::ShapeMismatch, "selector times");
  Mat out(rows_.size(), m.cols());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t b : rows_[r]) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out(r, c) = f.add(out(r, c), m(b, c));
      }
    }
  }
  return out;
}

Mat SelectorSum::to_dense() const {
  Mat out(rows_.size(), width_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t b : rows_[r]) out(r, b) = 1;
  }
  return out;
}

}  // namespace mdsarray
