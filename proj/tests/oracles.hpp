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

// Test-side reference implementations. Nothing here calls into the library's
// elimination or construction code; plain integer arithmetic only.

#pragma once

#include <cstdint>
#include <vector>

#include "mdsarray/gfmatrix.hpp"

namespace oracle {

using Row = std::vector<std::int64_t>;
using Dense = std::vector<Row>;

inline std::int64_t md(std::int64_t v, std::int64_t q) { return ((v % q) + q) % q; }

inline std::int64_t mpow(std::int64_t b, std::int64_t e, std::int64_t q) {
  std::int64_t r = 1;
  b = md(b, q);
  while (e > 0) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

// Fermat inverse, q prime.
inline std::int64_t minv(std::int64_t a, std::int64_t q) { return mpow(a, q - 2, q); }

inline Dense dense(const mdsarray::Mat& m) {
  Dense d(m.rows(), Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d[r][c] = static_cast<std::int64_t>(m(r, c));
  }
  return d;
}

inline Dense zeros(std::size_t r, std::size_t c) { return Dense(r, Row(c, 0)); }

inline Dense mul(const Dense& a, const Dense& b, std::int64_t q) {
  Dense out = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % q;
    }
  }
  return out;
}

inline Dense sub(const Dense& a, const Dense& b, std::int64_t q) {
  Dense out = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = md(a[i][j] - b[i][j], q);
  }
  return out;
}

inline Dense mpow_mat(const Dense& a, std::size_t e, std::int64_t q) {
  Dense out = zeros(a.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i][i] = 1;
  for (std::size_t k = 0; k < e; ++k) out = mul(out, a, q);
  return out;
}

// Determinant by elimination with row swaps.
inline std::int64_t det(Dense a, std::int64_t q) {
  std::size_t n = a.size();
  std::int64_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && md(a[p][c], q) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = md(-d, q);
    }
    d = d * md(a[c][c], q) % q;
    std::int64_t iv = minv(md(a[c][c], q), q);
    for (std::size_t r = c + 1; r < n; ++r) {
      std::int64_t f = md(a[r][c], q) * iv % q;
      if (f == 0) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] = md(a[r][k] - f * a[c][k], q);
    }
  }
  return d;
}

inline std::size_t rank(Dense a, std::int64_t q) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && md(a[p][c], q) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    std::int64_t iv = minv(md(a[rk][c], q), q);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rk) continue;
      std::int64_t f = md(a[r][c], q) * iv % q;
      for (std::size_t k = 0; k < cols; ++k) a[r][k] = md(a[r][k] - f * a[rk][k], q);
    }
    ++rk;
  }
  return rk;
}

// Digits of a in base w, most significant first, m places.
inline std::vector<std::size_t> digits(std::size_t a, std::size_t w, std::size_t m) {
  std::vector<std::size_t> d(m);
  for (std::size_t k = m; k-- > 0;) {
    d[k] = a % w;
    a /= w;
  }
  return d;
}

inline std::size_t number(const std::vector<std::size_t>& d, std::size_t w) {
  std::size_t a = 0;
  for (std::size_t v : d) a = a * w + v;
  return a;
}

inline std::size_t with_digit(std::size_t a, std::size_t i, std::size_t u, std::size_t w,
                              std::size_t m) {
  auto d = digits(a, w, m);
  d[i] = u;
  return number(d, w);
}

inline std::size_t power_of(std::size_t w, std::size_t e) {
  std::size_t v = 1;
  while (e-- > 0) v *= w;
  return v;
}

// Exponent of c in lambda_{i,u} for the paired base code (w = 2 or w >= 3 forms).
inline std::int64_t c0_lambda_exponent(std::size_t i, std::size_t u, std::size_t m, std::size_t w) {
  if (w == 2) {
    if (i < m) return static_cast<std::int64_t>(i * (w + 2) + u);
    return static_cast<std::int64_t>((i - m) * (w + 2) + w + u);
  }
  if (i < m) return static_cast<std::int64_t>(i * (w + 1) + u);
  std::size_t b = i - m;
  if (u == 0) return static_cast<std::int64_t>(b * (w + 1) + w);
  return static_cast<std::int64_t>(b * (w + 1) + u % (w - 1) + 1);
}

// Closed form of the interference matrix for the paired base code: failed
// base node fi, helper base node j (j != fi), exponent t. lambda[j][u] are
// field values. Acts on the N/w indices left after removing digit fi mod m.
inline Dense paired_bbar(const std::vector<std::vector<std::int64_t>>& lambda, std::size_t fi,
                         std::size_t j, std::size_t t, std::size_t m, std::size_t w,
                         std::int64_t q) {
  std::size_t ip = fi % m, rd = m - 1, size = power_of(w, rd);
  Dense b = zeros(size, size);
  auto lt = [&](std::size_t u) { return mpow(lambda[j][u], static_cast<std::int64_t>(t), q); };
  if (j % m == ip) {
    for (std::size_t a = 0; a < size; ++a) b[a][a] = lt(0);
    return b;
  }
  if (j < m) {
    std::size_t pos = j < ip ? j : j - 1;
    for (std::size_t a = 0; a < size; ++a) {
      auto d = digits(a, w, rd);
      b[a][a] = lt(d[pos]);
      if (d[pos] == 0) {
        for (std::size_t u = 1; u < w; ++u) b[a][with_digit(a, pos, u, w, rd)] = md(lt(0) - lt(u), q);
      }
    }
    return b;
  }
  std::size_t jj = j - m;
  std::size_t pos = jj < ip ? jj : jj - 1;
  for (std::size_t a = 0; a < size; ++a) b[a][a] = lt(digits(a, w, rd)[pos]);
  return b;
}

// Cyclic-shift interference matrix for the single-selector diagonal-shift code:
// failed base node fi, helper base node jb != fi, multiplier x.
inline Dense shift_b(const std::vector<std::vector<std::int64_t>>& lambda, std::size_t fi,
                     std::size_t jb, std::int64_t x, std::size_t nbar, std::size_t w,
                     std::int64_t q) {
  std::size_t rd = nbar - 1, size = power_of(w, rd);
  std::size_t pos = jb < fi ? jb : jb - 1;
  Dense b = zeros(size, size);
  for (std::size_t a = 0; a < size; ++a) {
    std::size_t u = digits(a, w, rd)[pos];
    b[a][with_digit(a, pos, (u + 1) % w, w, rd)] = x * lambda[jb][u] % q;
  }
  return b;
}

// Coefficients (low to high) of prod (x - root).
inline Row poly_from_roots(const std::vector<std::int64_t>& roots, std::int64_t q) {
  Row p{1};
  for (std::int64_t z : roots) {
    Row n(p.size() + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      n[k + 1] = md(n[k + 1] + p[k], q);
      n[k] = md(n[k] - z * p[k], q);
    }
    p = n;
  }
  return p;
}

}  // namespace oracle
