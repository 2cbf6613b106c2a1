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

#include "mdsarray/families.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "mdsarray/error.hpp"

namespace mdsarray {

namespace {

std::int64_t e(std::size_t v) { return static_cast<std::int64_t>(v); }

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

void check_yb_params(std::size_t nbar, std::size_t w, std::size_t r, std::size_t s) {
  if (w < 2 || w >= r || r >= nbar) {
    throw Error(ErrorKind::InvalidParams, "need 2 <= w < r < nbar");
  }
  if (s < 1) throw Error(ErrorKind::InvalidParams, "s must be at least 1");
}

std::string tuple(std::initializer_list<std::pair<const char*, std::size_t>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

ConditionReport make_report(Family f, std::initializer_list<const char*> names) {
  ConditionReport rep;
  rep.family = f;
  for (const char* n : names) {
    ConditionClause c;
    c.name = n;
    rep.clauses.push_back(c);
  }
  return rep;
}

void fail(ConditionClause& c, std::string witness) {
  if (c.pass) {
    c.pass = false;
    c.witness = std::move(witness);
  }
}

}  // namespace

bool ConditionReport::pass() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](const ConditionClause& c) { return c.pass; });
}

std::size_t c1_field_bound(std::size_t m, std::size_t w, std::size_t s) {
  return s * m * (w == 2 ? w + 2 : w + 1);
}

std::size_t c2_field_bound(std::size_t nbar, std::size_t w, std::size_t s) {
  return ceil_div(s, w) * w * nbar;
}

std::size_t c3_field_bound(std::size_t nbar, std::size_t w, std::size_t s) {
  return ceil_div(nbar, w) * s * w;
}

ArrayCode build_c1(std::size_t m, std::size_t w, std::size_t r, std::size_t s,
                   std::optional<Field> field) {
  if (s < 1) throw Error(ErrorKind::InvalidParams, "s must be at least 1");
  if (w < 2 || w >= r || r + 1 > 2 * m) {
    throw Error(ErrorKind::InvalidParams, "C1 needs 2 <= w < r <= 2m-1");
  }
  Field f = field ? *field : find_field(c1_field_bound(m, w, s));
  auto base = std::make_shared<const MsrCode>(build_c0(m, w, r, f));
  std::size_t nbar = 2 * m, n = s * nbar;
  std::size_t step = m * (w == 2 ? w + 2 : w + 1);
  std::vector<Felt> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = f.cpow(e((i / nbar) * step));
  ArrayCode code = lift(base, LiftSpec::powers(f, x, r, nbar), Family::C1);
  code.coeffs.x = std::move(x);
  return code;
}

ArrayCode build_c2(std::size_t nbar, std::size_t w, std::size_t r, std::size_t s,
                   std::optional<Field> field) {
  check_yb_params(nbar, w, r, s);
  Field f = field ? *field : find_field(c2_field_bound(nbar, w, s), w);
  if ((f.q() - 1) % w != 0) {
    throw Error(ErrorKind::InvalidParams, "C2 needs w | q-1");
  }
  Felt delta = f.cpow(e((f.q() - 1) / w));
  LambdaTable lam(nbar, std::vector<Felt>(w));
  for (std::size_t i = 0; i < nbar; ++i) {
    for (std::size_t u = 0; u < w; ++u) lam[i][u] = f.mul(f.cpow(e(i)), f.pow(delta, e(u)));
  }
  auto base = std::make_shared<const MsrCode>(build_yb1(nbar, w, r, f, lam));
  std::size_t n = s * nbar;
  std::vector<Felt> x(n);
  std::vector<std::vector<Felt>> xi(n, std::vector<Felt>(w));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t z = i / (w * nbar), y = (i / nbar) % w;
    x[i] = f.mul(f.cpow(e(z * nbar)), f.pow(delta, e(y)));
    for (std::size_t u = 0; u < w; ++u) xi[i][u] = f.mul(x[i], lam[i % nbar][u]);
  }
  ArrayCode code = lift(base, LiftSpec::powers(f, x, r, nbar), Family::C2);
  code.coeffs = {std::move(x), std::move(xi), delta};
  return code;
}

ArrayCode build_c2prime(std::size_t nbar, std::size_t w, std::size_t r, std::size_t s,
                        std::optional<Field> field) {
  check_yb_params(nbar, w, r, s);
  Field f = field ? *field : find_field(c2_field_bound(nbar, w, s));
  // Repair schema and digit layout come from a YB1 base; blocks are set directly.
  auto base = std::make_shared<const MsrCode>(build_yb1(nbar, w, r, f));
  std::size_t n = s * nbar, N = base->params.N;
  std::vector<std::vector<Felt>> xi(n, std::vector<Felt>(w));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t z = i / (w * nbar), y = (i / nbar) % w, ib = i % nbar;
    for (std::size_t u = 0; u < w; ++u) {
      xi[i][u] = f.cpow(e(z * w * nbar + ib * w + digit_add(u, y, w)));
    }
  }
  ArrayCode code = lift(base, LiftSpec::identity(s, nbar, r), Family::C2P);
  code.x.clear();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Felt> diag(N);
    for (std::size_t a = 0; a < N; ++a) diag[a] = xi[i][digit_of(a, i % nbar, w, nbar)];
    Mat gen = Mat::diagonal(diag);
    Mat acc = Mat::identity(N);
    for (std::size_t t = 0; t < r; ++t) {
      code.blocks.at(t, i) = acc;
      acc = multiply(f, acc, gen);
    }
  }
  code.coeffs.xi = std::move(xi);
  return code;
}

ArrayCode build_c3(std::size_t nbar, std::size_t w, std::size_t r, std::size_t s,
                   std::optional<Field> field) {
  check_yb_params(nbar, w, r, s);
  Field f = field ? *field : find_field(c3_field_bound(nbar, w, s));
  auto base = std::make_shared<const MsrCode>(build_yb2(nbar, w, r, f));
  std::size_t n = s * nbar, step = ceil_div(nbar, w);
  std::vector<Felt> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = f.cpow(e((i / nbar) * step));
  ArrayCode code = lift(base, LiftSpec::powers(f, x, r, nbar), Family::C3);
  code.coeffs.x = std::move(x);
  return code;
}

ConditionReport check_c1_tables(const Field& f, std::size_t m, std::size_t w,
                                const std::vector<Felt>& x, const LambdaTable& lambda) {
  std::size_t nbar = 2 * m, n = x.size();
  if (lambda.size() != nbar || n % nbar != 0) {
    throw Error(ErrorKind::ShapeMismatch, "C1 tables do not match nbar");
  }
  auto xi = [&](std::size_t i, std::size_t u) { return f.mul(x[i], lambda[i % nbar][u]); };
  ConditionReport rep = make_report(Family::C1, {"i", "ii", "iii", "iv"});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t u = 0; u < w; ++u) {
        if (i % m != j % m) {
          for (std::size_t v = 0; v < w; ++v) {
            if (xi(i, u) == xi(j, v)) {
              fail(rep.clauses[0], tuple({{"i", i}, {"j", j}, {"u", u}, {"u'", v}}));
            }
          }
        } else if (i != j && xi(i, u) == xi(j, u)) {
          fail(rep.clauses[1], tuple({{"i", i}, {"j", j}, {"u", u}}));
        }
        if (i % m == j % m && i % nbar != j % nbar && u >= 1 && xi(i, 0) == xi(j, u)) {
          fail(rep.clauses[3], tuple({{"i", i}, {"j", j}, {"u", u}}));
        }
      }
    }
  }
  for (std::size_t ib = 0; ib < nbar; ++ib) {
    for (std::size_t u = 0; u < w; ++u) {
      for (std::size_t v = u + 1; v < w; ++v) {
        if (lambda[ib][u] == lambda[ib][v]) {
          fail(rep.clauses[2], tuple({{"ibar", ib}, {"u", u}, {"u'", v}}));
        }
      }
    }
  }
  return rep;
}

ConditionReport check_xi_tables(std::size_t nbar, const std::vector<std::vector<Felt>>& xi) {
  ConditionReport rep = make_report(Family::C2, {"i", "ii"});
  std::size_t n = xi.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t w = xi[i].size();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t u = 0; u < w; ++u) {
        if (i % nbar != j % nbar) {
          for (std::size_t v = 0; v < xi[j].size(); ++v) {
            if (xi[i][u] == xi[j][v]) {
              fail(rep.clauses[0], tuple({{"i", i}, {"j", j}, {"u", u}, {"v", v}}));
            }
          }
        } else if (u < xi[j].size() && xi[i][u] == xi[j][u]) {
          fail(rep.clauses[0], tuple({{"i", i}, {"j", j}, {"u", u}}));
        }
      }
    }
    for (std::size_t u = 0; u < w; ++u) {
      for (std::size_t v = u + 1; v < w; ++v) {
        if (xi[i][u] == xi[i][v]) fail(rep.clauses[1], tuple({{"i", i}, {"u", u}, {"v", v}}));
      }
    }
  }
  return rep;
}

ConditionReport check_c3_tables(const Field& f, std::size_t nbar, std::size_t w,
                                const std::vector<Felt>& x, const LambdaTable& lambda) {
  std::size_t n = x.size();
  if (lambda.size() != nbar || n % nbar != 0) {
    throw Error(ErrorKind::ShapeMismatch, "C3 tables do not match nbar");
  }
  // key_J = x_J^w * prod_t lambda_{J mod nbar, t}; equals x_J^w c^{J mod nbar + 1}.
  std::vector<Felt> key(n);
  for (std::size_t j = 0; j < n; ++j) {
    Felt prod = 1;
    for (std::size_t t = 0; t < w; ++t) prod = f.mul(prod, lambda[j % nbar][t]);
    key[j] = f.mul(f.pow(x[j], e(w)), prod);
  }
  ConditionReport rep = make_report(Family::C3, {"i", "ii"});
  for (std::size_t failed = 0; failed < n; ++failed) {
    for (std::size_t j0 = 0; j0 < n; ++j0) {
      if (j0 % nbar == failed % nbar) continue;
      if (key[j0] == key[failed]) {
        fail(rep.clauses[1], tuple({{"failed", failed}, {"j", j0}}));
      }
      for (std::size_t j1 = j0 + 1; j1 < n; ++j1) {
        if (j1 % nbar == failed % nbar) continue;
        if (key[j0] == key[j1]) {
          fail(rep.clauses[0], tuple({{"failed", failed}, {"j0", j0}, {"j1", j1}}));
        }
      }
    }
  }
  return rep;
}

ConditionReport check_conditions(const ArrayCode& code) {
  const auto& p = code.params;
  std::vector<Felt> x = code.coeffs.x;
  if (x.empty()) x.assign(p.n, 1);
  ConditionReport rep;
  switch (code.family) {
    case Family::C0:
    case Family::C1:
      rep = check_c1_tables(code.field, code.base->params.digits, p.w, x, code.base->lambda);
      break;
    case Family::YB1:
    case Family::C2: {
      auto xi = code.coeffs.xi;
      if (xi.empty()) {
        xi.assign(p.n, std::vector<Felt>(p.w));
        for (std::size_t i = 0; i < p.n; ++i) {
          for (std::size_t u = 0; u < p.w; ++u) {
            xi[i][u] = code.field.mul(x[i], code.base->lambda[i % p.nbar][u]);
          }
        }
      }
      rep = check_xi_tables(p.nbar, xi);
      break;
    }
    case Family::C2P:
      rep = check_xi_tables(p.nbar, code.coeffs.xi);
      break;
    case Family::YB2:
    case Family::C3:
      rep = check_c3_tables(code.field, p.nbar, p.w, x, code.base->lambda);
      break;
    case Family::Custom:
      throw Error(ErrorKind::UnknownFamily, "no condition set for custom lifts");
  }
  rep.family = code.family;
  return rep;
}

}  // namespace mdsarray
