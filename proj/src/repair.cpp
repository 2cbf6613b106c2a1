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

#include "mdsarray/repair.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mdsarray/error.hpp"

namespace mdsarray {

namespace {

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

}  // namespace

std::vector<std::size_t> avoidable_nodes(const ArrayCode& code, std::size_t failed) {
  if (failed >= code.params.n) throw Error(ErrorKind::OutOfRange, "failed node");
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < code.params.n; ++j) {
    if (!code.congruent(j, failed)) out.push_back(j);
  }
  return out;
}

std::vector<std::vector<std::size_t>> admissible_avoid_sets(const ArrayCode& code,
                                                            std::size_t failed) {
  return combinations(avoidable_nodes(code, failed), code.params.r - code.params.w);
}

RepairPlan plan_repair(const ArrayCode& code, std::size_t failed,
                       std::optional<std::vector<std::size_t>> avoid) {
  const auto& p = code.params;
  if (failed >= p.n) throw Error(ErrorKind::OutOfRange, "failed node " + std::to_string(failed));
  std::size_t want = p.r - p.w;
  std::vector<std::size_t> avoided;
  if (avoid) {
    avoided = *avoid;
    std::sort(avoided.begin(), avoided.end());
    if (avoided.size() != want ||
        std::adjacent_find(avoided.begin(), avoided.end()) != avoided.end()) {
      throw Error(ErrorKind::InvalidAvoidSet,
                  "avoid set must hold " + std::to_string(want) + " distinct nodes");
    }
    for (std::size_t l : avoided) {
      if (l >= p.n) throw Error(ErrorKind::InvalidAvoidSet, "node " + std::to_string(l));
      if (code.congruent(l, failed)) {
        throw Error(ErrorKind::InvalidAvoidSet,
                    "node " + std::to_string(l) + " is compulsory or the failed node");
      }
    }
  } else {
    auto cand = avoidable_nodes(code, failed);
    avoided.assign(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(want));
  }
  RepairPlan plan;
  plan.failed = failed;
  plan.avoided = avoided;
  plan.compulsory = compulsory_helpers(code, failed);
  for (std::size_t j = 0; j < p.n; ++j) {
    if (j == failed || contains(avoided, j)) continue;
    plan.helpers.push_back(j);
    plan.repair.push_back(code.repair_matrix(failed, j));
  }
  for (std::size_t t = 0; t < p.r; ++t) plan.select.push_back(code.select_matrix(failed, t));
  return plan;
}

Mat factor_interference(const ArrayCode& code, const RepairPlan& plan, std::size_t j,
                        std::size_t t) {
  if (code.congruent(j, plan.failed)) {
    throw Error(ErrorKind::InvalidParams, "factorization needs a non-congruent node");
  }
  const Field& f = code.field;
  SelectorSum rsel = code.repair_matrix(plan.failed, j);
  Mat sa = plan.select.at(t).times(f, code.block(t, j));
  Mat r = rsel.to_dense();
  Mat b = multiply(f, sa, right_inverse(f, r));
  if (!(multiply(f, b, r) == sa)) {
    throw Error(ErrorKind::NoFactorization,
                "S A not in the row space of R for j=" + std::to_string(j) +
                    " t=" + std::to_string(t));
  }
  return b;
}

Repairer::Repairer(const ArrayCode& code, RepairPlan plan)
    : field_(code.field), params_(code.params), plan_(std::move(plan)) {
  const Field& f = field_;
  std::size_t N = params_.N, r = params_.r;
  std::size_t rows = 0;
  for (const auto& s : plan_.select) rows += s.row_count();

  // Unknowns: f_i, then R_{i,l} f_l for each avoided l.
  std::vector<std::size_t> unknown_off{0};
  std::size_t unknowns = N;
  for (std::size_t l : plan_.avoided) {
    unknown_off.push_back(unknowns);
    unknowns += code.repair_matrix(plan_.failed, l).row_count();
  }
  if (unknowns != rows) {
    throw Error(ErrorKind::ShapeMismatch, "repair system is " + std::to_string(rows) + "x" +
                                              std::to_string(unknowns));
  }
  std::vector<std::size_t> dl_off;
  std::size_t gamma = 0;
  for (const auto& rm : plan_.repair) {
    dl_off.push_back(gamma);
    gamma += rm.row_count();
  }

  // Factors for avoided nodes and ordinary helpers, cached per (node, t).
  std::vector<std::vector<Mat>> avoid_b(plan_.avoided.size());
  for (std::size_t a = 0; a < plan_.avoided.size(); ++a) {
    for (std::size_t t = 0; t < r; ++t) {
      avoid_b[a].push_back(factor_interference(code, plan_, plan_.avoided[a], t));
    }
  }

  Mat coef(rows, unknowns);
  Mat known(rows, gamma);
  std::size_t row0 = 0;
  for (std::size_t t = 0; t < r; ++t) {
    const SelectorSum& st = plan_.select[t];
    auto put = [](Mat& dst, std::size_t r0, std::size_t c0, const Mat& src) {
      for (std::size_t x = 0; x < src.rows(); ++x) {
        for (std::size_t y = 0; y < src.cols(); ++y) dst(r0 + x, c0 + y) = src(x, y);
      }
    };
    put(coef, row0, 0, st.times(f, code.block(t, plan_.failed)));
    for (std::size_t a = 0; a < plan_.avoided.size(); ++a) {
      put(coef, row0, unknown_off[a + 1], avoid_b[a][t]);
    }
    for (std::size_t h = 0; h < plan_.helpers.size(); ++h) {
      std::size_t j = plan_.helpers[h];
      Mat term = code.congruent(j, plan_.failed) ? st.times(f, code.block(t, j))
                                                 : factor_interference(code, plan_, j, t);
      put(known, row0, dl_off[h], term);
    }
    row0 += st.row_count();
  }
  Mat inv;
  try {
    inv = inverse(f, coef);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SingularSystem) throw;
    throw Error(ErrorKind::SingularSystem, "repair system singular for failed=" +
                                               std::to_string(plan_.failed) +
                                               " avoid=" + list(plan_.avoided));
  }
  Mat top(N, rows);
  for (std::size_t x = 0; x < N; ++x) {
    for (std::size_t y = 0; y < rows; ++y) top(x, y) = inv(x, y);
  }
  map_ = scale(f, multiply(f, top, known), f.neg(1));
}

std::vector<Column> Repairer::download(const Codeword& cw) const {
  std::vector<Column> out;
  for (std::size_t h = 0; h < plan_.helpers.size(); ++h) {
    out.push_back(plan_.repair[h].apply(field_, cw.columns.at(plan_.helpers[h])));
  }
  return out;
}

Column Repairer::regenerate(const std::vector<Column>& downloads) const {
  if (downloads.size() != plan_.helpers.size()) {
    throw Error(ErrorKind::ShapeMismatch, "one download per helper expected");
  }
  std::vector<Felt> flat;
  flat.reserve(map_.cols());
  for (const auto& d : downloads) flat.insert(flat.end(), d.begin(), d.end());
  return matvec(field_, map_, flat);
}

RepairReport Repairer::report() const {
  RepairReport rep;
  rep.failed = plan_.failed;
  rep.helpers = plan_.helpers;
  rep.avoided = plan_.avoided;
  for (std::size_t h = 0; h < plan_.helpers.size(); ++h) {
    HelperTraffic ht{plan_.helpers[h], plan_.repair[h].row_count(),
                     plan_.repair[h].nonzero_columns()};
    rep.downloaded_symbols += ht.symbols;
    rep.accessed_columns += ht.accessed;
    rep.per_helper.push_back(ht);
  }
  rep.gamma_optimal = bandwidth_ratio(params_).gamma_optimal;
  std::size_t g = std::gcd(rep.downloaded_symbols, rep.gamma_optimal);
  rep.ratio_num = rep.downloaded_symbols / g;
  rep.ratio_den = rep.gamma_optimal / g;
  return rep;
}

std::pair<Column, RepairReport> execute_repair(const ArrayCode& code, const Codeword& cw,
                                               const RepairPlan& plan) {
  if (!is_codeword(code, cw)) {
    throw Error(ErrorKind::InvalidParams, "codeword violates the parity checks");
  }
  Repairer rep(code, plan);
  return {rep.regenerate(rep.download(cw)), rep.report()};
}

RepairSuiteReport verify_repair_all(const ArrayCode& code, std::uint64_t seed) {
  if (code.params.n > 16 || code.params.N > 64) {
    throw Error(ErrorKind::TooLarge, "exhaustive repair check limited to n <= 16, N <= 64");
  }
  Codeword cw = sample_codeword(code, seed);
  BandwidthRatio expect = bandwidth_ratio(code);
  RepairSuiteReport suite;
  suite.ratio_num = expect.num;
  suite.ratio_den = expect.den;
  suite.gamma = expect.gamma;
  suite.gamma_optimal = expect.gamma_optimal;
  for (std::size_t i = 0; i < code.params.n; ++i) {
    for (const auto& avoid : admissible_avoid_sets(code, i)) {
      ++suite.runs;
      try {
        auto [col, rep] = execute_repair(code, cw, plan_repair(code, i, avoid));
        if (rep.downloaded_symbols != expect.gamma || rep.ratio_num != expect.num ||
            rep.ratio_den != expect.den) {
          suite.bandwidth_exact = false;
        }
        if (col == cw.columns[i]) {
          ++suite.passes;
        } else {
          suite.failures.push_back({i, avoid, "regenerated column differs"});
        }
      } catch (const Error& e) {
        suite.failures.push_back({i, avoid, e.what()});
      }
    }
  }
  return suite;
}

std::vector<Felt> aggregate_projection(const Field& f, const Column& column, std::size_t i,
                                       std::size_t w, std::size_t digits) {
  std::size_t N = ipow(w, digits);
  if (column.size() != N) throw Error(ErrorKind::ShapeMismatch, "column length != w^digits");
  std::vector<Felt> mu(N / w, 0);
  for (std::size_t b = 0; b < N / w; ++b) {
    for (std::size_t u = 0; u < w; ++u) {
      mu[b] = f.add(mu[b], column[insert_digit(b, i, u, w, digits)]);
    }
  }
  return mu;
}

Mat annihilator_matrix(const Field& f, const std::vector<Felt>& roots, std::size_t r) {
  std::size_t w = roots.size();
  if (w > r) throw Error(ErrorKind::InvalidParams, "more roots than r");
  // p0 coefficients, lowest degree first.
  std::vector<Felt> p0{1};
  for (Felt root : roots) {
    std::vector<Felt> next(p0.size() + 1, 0);
    for (std::size_t d = 0; d < p0.size(); ++d) {
      next[d + 1] = f.add(next[d + 1], p0[d]);
      next[d] = f.sub(next[d], f.mul(root, p0[d]));
    }
    p0 = std::move(next);
  }
  Mat p(r - w, r);
  for (std::size_t iota = 0; iota < r - w; ++iota) {
    for (std::size_t d = 0; d < p0.size(); ++d) p(iota, iota + d) = p0[d];
  }
  return p;
}

bool annihilator_check_tables(const Field& f, std::size_t nbar, std::size_t w, std::size_t r,
                              const std::vector<std::vector<Felt>>& xi, std::size_t failed) {
  std::size_t n = xi.size();
  if (failed >= n) throw Error(ErrorKind::OutOfRange, "failed node");
  if (r == w) return true;
  Mat p = annihilator_matrix(f, xi[failed], r);
  Mat vf(r, w);
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t u = 0; u < w; ++u) vf(t, u) = f.pow(xi[failed][u], static_cast<std::int64_t>(t));
  }
  if (!multiply(f, p, vf).is_zero()) {
    throw Error(ErrorKind::RankDeficient, "P does not annihilate node " + std::to_string(failed));
  }
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < n; ++j) {
    if (j % nbar != failed % nbar) others.push_back(j);
  }
  std::size_t N = ipow(w, nbar);
  for (std::size_t a = 0; a < N; ++a) {
    Mat m(r, others.size());
    for (std::size_t c = 0; c < others.size(); ++c) {
      std::size_t j = others[c];
      Felt x = xi[j][digit_of(a, j % nbar, w, nbar)];
      for (std::size_t t = 0; t < r; ++t) m(t, c) = f.pow(x, static_cast<std::int64_t>(t));
    }
    if (rank(f, multiply(f, p, m)) != r - w) {
      throw Error(ErrorKind::RankDeficient,
                  "rank(PM) < r-w at a=" + std::to_string(a) + " failed=" + std::to_string(failed));
    }
  }
  return true;
}

bool annihilator_check(const ArrayCode& code, std::size_t failed) {
  if (code.family != Family::C2 && code.family != Family::C2P && code.family != Family::YB1) {
    throw Error(ErrorKind::UnknownFamily, "annihilator check needs a diagonal YB1-type code");
  }
  auto xi = code.coeffs.xi;
  if (xi.empty()) {
    xi.assign(code.params.n, std::vector<Felt>(code.params.w));
    for (std::size_t i = 0; i < code.params.n; ++i) {
      for (std::size_t u = 0; u < code.params.w; ++u) {
        xi[i][u] = code.base->lambda[i % code.params.nbar][u];
      }
    }
  }
  return annihilator_check_tables(code.field, code.params.nbar, code.params.w, code.params.r, xi,
                                  failed);
}

}  // namespace mdsarray
