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

#include "mdsarray/codec.hpp"

#include <algorithm>
#include <random>

#include "mdsarray/error.hpp"

namespace mdsarray {

namespace {

void check_codeword_shape(const ArrayCode& code, const Codeword& cw) {
  if (cw.columns.size() != code.params.n) {
    throw Error(ErrorKind::ShapeMismatch, "codeword has wrong column count");
  }
  for (const auto& c : cw.columns) {
    if (c.size() != code.params.N) throw Error(ErrorKind::ShapeMismatch, "column length != N");
  }
}

}  // namespace

ErasureSolver::ErasureSolver(const ArrayCode& code, std::vector<std::size_t> erased)
    : field_(code.field), N_(code.params.N), erased_(std::move(erased)) {
  std::sort(erased_.begin(), erased_.end());
  if (std::adjacent_find(erased_.begin(), erased_.end()) != erased_.end()) {
    throw Error(ErrorKind::InvalidParams, "repeated erasure");
  }
  if (erased_.size() > code.params.r) {
    throw Error(ErrorKind::TooManyErasures,
                std::to_string(erased_.size()) + " erasures with r=" +
                    std::to_string(code.params.r));
  }
  for (std::size_t i = 0; i < code.params.n; ++i) {
    if (!std::binary_search(erased_.begin(), erased_.end(), i)) known_.push_back(i);
  }
  if (known_.size() + erased_.size() != code.params.n) {
    throw Error(ErrorKind::OutOfRange, "erased node beyond n");
  }
  if (erased_.empty()) return;
  Mat me = code.blocks.assemble(erased_);
  Mat mk = code.blocks.assemble(known_);
  Mat left = left_inverse(field_, me);
  map_ = scale(field_, multiply(field_, left, mk), field_.neg(1));
}

void ErasureSolver::solve(Codeword& cw) const {
  if (erased_.empty()) return;
  std::vector<Felt> known(known_.size() * N_);
  for (std::size_t k = 0; k < known_.size(); ++k) {
    const Column& c = cw.columns.at(known_[k]);
    if (c.size() != N_) throw Error(ErrorKind::ShapeMismatch, "column length != N");
    std::copy(c.begin(), c.end(), known.begin() + static_cast<std::ptrdiff_t>(k * N_));
  }
  std::vector<Felt> out = matvec(field_, map_, known);
  for (std::size_t e = 0; e < erased_.size(); ++e) {
    auto first = out.begin() + static_cast<std::ptrdiff_t>(e * N_);
    cw.columns[erased_[e]].assign(first, first + static_cast<std::ptrdiff_t>(N_));
  }
}

std::vector<std::size_t> default_parity_positions(const ArrayCode& code) {
  std::vector<std::size_t> pos;
  for (std::size_t i = code.params.k; i < code.params.n; ++i) pos.push_back(i);
  return pos;
}

Codeword encode(const ArrayCode& code, const std::vector<Column>& data,
                const std::vector<std::size_t>& parity_positions) {
  if (parity_positions.size() != code.params.r) {
    throw Error(ErrorKind::InvalidParams, "need exactly r parity positions");
  }
  if (data.size() != code.params.k) throw Error(ErrorKind::ShapeMismatch, "need k data columns");
  ErasureSolver solver(code, parity_positions);
  Codeword cw;
  cw.columns.assign(code.params.n, Column(code.params.N, 0));
  for (std::size_t k = 0; k < solver.known().size(); ++k) {
    if (data[k].size() != code.params.N) throw Error(ErrorKind::ShapeMismatch, "column length");
    cw.columns[solver.known()[k]] = data[k];
  }
  solver.solve(cw);
  return cw;
}

Codeword encode(const ArrayCode& code, const std::vector<Column>& data) {
  return encode(code, data, default_parity_positions(code));
}

Codeword decode_erasures(const ArrayCode& code,
                         const std::vector<std::optional<Column>>& partial) {
  if (partial.size() != code.params.n) throw Error(ErrorKind::ShapeMismatch, "column count");
  std::vector<std::size_t> erased;
  Codeword cw;
  cw.columns.resize(code.params.n);
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (partial[i]) {
      cw.columns[i] = *partial[i];
    } else {
      erased.push_back(i);
    }
  }
  ErasureSolver(code, erased).solve(cw);
  return cw;
}

std::vector<Felt> parity_residual(const ArrayCode& code, const Codeword& cw) {
  check_codeword_shape(code, cw);
  const Field& f = code.field;
  std::size_t N = code.params.N;
  std::vector<Felt> res(code.params.r * N, 0);
  for (std::size_t t = 0; t < code.params.r; ++t) {
    for (std::size_t i = 0; i < code.params.n; ++i) {
      auto part = matvec(f, code.block(t, i), cw.columns[i]);
      for (std::size_t a = 0; a < N; ++a) res[t * N + a] = f.add(res[t * N + a], part[a]);
    }
  }
  return res;
}

bool is_codeword(const ArrayCode& code, const Codeword& cw) {
  auto res = parity_residual(code, cw);
  return std::all_of(res.begin(), res.end(), [](Felt v) { return v == 0; });
}

std::vector<Column> random_data(const ArrayCode& code, std::size_t columns, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Column> data(columns, Column(code.params.N));
  for (auto& c : data) {
    for (auto& v : c) v = rng() % code.field.q();
  }
  return data;
}

Codeword sample_codeword(const ArrayCode& code, std::uint64_t seed) {
  const Field& f = code.field;
  Mat h = code.blocks.assemble();
  auto pivots = rref(f, h);
  std::vector<bool> is_pivot(h.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::mt19937_64 rng(seed);
  std::vector<Felt> x(h.cols(), 0);
  for (std::size_t c = 0; c < h.cols(); ++c) {
    if (!is_pivot[c]) x[c] = rng() % f.q();
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Felt acc = 0;
    for (std::size_t c = pivots[r] + 1; c < h.cols(); ++c) {
      if (!is_pivot[c] && h(r, c)) acc = f.add(acc, f.mul(h(r, c), x[c]));
    }
    x[pivots[r]] = f.neg(acc);
  }
  Codeword cw;
  std::size_t N = code.params.N;
  for (std::size_t i = 0; i < code.params.n; ++i) {
    cw.columns.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(i * N),
                            x.begin() + static_cast<std::ptrdiff_t>((i + 1) * N));
  }
  return cw;
}

Codeword random_codeword(const ArrayCode& code, std::uint64_t seed) {
  return encode(code, random_data(code, code.params.k, seed));
}

std::vector<std::vector<std::size_t>> combinations(const std::vector<std::size_t>& items,
                                                   std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > items.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> pick;
    for (std::size_t i : idx) pick.push_back(items[i]);
    out.push_back(std::move(pick));
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == items.size() - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

MdsReport verify_mds(const ArrayCode& code, std::uint64_t seed) {
  const auto& p = code.params;
  if (p.n > 16 || p.N > 64) {
    throw Error(ErrorKind::TooLarge, "exhaustive MDS check limited to n <= 16, N <= 64");
  }
  std::vector<std::size_t> nodes(p.n);
  for (std::size_t i = 0; i < p.n; ++i) nodes[i] = i;
  Codeword reference = sample_codeword(code, seed);
  MdsReport rep;
  for (const auto& pattern : combinations(nodes, p.r)) {
    ++rep.patterns;
    bool det_ok = nonsingular(code.field, code.blocks.assemble(pattern));
    bool dec_ok = false;
    std::vector<std::optional<Column>> partial(reference.columns.begin(),
                                               reference.columns.end());
    for (std::size_t e : pattern) partial[e].reset();
    try {
      dec_ok = decode_erasures(code, partial).columns == reference.columns;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SingularSystem) throw;
    }
    if (det_ok) ++rep.determinant_pass;
    if (dec_ok) ++rep.decode_pass;
    if (det_ok != dec_ok) rep.agree = false;
    if (!det_ok || !dec_ok) rep.failures.push_back(pattern);
  }
  return rep;
}

bool verify_optimal_update(const ArrayCode& code) {
  for (std::size_t t = 0; t < code.params.r; ++t) {
    for (std::size_t i = 0; i < code.params.n; ++i) {
      if (!code.block(t, i).is_diagonal()) return false;
    }
  }
  return true;
}

}  // namespace mdsarray
