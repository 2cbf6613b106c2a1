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

#include "mdsarray/lift.hpp"

#include <numeric>

#include "mdsarray/error.hpp"

namespace mdsarray {

const char* to_string(Family f) {
  switch (f) {
    case Family::C0: return "C0";
    case Family::YB1: return "YB1";
    case Family::YB2: return "YB2";
    case Family::C1: return "C1";
    case Family::C2: return "C2";
    case Family::C2P: return "C2P";
    case Family::C3: return "C3";
    case Family::Custom: return "Custom";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::C0, Family::YB1, Family::YB2, Family::C1, Family::C2, Family::C2P,
                   Family::C3}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorKind::UnknownFamily, name);
}

LiftSpec LiftSpec::identity(std::size_t s, std::size_t nbar, std::size_t r) {
  LiftSpec spec;
  spec.s = s;
  spec.x.assign(r, std::vector<Felt>(s * nbar, 1));
  return spec;
}

LiftSpec LiftSpec::powers(const Field& f, const std::vector<Felt>& xi, std::size_t r,
                          std::size_t nbar) {
  if (nbar == 0 || xi.size() % nbar != 0) {
    throw Error(ErrorKind::ShapeMismatch, "x length is not a multiple of nbar");
  }
  LiftSpec spec;
  spec.s = xi.size() / nbar;
  spec.x.assign(r, std::vector<Felt>(xi.size()));
  for (std::size_t t = 0; t < r; ++t) {
    for (std::size_t i = 0; i < xi.size(); ++i) {
      spec.x[t][i] = f.pow(xi[i], static_cast<std::int64_t>(t));
    }
  }
  return spec;
}

SelectorSum ArrayCode::repair_matrix(std::size_t i, std::size_t j) const {
  if (i >= params.n || j >= params.n) throw Error(ErrorKind::OutOfRange, "node index");
  if (i == j) throw Error(ErrorKind::InvalidParams, "repair matrix of a node for itself");
  if (congruent(i, j)) return SelectorSum::identity(params.N);
  return base->repair_matrix(nbar_of(i), nbar_of(j));
}

SelectorSum ArrayCode::select_matrix(std::size_t i, std::size_t t) const {
  if (i >= params.n) throw Error(ErrorKind::OutOfRange, "node index");
  return base->select_matrix(nbar_of(i), t);
}

ArrayCode lift(std::shared_ptr<const MsrCode> base, const LiftSpec& spec, Family tag) {
  if (!base) throw Error(ErrorKind::InvalidParams, "null base code");
  const MsrParams& bp = base->params;
  if (spec.s < 1) throw Error(ErrorKind::InvalidParams, "s must be at least 1");
  std::size_t n = spec.s * bp.nbar;
  if (spec.x.size() != bp.r) throw Error(ErrorKind::ShapeMismatch, "x table rows != r");
  for (const auto& row : spec.x) {
    if (row.size() != n) throw Error(ErrorKind::ShapeMismatch, "x table cols != s*nbar");
    for (Felt v : row) {
      if (v % base->field.q() == 0) throw Error(ErrorKind::ZeroCoefficient, "x entry is zero");
    }
  }
  const Field& f = base->field;
  ArrayCode code{tag, {}, f, base, spec.x, BlockMat(bp.r, n, bp.N), {}};
  code.params = {n, n - bp.r, bp.r, n - bp.nbar + bp.dbar, spec.s - 1,
                 bp.N, bp.w, bp.nbar, spec.s};
  for (std::size_t t = 0; t < bp.r; ++t) {
    for (std::size_t j = 0; j < n; ++j) {
      code.blocks.at(t, j) = scale(f, base->block(t, j % bp.nbar), spec.x[t][j] % f.q());
    }
  }
  return code;
}

ArrayCode as_array_code(const MsrCode& base) {
  Family tag = base.kind == BaseKind::C0    ? Family::C0
               : base.kind == BaseKind::YB1 ? Family::YB1
                                            : Family::YB2;
  auto ptr = std::make_shared<const MsrCode>(base);
  ArrayCode code = lift(ptr, LiftSpec::identity(1, base.params.nbar, base.params.r), tag);
  code.coeffs.x.assign(base.params.nbar, 1);
  return code;
}

std::vector<std::size_t> compulsory_helpers(const ArrayCode& code, std::size_t i) {
  if (i >= code.params.n) throw Error(ErrorKind::OutOfRange, "node index");
  std::vector<std::size_t> out;
  for (std::size_t j = i % code.params.nbar; j < code.params.n; j += code.params.nbar) {
    if (j != i) out.push_back(j);
  }
  return out;
}

BandwidthRatio bandwidth_ratio(const CodeParams& p) {
  BandwidthRatio b;
  b.num = p.d + p.dc * (p.d - p.k);
  b.den = p.d;
  std::size_t g = std::gcd(b.num, b.den);
  b.num /= g;
  b.den /= g;
  std::size_t slice = p.N / (p.d - p.k + 1);
  b.gamma = (p.d - p.dc) * slice + p.dc * p.N;
  b.gamma_optimal = p.d * slice;
  return b;
}

}  // namespace mdsarray
