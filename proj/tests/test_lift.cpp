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

#include "doctest.h"
#include "mdsarray/error.hpp"
#include "mdsarray/families.hpp"
#include "oracles.hpp"

using namespace mdsarray;

TEST_CASE("identity lift reproduces the base code") {
  for (const MsrCode& base : {build_c0(3, 2, 3), build_yb1(5, 2, 3), build_yb2(5, 2, 3)}) {
    ArrayCode code = as_array_code(base);
    CHECK(code.params.s == 1);
    CHECK(code.params.dc == 0);
    CHECK(code.params.n == base.params.nbar);
    CHECK(code.params.d == base.params.dbar);
    for (std::size_t t = 0; t < base.params.r; ++t) {
      for (std::size_t i = 0; i < base.params.nbar; ++i) CHECK(code.block(t, i) == base.block(t, i));
    }
    CHECK(bandwidth_ratio(code).num == 1);
    CHECK(bandwidth_ratio(code).den == 1);
  }
  CHECK(as_array_code(build_c0(3, 2, 3)).family == Family::C0);
  CHECK(as_array_code(build_yb2(5, 2, 3)).family == Family::YB2);
}

TEST_CASE("two-copy reference instance") {
  ArrayCode code = build_c1(3, 2, 3, 2);
  const Field& f = code.field;
  CHECK(code.params.n == 12);
  CHECK(code.params.k == 9);
  CHECK(code.params.N == 8);
  CHECK(code.params.d == 10);
  CHECK(code.params.dc == 1);
  CHECK(f.q() == 29);
  CHECK(f.c() == 2);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(code.coeffs.x[i] == 1);
    CHECK(code.coeffs.x[6 + i] == f.cpow(12));
    for (std::size_t t = 0; t < 3; ++t) {
      CHECK(code.x[t][6 + i] == f.cpow(static_cast<std::int64_t>(12 * t)));
      CHECK(code.block(t, 6 + i) == scale(f, code.block(t, i), f.cpow(static_cast<std::int64_t>(12 * t))));
      CHECK(code.block(t, i) == code.base->block(t, i));
    }
  }
  for (std::size_t t = 0; t < 3; ++t) {
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(oracle::rank(oracle::dense(code.block(t, i)), 29) == 8);
    }
  }
}

TEST_CASE("lifted repair and select matrices") {
  ArrayCode code = build_c1(3, 2, 3, 2);
  CHECK(code.repair_matrix(3, 9).is_identity());
  CHECK(code.repair_matrix(3, 0).to_dense() == code.base->repair_matrix(3, 0).to_dense());
  CHECK(code.repair_matrix(3, 7).to_dense() == code.base->repair_matrix(3, 1).to_dense());
  CHECK(code.select_matrix(9, 2).to_dense() == code.base->select_matrix(3, 2).to_dense());
  CHECK_THROWS_AS(code.repair_matrix(3, 12), Error);
}

TEST_CASE("compulsory helpers") {
  ArrayCode ex = build_c1(3, 2, 3, 2);
  CHECK(compulsory_helpers(ex, 3) == std::vector<std::size_t>{9});
  CHECK(compulsory_helpers(as_array_code(build_yb1(5, 2, 3)), 2).empty());
  auto base = std::make_shared<const MsrCode>(build_yb1(5, 2, 3));
  ArrayCode three = lift(base, LiftSpec::identity(3, 5, 3));
  CHECK(compulsory_helpers(three, 7) == std::vector<std::size_t>{2, 12});
  CHECK_THROWS_AS(compulsory_helpers(three, 15), Error);
}

TEST_CASE("bandwidth ratio") {
  auto c1 = bandwidth_ratio(build_c1(3, 2, 3, 2));
  CHECK(c1.num == 11);
  CHECK(c1.den == 10);
  CHECK(c1.gamma == 44);
  CHECK(c1.gamma_optimal == 40);
  auto c2 = bandwidth_ratio(build_c2(5, 2, 3, 2));
  CHECK(c2.num == 9);
  CHECK(c2.den == 8);
  CHECK(c2.value() == doctest::Approx(1.125));
  CHECK(c2.gamma == 144);
  CHECK(c2.gamma_optimal == 128);
  auto b = bandwidth_ratio(as_array_code(build_c0(3, 2, 3)));
  CHECK(b.gamma == 16);
  CHECK(b.gamma_optimal == 16);
}

TEST_CASE("lift input validation") {
  auto base = std::make_shared<const MsrCode>(build_c0(3, 2, 3));
  LiftSpec spec = LiftSpec::identity(2, 6, 3);
  spec.x[1][4] = 0;
  try {
    lift(base, spec);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroCoefficient);
  }
  LiftSpec shape = LiftSpec::identity(2, 6, 3);
  shape.x[2].pop_back();
  try {
    lift(base, shape);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeMismatch);
  }
  LiftSpec rows = LiftSpec::identity(2, 6, 2);
  CHECK_THROWS_AS(lift(base, rows), Error);
}

TEST_CASE("power lift spec") {
  Field f = Field::of(13);
  LiftSpec s = LiftSpec::powers(f, {1, 2, 3, 4, 5, 6}, 3, 3);
  CHECK(s.s == 2);
  CHECK(s.x[0] == std::vector<Felt>(6, 1));
  CHECK(s.x[2][4] == 25 % 13);
}

TEST_CASE("family names") {
  for (Family fam : {Family::C0, Family::YB1, Family::YB2, Family::C1, Family::C2, Family::C2P,
                     Family::C3}) {
    CHECK(family_from_string(to_string(fam)) == fam);
  }
  try {
    family_from_string("C9");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFamily);
  }
}
