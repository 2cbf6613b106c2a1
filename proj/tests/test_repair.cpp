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

#include <algorithm>

#include "doctest.h"
#include "mdsarray/error.hpp"
#include "mdsarray/families.hpp"
#include "mdsarray/repair.hpp"
#include "oracles.hpp"

using namespace mdsarray;

TEST_CASE("repair plan for the two-copy reference instance") {
  ArrayCode code = build_c1(3, 2, 3, 2);
  RepairPlan plan = plan_repair(code, 3, std::vector<std::size_t>{0});
  CHECK(plan.helpers == std::vector<std::size_t>{1, 2, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(plan.compulsory == std::vector<std::size_t>{9});
  CHECK(plan.avoided == std::vector<std::size_t>{0});
  CHECK(plan.select.size() == 3);
  CHECK(plan.repair.size() == 10);
  CHECK(plan_repair(code, 3).avoided == std::vector<std::size_t>{0});
  CHECK(plan_repair(code, 0).avoided == std::vector<std::size_t>{1});
  for (std::vector<std::size_t> bad : {std::vector<std::size_t>{9}, std::vector<std::size_t>{},
                                       std::vector<std::size_t>{0, 1}, std::vector<std::size_t>{3},
                                       std::vector<std::size_t>{12}}) {
    try {
      plan_repair(code, 3, bad);
      FAIL("expected error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidAvoidSet);
    }
  }
  CHECK(admissible_avoid_sets(code, 3).size() == 10);
  CHECK(avoidable_nodes(code, 3).size() == 10);
}

TEST_CASE("repair plan on a base code") {
  ArrayCode code = as_array_code(build_c0(3, 2, 3));
  RepairPlan plan = plan_repair(code, 0);
  CHECK(plan.compulsory.empty());
  CHECK(plan.helpers.size() == code.params.d);
  CHECK(plan.helpers.size() == 4);
}

TEST_CASE("plan invariants") {
  for (const ArrayCode& code : {build_c1(3, 2, 3, 2), build_c3(5, 2, 3, 3), build_c2(5, 2, 3, 2)}) {
    for (std::size_t i = 0; i < code.params.n; ++i) {
      for (const auto& avoid : admissible_avoid_sets(code, i)) {
        RepairPlan p = plan_repair(code, i, avoid);
        CHECK(p.helpers.size() == code.params.d);
        for (std::size_t c : compulsory_helpers(code, i)) {
          CHECK(std::find(p.helpers.begin(), p.helpers.end(), c) != p.helpers.end());
        }
        for (std::size_t l : p.avoided) CHECK_FALSE(code.congruent(l, i));
        // square system: N + (r-w) N/w unknowns, r N/w equations
        std::size_t N = code.params.N, w = code.params.w, r = code.params.r;
        std::size_t rows = 0;
        for (const auto& s : p.select) rows += s.row_count();
        std::size_t unknowns = N;
        for (std::size_t l : p.avoided) unknowns += code.repair_matrix(i, l).row_count();
        CHECK(rows == r * N / w);
        CHECK(unknowns == rows);
      }
    }
  }
}

TEST_CASE("single repairs") {
  ArrayCode c1 = build_c1(3, 2, 3, 2);
  Codeword cw = sample_codeword(c1, 0);
  auto [col, rep] = execute_repair(c1, cw, plan_repair(c1, 3, std::vector<std::size_t>{0}));
  CHECK(col == cw.columns[3]);
  CHECK(rep.downloaded_symbols == 44);
  CHECK(rep.gamma_optimal == 40);
  CHECK(rep.ratio_num == 11);
  CHECK(rep.ratio_den == 10);
  std::size_t from9 = 0;
  for (const auto& h : rep.per_helper) {
    if (h.node == 9) from9 = h.symbols;
  }
  CHECK(from9 == 8);

  ArrayCode c2 = build_c2(5, 2, 3, 2);
  Codeword cw2 = sample_codeword(c2, 4);
  auto [col2, rep2] = execute_repair(c2, cw2, plan_repair(c2, 4, std::vector<std::size_t>{0}));
  CHECK(col2 == cw2.columns[4]);
  CHECK(rep2.ratio_num == 9);
  CHECK(rep2.ratio_den == 8);

  ArrayCode c0 = as_array_code(build_c0(3, 2, 3));
  Codeword cw0 = sample_codeword(c0, 2);
  for (std::size_t i = 0; i < 6; ++i) {
    auto [c, r] = execute_repair(c0, cw0, plan_repair(c0, i));
    CHECK(c == cw0.columns[i]);
    CHECK(r.downloaded_symbols == 16);
    CHECK(r.gamma_optimal == 16);
  }

  Codeword broken = cw;
  broken.columns[0][0] = c1.field.add(broken.columns[0][0], 1);
  try {
    execute_repair(c1, broken, plan_repair(c1, 3));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidParams);
  }
}

TEST_CASE("exhaustive repair suites") {
  struct Case {
    ArrayCode code;
    std::size_t runs;
    std::size_t num, den;
  };
  for (const Case& c : {Case{build_c1(3, 2, 3, 2), 120, 11, 10}, Case{build_c3(5, 2, 3, 2), 80, 9, 8},
                        Case{build_c2prime(5, 2, 3, 2, Field::of(13)), 80, 9, 8},
                        Case{as_array_code(build_yb2(5, 2, 3)), 20, 1, 1}}) {
    RepairSuiteReport rep = verify_repair_all(c.code, 9);
    CHECK(rep.runs == c.runs);
    CHECK(rep.passes == c.runs);
    CHECK(rep.bandwidth_exact);
    CHECK(rep.ratio_num == c.num);
    CHECK(rep.ratio_den == c.den);
    CHECK(rep.pass());
  }
}

TEST_CASE("access equals bandwidth on the cyclic lift") {
  ArrayCode code = build_c3(5, 2, 3, 2);
  Codeword cw = sample_codeword(code, 0);
  for (std::size_t i = 0; i < 10; ++i) {
    auto [col, rep] = execute_repair(code, cw, plan_repair(code, i));
    CHECK(col == cw.columns[i]);
    CHECK(rep.accessed_columns == rep.downloaded_symbols);
  }
  ArrayCode c2 = build_c2(5, 2, 3, 2);
  auto [col, rep] = execute_repair(c2, sample_codeword(c2, 0), plan_repair(c2, 0));
  CHECK(rep.accessed_columns > rep.downloaded_symbols);
}

TEST_CASE("colliding multipliers break repair") {
  // x on the second copy cancels lambda_{1,0} against lambda_{0,0}
  auto base = std::make_shared<const MsrCode>(build_c0(3, 2, 3, find_field(24)));
  const Field& f = base->field;
  std::vector<Felt> x(12, 1);
  for (std::size_t i = 6; i < 12; ++i) x[i] = f.cpow(-4);
  ArrayCode code = lift(base, LiftSpec::powers(f, x, 3, 6));
  RepairSuiteReport rep = verify_repair_all(code, 0);
  CHECK_FALSE(rep.pass());
  REQUIRE_FALSE(rep.failures.empty());
  CHECK(rep.failures.front().failed == 0);
  CHECK(rep.failures.front().avoided == std::vector<std::size_t>{7});
  CHECK(rep.failures.front().reason.find("SingularSystem") != std::string::npos);
  try {
    execute_repair(code, sample_codeword(code, 0), plan_repair(code, 0, std::vector<std::size_t>{7}));
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularSystem);
  }
  // equal multipliers on both copies only break the MDS property
  ArrayCode twin = lift(base, LiftSpec::identity(2, 6, 3));
  CHECK(verify_repair_all(twin, 0).pass());
}

TEST_CASE("repairer pieces") {
  ArrayCode code = build_c1(3, 2, 3, 2);
  Codeword cw = sample_codeword(code, 8);
  Repairer rp(code, plan_repair(code, 7));
  auto downloads = rp.download(cw);
  CHECK(downloads.size() == 10);
  std::size_t total = 0;
  for (const auto& d : downloads) total += d.size();
  CHECK(total == 44);
  CHECK(rp.regenerate(downloads) == cw.columns[7]);
  CHECK(rp.report().downloaded_symbols == 44);
}

TEST_CASE("trivial interference factor") {
  // group 0: S A_{0,j} = S, and R = S for the paired base code
  ArrayCode code = as_array_code(build_c0(3, 2, 3));
  RepairPlan plan = plan_repair(code, 0);
  CHECK(factor_interference(code, plan, 2, 0) == Mat::identity(4));
  CHECK_THROWS_AS(factor_interference(build_c1(3, 2, 3, 2), plan_repair(build_c1(3, 2, 3, 2), 0), 6, 1),
                  Error);
}

TEST_CASE("aggregate projection") {
  Field f = Field::of(13);
  Column e0(8, 0);
  e0[0] = 1;
  auto mu = aggregate_projection(f, e0, 0, 2, 3);
  CHECK(mu == std::vector<Felt>{1, 0, 0, 0});
  Column col{3, 1, 4, 1, 5, 9, 2, 6};
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Selector> parts;
    for (std::size_t u = 0; u < 2; ++u) parts.push_back(partition_selector(i, u, 2, 3));
    CHECK(aggregate_projection(f, col, i, 2, 3) == SelectorSum::sum(parts).apply(f, col));
    auto m = aggregate_projection(f, col, i, 2, 3);
    for (std::size_t b = 0; b < 4; ++b) {
      Felt s = 0;
      for (std::size_t u = 0; u < 2; ++u) s = f.add(s, col[insert_digit(b, i, u, 2, 3)]);
      CHECK(m[b] == s);
    }
  }
}
