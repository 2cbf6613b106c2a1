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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "mdsarray/cluster.hpp"
#include "mdsarray/error.hpp"

using namespace mdsarray;
namespace fs = std::filesystem;

namespace {

CodeSpec example_spec() {
  CodeSpec s;
  s.family = Family::C1;
  s.nbar = 6;
  s.w = 2;
  s.r = 3;
  s.s = 2;
  return s;
}

Bytes random_bytes(std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes out(len);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("mdsarray_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("symbol packing") {
  CHECK(symbol_bits(29) == 4);
  CHECK(symbol_bits(13) == 3);
  CHECK(symbol_bits(11) == 3);
  CHECK(symbol_bits(257) == 8);
  CHECK(pack_symbols({0xAB}, 4) == std::vector<Felt>{0xB, 0xA});
  CHECK(pack_symbols({0xFF}, 3) == std::vector<Felt>{7, 7, 3});
  for (std::size_t bits : {1u, 3u, 4u, 5u, 8u, 11u}) {
    for (std::size_t len : {0u, 1u, 7u, 100u}) {
      Bytes b = random_bytes(len, bits * 100 + len);
      auto syms = pack_symbols(b, bits);
      CHECK(syms.size() == (len * 8 + bits - 1) / bits);
      for (Felt s : syms) CHECK(s < (Felt{1} << bits));
      CHECK(unpack_symbols(syms, bits, len) == b);
    }
  }
}

TEST_CASE("ingest and read") {
  Cluster cl(example_spec());
  CHECK(cl.bits() == 4);
  CHECK(cl.stripe_symbols() == 72);
  std::size_t empty = cl.ingest({});
  CHECK(cl.objects()[empty].stripes == 0);
  CHECK(cl.read_object(empty).empty());

  Bytes one = random_bytes(36, 0);
  std::size_t id1 = cl.ingest(one);
  CHECK(cl.objects()[id1].stripes == 1);
  CHECK(cl.read_object(id1) == one);

  // 3 * 72 + 1 symbols of 4 bits need 109 bytes
  Bytes four = random_bytes(109, 1);
  CHECK(cl.objects()[cl.ingest(four)].stripes == 4);
  CHECK(cl.objects()[cl.ingest(random_bytes(108, 2))].stripes == 3);
  CHECK(cl.stripe_count() == 8);
  for (std::size_t s = 0; s < cl.stripe_count(); ++s) CHECK(is_codeword(cl.code(), cl.stripe(s)));
}

TEST_CASE("fail, repair, ledger") {
  Cluster cl(example_spec());
  Bytes payload = random_bytes(500, 3);
  std::size_t id = cl.ingest(payload);
  std::size_t stripes = cl.stripe_count();
  CHECK(stripes == 14);

  NodeRepairReport noop = cl.repair_node(3);
  CHECK_FALSE(noop.performed);
  CHECK(cl.ledger_total() == 0);

  cl.fail_node(3);
  CHECK(cl.failed_nodes() == std::vector<std::size_t>{3});
  CHECK(cl.read_object(id) == payload);
  try {
    cl.ingest(payload);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NodeDown);
  }
  NodeRepairReport rep = cl.repair_node(3, std::vector<std::size_t>{0});
  CHECK(rep.performed);
  CHECK(rep.per_stripe.downloaded_symbols == 44);
  CHECK(rep.total_symbols == 44 * stripes);
  CHECK(cl.ledger_total() == 44 * stripes);
  for (const auto& t : cl.ledger()) {
    CHECK(t.to == 3);
    CHECK(t.from != 0);
  }
  CHECK(cl.failed_nodes().empty());
  CHECK(cl.read_object(id) == payload);
  for (std::size_t s = 0; s < stripes; ++s) CHECK(is_codeword(cl.code(), cl.stripe(s)));

  cl.fail_node(1);
  cl.fail_node(2);
  try {
    cl.repair_node(1);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TwoFailures);
  }
  cl.fail_node(11);
  CHECK(cl.read_object(id) == payload);
  cl.fail_node(5);
  try {
    cl.read_object(id);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooManyErasures);
  }
}

TEST_CASE("repairing the wrong node is rejected") {
  Cluster cl(example_spec());
  cl.ingest(random_bytes(40, 4));
  cl.fail_node(2);
  CHECK_THROWS_AS(cl.repair_node(4), Error);
  CHECK_THROWS_AS(cl.repair_node(12), Error);
}

TEST_CASE("no pattern of up to r failures loses a stripe") {
  Bytes payload = random_bytes(36, 5);
  std::vector<std::size_t> nodes(12);
  for (std::size_t i = 0; i < 12; ++i) nodes[i] = i;
  std::size_t patterns = 0;
  for (std::size_t k = 0; k <= 3; ++k) {
    for (const auto& e : combinations(nodes, k)) {
      Cluster cl(example_spec());
      std::size_t id = cl.ingest(payload);
      for (std::size_t i : e) cl.fail_node(i);
      CHECK(cl.read_object(id) == payload);
      ++patterns;
    }
  }
  CHECK(patterns == 1 + 12 + 66 + 220);
}

TEST_CASE("persistence") {
  fs::path dir = scratch("persist");
  Cluster cl(example_spec());
  Bytes a = random_bytes(300, 6), b = random_bytes(17, 7);
  cl.ingest(a);
  cl.ingest(b);
  cl.save(dir.string());
  CHECK(fs::exists(dir / "meta.json"));
  for (std::size_t i = 0; i < 12; ++i) CHECK(fs::exists(dir / ("node_" + std::to_string(i) + ".bin")));

  std::ifstream node(dir / "node_0.bin", std::ios::binary);
  Bytes head(21);
  node.read(reinterpret_cast<char*>(head.data()), 21);
  CHECK(std::string(head.begin(), head.begin() + 4) == "MDSA");
  CHECK(head[4] == 1);
  CHECK(head[5] == 29);
  CHECK(head[13] == 8);
  std::uint32_t count = head[17] | (head[18] << 8) | (head[19] << 16) | (static_cast<std::uint32_t>(head[20]) << 24);
  CHECK(count == cl.stripe_count() * 8);
  CHECK(fs::file_size(dir / "node_0.bin") == 21 + 4 * count);

  std::ifstream meta(dir / "meta.json");
  auto j = nlohmann::json::parse(meta);
  for (const char* key : {"family", "nbar", "w", "r", "s", "q", "c", "n", "k", "d", "dc", "N", "stripes"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["stripes"].size() == 2);
  CHECK(j["stripes"][1]["len_bytes"] == 17);

  Cluster back = Cluster::load(dir.string());
  CHECK(back.read_object(0) == a);
  CHECK(back.read_object(1) == b);
  CHECK(back.stripe_count() == cl.stripe_count());

  back.fail_node(4);
  back.save(dir.string());
  CHECK_FALSE(fs::exists(dir / "node_4.bin"));
  Cluster degraded = Cluster::load(dir.string());
  CHECK(degraded.failed_nodes() == std::vector<std::size_t>{4});
  CHECK(degraded.read_object(0) == a);
  degraded.repair_node(4);
  CHECK(degraded.read_object(1) == b);

  try {
    Cluster::load((dir / "missing").string());
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
  }
  fs::remove_all(dir);
}
