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

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdsarray/codespec.hpp"
#include "mdsarray/repair.hpp"

namespace mdsarray {

using Bytes = std::vector<std::uint8_t>;

// floor(log2 q)
std::size_t symbol_bits(std::uint64_t q);
// Little-endian bit grouping; the tail is zero padded.
std::vector<Felt> pack_symbols(const Bytes& payload, std::size_t bits);
Bytes unpack_symbols(const std::vector<Felt>& symbols, std::size_t bits, std::size_t len_bytes);

struct Transfer {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t symbols = 0;
};

struct ObjectRecord {
  std::size_t id = 0;
  std::size_t len_bytes = 0;
  std::size_t first_stripe = 0;
  std::size_t stripes = 0;
};

struct NodeRepairReport {
  bool performed = false;
  std::size_t node = 0;
  std::size_t stripes = 0;
  RepairReport per_stripe;     // identical for every stripe
  std::size_t total_symbols = 0;
};

class Cluster {
 public:
  explicit Cluster(const CodeSpec& spec);

  const CodeSpec& spec() const { return spec_; }
  const ArrayCode& code() const { return code_; }
  std::size_t bits() const { return bits_; }
  std::size_t stripe_symbols() const { return code_.params.k * code_.params.N; }
  std::size_t stripe_count() const { return stripes_; }
  const std::vector<ObjectRecord>& objects() const { return objects_; }
  const std::vector<Transfer>& ledger() const { return ledger_; }
  std::size_t ledger_total() const;
  std::vector<std::size_t> failed_nodes() const;

  std::size_t ingest(const Bytes& payload);
  void fail_node(std::size_t i);
  NodeRepairReport repair_node(std::size_t i,
                               std::optional<std::vector<std::size_t>> avoid = std::nullopt);
  Bytes read_object(std::size_t id) const;

  // Stripe s as a codeword; failed columns are left empty.
  Codeword stripe(std::size_t s) const;

  void save(const std::string& dir) const;
  static Cluster load(const std::string& dir);

 private:
  struct Node {
    bool up = true;
    std::vector<Felt> symbols;  // stripe-major, N per stripe
  };

  std::size_t stripes_for(std::size_t len_bytes) const;

  CodeSpec spec_;
  ArrayCode code_;
  std::size_t bits_;
  std::shared_ptr<const ErasureSolver> encoder_;
  std::vector<Node> nodes_;
  std::vector<ObjectRecord> objects_;
  std::size_t stripes_ = 0;
  std::vector<Transfer> ledger_;
};

}  // namespace mdsarray
