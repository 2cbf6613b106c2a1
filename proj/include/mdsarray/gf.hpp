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

#include <cstdint>
#include <optional>
#include <vector>

namespace mdsarray {

using Felt = std::uint64_t;

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

// GF(q) for prime q together with a primitive element c.
class Field {
 public:
  Field(std::uint64_t q, Felt c);
  // Builds GF(q) with the smallest primitive element.
  static Field of(std::uint64_t q);

  std::uint64_t q() const { return q_; }
  Felt c() const { return c_; }

  Felt reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<Felt>(r < 0 ? r + static_cast<std::int64_t>(q_) : r);
  }
  Felt add(Felt a, Felt b) const {
    Felt s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Felt sub(Felt a, Felt b) const { return a >= b ? a - b : a + q_ - b; }
  Felt neg(Felt a) const { return a == 0 ? 0 : q_ - a; }
  Felt mul(Felt a, Felt b) const { return (a * b) % q_; }
  Felt inv(Felt a) const;
  Felt pow(Felt base, std::int64_t exp) const;
  // c^e, e may be negative.
  Felt cpow(std::int64_t e) const { return pow(c_, e); }
  std::uint64_t order(Felt a) const;

  bool operator==(const Field& o) const { return q_ == o.q_ && c_ == o.c_; }

 private:
  std::uint64_t q_;
  Felt c_;
};

Felt primitive_element(std::uint64_t q);

// Smallest prime q > lower_bound with divisor | q-1.
Field find_field(std::uint64_t lower_bound,
                 std::optional<std::uint64_t> divisor = std::nullopt);

}  // namespace mdsarray
