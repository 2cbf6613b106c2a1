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

#include "mdsarray/gf.hpp"

#include <string>

#include "mdsarray/error.hpp"

namespace mdsarray {

namespace {
constexpr std::uint64_t kScanCap = 1u << 20;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  if (v % 2 == 0) return v == 2;
  for (std::uint64_t p = 3; p * p <= v; p += 2) {
    if (v % p == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      out.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

Field::Field(std::uint64_t q, Felt c) : q_(q), c_(c) {
  if (q < 3 || !is_prime(q)) {
    throw Error(ErrorKind::NotPrime, "q=" + std::to_string(q));
  }
  if (c == 0 || c >= q || order(c) != q - 1) {
    throw Error(ErrorKind::InvalidParams,
                std::to_string(c) + " is not primitive mod " + std::to_string(q));
  }
}

Field Field::of(std::uint64_t q) { return Field(q, primitive_element(q)); }

Felt Field::pow(Felt base, std::int64_t exp) const {
  base %= q_;
  if (exp < 0) {
    if (base == 0) throw Error(ErrorKind::InvalidParams, "0 to a negative power");
    base = inv(base);
    exp = -exp;
  }
  Felt acc = 1;
  auto e = static_cast<std::uint64_t>(exp);
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Felt Field::inv(Felt a) const {
  a %= q_;
  if (a == 0) throw Error(ErrorKind::SingularSystem, "inverse of 0");
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(q_), nr = static_cast<std::int64_t>(a);
  while (nr != 0) {
    std::int64_t quo = r / nr;
    std::int64_t tmp = t - quo * nt;
    t = nt;
    nt = tmp;
    tmp = r - quo * nr;
    r = nr;
    nr = tmp;
  }
  return reduce(t);
}

std::uint64_t Field::order(Felt a) const {
  a %= q_;
  if (a == 0) return 0;
  std::uint64_t ord = q_ - 1;
  for (std::uint64_t p : prime_factors(q_ - 1)) {
    while (ord % p == 0 && pow(a, static_cast<std::int64_t>(ord / p)) == 1) {
      ord /= p;
    }
  }
  return ord;
}

Felt primitive_element(std::uint64_t q) {
  if (q < 2 || !is_prime(q)) {
    throw Error(ErrorKind::NotPrime, "q=" + std::to_string(q));
  }
  if (q == 2) return 1;
  auto factors = prime_factors(q - 1);
  for (Felt g = 2; g < q; ++g) {
    bool ok = true;
    for (std::uint64_t p : factors) {
      Felt acc = 1, b = g;
      std::uint64_t e = (q - 1) / p;
      while (e) {
        if (e & 1) acc = acc * b % q;
        b = b * b % q;
        e >>= 1;
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(ErrorKind::NotPrime, "no primitive element mod " + std::to_string(q));
}

Field find_field(std::uint64_t lower_bound, std::optional<std::uint64_t> divisor) {
  if (lower_bound < 2) {
    throw Error(ErrorKind::InvalidParams, "lower bound must be at least 2");
  }
  if (divisor && *divisor < 2) {
    throw Error(ErrorKind::InvalidParams, "divisor must be at least 2");
  }
  for (std::uint64_t q = lower_bound + 1; q <= kScanCap; ++q) {
    if (divisor && (q - 1) % *divisor != 0) continue;
    if (is_prime(q)) return Field::of(q);
  }
  throw Error(ErrorKind::FieldExhausted,
              "no prime above " + std::to_string(lower_bound) + " below 2^20");
}

}  // namespace mdsarray
