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

#include "mdsarray/codespec.hpp"

#include <fstream>

#include "mdsarray/error.hpp"
#include "mdsarray/families.hpp"

namespace mdsarray {

using nlohmann::json;

namespace {

std::size_t get_count(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw Error(ErrorKind::InvalidParams, std::string(key) + " must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

CodeSpec parse_code_spec(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidParams, "code spec must be a JSON object");
  CodeSpec spec;
  try {
    spec.family = family_from_string(j.at("family").get<std::string>());
    bool paired = spec.family == Family::C0 || spec.family == Family::C1;
    if (j.contains("nbar")) spec.nbar = get_count(j, "nbar");
    if (j.contains("m")) {
      std::size_t m = get_count(j, "m");
      if (!paired) throw Error(ErrorKind::InvalidParams, "m applies only to C0 and C1");
      if (spec.nbar != 0 && spec.nbar != 2 * m) {
        throw Error(ErrorKind::InvalidParams, "nbar must equal 2m");
      }
      spec.nbar = 2 * m;
    }
    if (spec.nbar == 0) throw Error(ErrorKind::InvalidParams, "nbar (or m) is required");
    if (paired && spec.nbar % 2 != 0) {
      throw Error(ErrorKind::InvalidParams, "C0 and C1 need even nbar");
    }
    spec.w = get_count(j, "w");
    spec.r = get_count(j, "r");
    spec.s = j.contains("s") ? get_count(j, "s") : 1;
    if (j.contains("q") && !j.at("q").is_null()) spec.q = get_count(j, "q");
    if (j.contains("seed") && !j.at("seed").is_null()) spec.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("code spec: ") + e.what());
  }
  bool base = spec.family == Family::C0 || spec.family == Family::YB1 ||
              spec.family == Family::YB2;
  if (base && spec.s != 1) throw Error(ErrorKind::InvalidParams, "base codes need s = 1");
  return spec;
}

CodeSpec load_code_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidParams, path + ": " + e.what());
  }
  return parse_code_spec(j);
}

json to_json(const CodeSpec& spec) {
  json j = {{"family", to_string(spec.family)}, {"nbar", spec.nbar}, {"w", spec.w},
            {"r", spec.r}, {"s", spec.s}};
  if (spec.family == Family::C0 || spec.family == Family::C1) j["m"] = spec.m();
  if (spec.q) j["q"] = *spec.q;
  if (spec.seed) j["seed"] = *spec.seed;
  return j;
}

ArrayCode build_code(const CodeSpec& spec) {
  std::optional<Field> field;
  if (spec.q) field = Field::of(*spec.q);
  switch (spec.family) {
    case Family::C0: return as_array_code(build_c0(spec.m(), spec.w, spec.r, field));
    case Family::YB1: return as_array_code(build_yb1(spec.nbar, spec.w, spec.r, field));
    case Family::YB2: return as_array_code(build_yb2(spec.nbar, spec.w, spec.r, field));
    case Family::C1: return build_c1(spec.m(), spec.w, spec.r, spec.s, field);
    case Family::C2: return build_c2(spec.nbar, spec.w, spec.r, spec.s, field);
    case Family::C2P: return build_c2prime(spec.nbar, spec.w, spec.r, spec.s, field);
    case Family::C3: return build_c3(spec.nbar, spec.w, spec.r, spec.s, field);
    case Family::Custom: break;
  }
  throw Error(ErrorKind::UnknownFamily, to_string(spec.family));
}

json describe(const ArrayCode& code) {
  const auto& p = code.params;
  BandwidthRatio b = bandwidth_ratio(code);
  return {{"family", to_string(code.family)},
          {"n", p.n},
          {"k", p.k},
          {"r", p.r},
          {"d", p.d},
          {"dc", p.dc},
          {"N", p.N},
          {"w", p.w},
          {"nbar", p.nbar},
          {"s", p.s},
          {"q", code.field.q()},
          {"c", code.field.c()},
          {"gamma", b.gamma},
          {"gamma_optimal", b.gamma_optimal},
          {"ratio_num", b.num},
          {"ratio_den", b.den}};
}

}  // namespace mdsarray
