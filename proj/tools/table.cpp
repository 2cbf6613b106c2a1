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

#include "table.hpp"

#include <iomanip>
#include <sstream>

#include "mdsarray/error.hpp"
#include "mdsarray/families.hpp"

namespace mdsarray::cli {

namespace {

using u128 = unsigned __int128;
constexpr u128 kLimit = static_cast<u128>(UINT64_MAX);

std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::size_t e) {
  u128 v = 1;
  for (std::size_t i = 0; i < e; ++i) {
    v *= b;
    if (v > kLimit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

std::optional<std::uint64_t> checked_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u128 v = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // v * (n-k+i) / i is exact at every step
    v = v * (n - k + i) / i;
    if (v > kLimit) return std::nullopt;
  }
  return static_cast<std::uint64_t>(v);
}

std::string n_or_overflow(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : std::string("overflow");
}

}  // namespace

std::vector<TableQuery> desk_rows() {
  std::vector<TableQuery> out;
  auto add = [&](std::size_t r, std::size_t nbar, std::size_t s) {
    out.push_back(TableQuery{Family::C1, {r}, {2}, {nbar}, {s}});
  };
  add(3, 5, 2);
  add(3, 10, 10);
  add(3, 5, 20);
  add(4, 6, 2);
  add(4, 10, 18);
  add(4, 6, 30);
  return out;
}

std::optional<TableRow> table_row(Family family, std::size_t r, std::size_t nbar,
                                  std::size_t s, std::size_t w) {
  bool base = family == Family::C0 || family == Family::YB1 || family == Family::YB2;
  if (family == Family::Custom) return std::nullopt;
  if (base && s != 1) return std::nullopt;
  if (s < 1 || w < 2 || w > r || r >= nbar) return std::nullopt;
  bool paired = family == Family::C0 || family == Family::C1;
  std::size_t m = (nbar + 1) / 2;
  if (paired && w >= r) return std::nullopt;

  TableRow row;
  row.family = family;
  row.r = r;
  row.nbar = nbar;
  row.s = s;
  row.w = w;
  row.N = checked_pow(w, paired ? m : nbar);

  CodeParams& p = row.params;
  p.nbar = nbar;
  p.s = s;
  p.w = w;
  p.r = r;
  p.n = s * nbar;
  p.k = p.n - r;
  std::size_t dbar = nbar - r + w - 1;
  p.d = p.n - nbar + dbar;
  p.dc = s - 1;
  p.N = row.N ? static_cast<std::size_t>(*row.N) : 0;
  row.ratio = bandwidth_ratio(p);

  switch (family) {
    case Family::C0:
    case Family::C1: row.q_bound = c1_field_bound(m, w, s); break;
    case Family::YB1: row.q_bound = w * nbar; break;
    case Family::YB2: row.q_bound = nbar; break;
    case Family::C2:
    case Family::C2P: row.q_bound = c2_field_bound(nbar, w, s); break;
    case Family::C3: row.q_bound = c3_field_bound(nbar, w, s); break;
    case Family::Custom: break;
  }

  auto binom = checked_binom(p.n - 1, r - 1);
  if (row.N && binom) {
    u128 g = static_cast<u128>(*row.N) * *binom + 1;
    if (g <= kLimit) row.q_generic = static_cast<std::uint64_t>(g);
  }
  return row;
}

std::vector<TableRow> table_rows(const TableQuery& query) {
  std::vector<TableRow> out;
  for (std::size_t r : query.r) {
    for (std::size_t nbar : query.nbar) {
      for (std::size_t s : query.s) {
        for (std::size_t w : query.w) {
          if (auto row = table_row(query.family, r, nbar, s, w)) out.push_back(*row);
        }
      }
    }
  }
  return out;
}

std::string format_ratio(std::size_t num, std::size_t den) {
  u128 excess = static_cast<u128>(num - den) * 10000;
  u128 frac = (excess + den - 1) / den;
  if (frac == 0) return "1";
  std::ostringstream os;
  os << "1+" << static_cast<std::uint64_t>(frac / 10000) << '.' << std::setw(4)
     << std::setfill('0') << static_cast<std::uint64_t>(frac % 10000);
  return os.str();
}

std::string format_percent(std::size_t num, std::size_t den) {
  if (den == 0) return "0.00%";
  // round half up at 2 decimals
  u128 scaled = (static_cast<u128>(num) * 20000 / den + 1) / 2;
  std::ostringstream os;
  os << static_cast<std::uint64_t>(scaled / 100) << '.' << std::setw(2) << std::setfill('0')
     << static_cast<std::uint64_t>(scaled % 100) << '%';
  return os.str();
}

std::vector<std::size_t> parse_range(const std::string& text) {
  std::vector<std::size_t> out;
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::InvalidParams, "bad range '" + text + "'");
    }
    return std::stoull(s);
  };
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    auto dash = piece.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(piece));
      continue;
    }
    std::size_t lo = number(piece.substr(0, dash)), hi = number(piece.substr(dash + 1));
    if (lo > hi || hi - lo > 10000) throw Error(ErrorKind::InvalidParams, "bad range '" + text + "'");
    for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidParams, "empty range");
  return out;
}

namespace {

std::vector<std::string> cells(const TableRow& row) {
  const CodeParams& p = row.params;
  return {to_string(row.family),
          std::to_string(row.r),
          std::to_string(row.nbar),
          std::to_string(row.s),
          std::to_string(row.w),
          std::to_string(p.n),
          std::to_string(p.k),
          std::to_string(p.d),
          std::to_string(p.dc),
          n_or_overflow(row.N),
          ">" + std::to_string(row.q_bound),
          format_ratio(row.ratio.num, row.ratio.den),
          std::to_string(row.ratio.num) + "/" + std::to_string(row.ratio.den),
          format_percent(p.dc, p.n - 1),
          row.q_generic ? ">" + std::to_string(*row.q_generic - 1) : "overflow"};
}

const std::vector<std::string> kHeader = {"family", "r", "nbar", "s", "w",
                                          "n", "k", "d", "dc", "N",
                                          "q", "ratio", "exact", "dc/(n-1)", "q_generic"};

}  // namespace

std::string render_text(const std::vector<TableRow>& rows) {
  std::vector<std::vector<std::string>> grid{kHeader};
  for (const auto& row : rows) grid.push_back(cells(row));
  std::vector<std::size_t> width(kHeader.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  std::ostringstream os;
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << std::left << line[c];
    }
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t c = 0; c < line.size(); ++c) os << (c ? "," : "") << line[c];
    os << '\n';
  };
  emit(kHeader);
  for (const auto& row : rows) emit(cells(row));
  return os.str();
}

nlohmann::json render_json(const std::vector<TableRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    const CodeParams& p = row.params;
    nlohmann::json j = {{"family", to_string(row.family)},
                        {"r", row.r},
                        {"nbar", row.nbar},
                        {"s", row.s},
                        {"w", row.w},
                        {"n", p.n},
                        {"k", p.k},
                        {"d", p.d},
                        {"dc", p.dc},
                        {"q_bound", row.q_bound},
                        {"ratio", format_ratio(row.ratio.num, row.ratio.den)},
                        {"ratio_num", row.ratio.num},
                        {"ratio_den", row.ratio.den},
                        {"dc_fraction", format_percent(p.dc, p.n - 1)}};
    j["N"] = row.N ? nlohmann::json(*row.N) : nlohmann::json(nullptr);
    j["q_generic"] = row.q_generic ? nlohmann::json(*row.q_generic) : nlohmann::json(nullptr);
    out.push_back(j);
  }
  return out;
}

}  // namespace mdsarray::cli
