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

#include "mdsarray/cluster.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "mdsarray/error.hpp"

namespace mdsarray {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kMagic[4] = {'M', 'D', 'S', 'A'};
constexpr std::uint8_t kVersion = 1;

template <typename T>
void put_le(std::ostream& out, T v, std::size_t bytes) {
  for (std::size_t b = 0; b < bytes; ++b) {
    out.put(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * b)) & 0xff));
  }
}

std::uint64_t get_le(std::istream& in, std::size_t bytes) {
  std::uint64_t v = 0;
  for (std::size_t b = 0; b < bytes; ++b) {
    int c = in.get();
    if (c == EOF) throw Error(ErrorKind::Io, "truncated node file");
    v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(c)) << (8 * b);
  }
  return v;
}

std::string node_file(const fs::path& dir, std::size_t i) {
  return (dir / ("node_" + std::to_string(i) + ".bin")).string();
}

}  // namespace

std::size_t symbol_bits(std::uint64_t q) {
  std::size_t b = 0;
  while ((std::uint64_t{1} << (b + 1)) <= q) ++b;
  return b;
}

std::vector<Felt> pack_symbols(const Bytes& payload, std::size_t bits) {
  if (bits == 0 || bits > 32) throw Error(ErrorKind::InvalidParams, "symbol width");
  std::size_t total = payload.size() * 8;
  std::vector<Felt> out((total + bits - 1) / bits, 0);
  for (std::size_t k = 0; k < total; ++k) {
    if ((payload[k / 8] >> (k % 8)) & 1) out[k / bits] |= Felt{1} << (k % bits);
  }
  return out;
}

Bytes unpack_symbols(const std::vector<Felt>& symbols, std::size_t bits, std::size_t len_bytes) {
  if (symbols.size() * bits < len_bytes * 8) {
    throw Error(ErrorKind::ShapeMismatch, "not enough symbols for the payload");
  }
  Bytes out(len_bytes, 0);
  for (std::size_t k = 0; k < len_bytes * 8; ++k) {
    if ((symbols[k / bits] >> (k % bits)) & 1) {
      out[k / 8] = static_cast<std::uint8_t>(out[k / 8] | (1u << (k % 8)));
    }
  }
  return out;
}

Cluster::Cluster(const CodeSpec& spec)
    : spec_(spec),
      code_(build_code(spec)),
      bits_(symbol_bits(code_.field.q())),
      encoder_(std::make_shared<const ErasureSolver>(code_, default_parity_positions(code_))),
      nodes_(code_.params.n) {}

std::size_t Cluster::ledger_total() const {
  std::size_t total = 0;
  for (const auto& t : ledger_) total += t.symbols;
  return total;
}

std::vector<std::size_t> Cluster::failed_nodes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].up) out.push_back(i);
  }
  return out;
}

std::size_t Cluster::stripes_for(std::size_t len_bytes) const {
  std::size_t symbols = (len_bytes * 8 + bits_ - 1) / bits_;
  return (symbols + stripe_symbols() - 1) / stripe_symbols();
}

std::size_t Cluster::ingest(const Bytes& payload) {
  if (!failed_nodes().empty()) {
    throw Error(ErrorKind::NodeDown, "cannot ingest while a node is down");
  }
  const std::size_t N = code_.params.N, k = code_.params.k;
  std::vector<Felt> symbols = pack_symbols(payload, bits_);
  ObjectRecord rec{objects_.size(), payload.size(), stripes_, stripes_for(payload.size())};
  symbols.resize(rec.stripes * stripe_symbols(), 0);
  const auto& data_nodes = encoder_->known();
  for (std::size_t s = 0; s < rec.stripes; ++s) {
    Codeword cw;
    cw.columns.resize(code_.params.n);
    for (std::size_t c = 0; c < k; ++c) {
      auto first = symbols.begin() + static_cast<std::ptrdiff_t>(s * stripe_symbols() + c * N);
      cw.columns[data_nodes[c]].assign(first, first + static_cast<std::ptrdiff_t>(N));
    }
    encoder_->solve(cw);
    for (std::size_t i = 0; i < code_.params.n; ++i) {
      nodes_[i].symbols.insert(nodes_[i].symbols.end(), cw.columns[i].begin(),
                               cw.columns[i].end());
    }
  }
  stripes_ += rec.stripes;
  objects_.push_back(rec);
  return rec.id;
}

void Cluster::fail_node(std::size_t i) {
  if (i >= nodes_.size()) throw Error(ErrorKind::OutOfRange, "node " + std::to_string(i));
  nodes_[i].up = false;
  nodes_[i].symbols.clear();
  nodes_[i].symbols.shrink_to_fit();
}

Codeword Cluster::stripe(std::size_t s) const {
  if (s >= stripes_) throw Error(ErrorKind::OutOfRange, "stripe " + std::to_string(s));
  const std::size_t N = code_.params.N;
  Codeword cw;
  cw.columns.resize(code_.params.n);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!nodes_[i].up) continue;
    auto first = nodes_[i].symbols.begin() + static_cast<std::ptrdiff_t>(s * N);
    cw.columns[i].assign(first, first + static_cast<std::ptrdiff_t>(N));
  }
  return cw;
}

NodeRepairReport Cluster::repair_node(std::size_t i,
                                      std::optional<std::vector<std::size_t>> avoid) {
  if (i >= nodes_.size()) throw Error(ErrorKind::OutOfRange, "node " + std::to_string(i));
  NodeRepairReport out;
  out.node = i;
  auto failed = failed_nodes();
  if (failed.empty()) return out;
  if (failed.size() > 1) {
    throw Error(ErrorKind::TwoFailures,
                std::to_string(failed.size()) + " nodes down; repair handles one");
  }
  if (failed.front() != i) {
    throw Error(ErrorKind::InvalidParams, "node " + std::to_string(i) + " is not down");
  }
  Repairer rep(code_, plan_repair(code_, i, std::move(avoid)));
  const std::size_t N = code_.params.N;
  std::vector<Felt> rebuilt;
  rebuilt.reserve(stripes_ * N);
  for (std::size_t s = 0; s < stripes_; ++s) {
    Column col = rep.regenerate(rep.download(stripe(s)));
    rebuilt.insert(rebuilt.end(), col.begin(), col.end());
  }
  nodes_[i].symbols = std::move(rebuilt);
  nodes_[i].up = true;
  out.performed = true;
  out.stripes = stripes_;
  out.per_stripe = rep.report();
  out.total_symbols = out.per_stripe.downloaded_symbols * stripes_;
  if (stripes_ > 0) {
    for (const auto& h : out.per_stripe.per_helper) {
      ledger_.push_back({h.node, i, h.symbols * stripes_});
    }
  }
  return out;
}

Bytes Cluster::read_object(std::size_t id) const {
  if (id >= objects_.size()) throw Error(ErrorKind::OutOfRange, "object " + std::to_string(id));
  const ObjectRecord& rec = objects_[id];
  auto failed = failed_nodes();
  if (failed.size() > code_.params.r) {
    throw Error(ErrorKind::TooManyErasures,
                std::to_string(failed.size()) + " nodes down with r=" +
                    std::to_string(code_.params.r));
  }
  const auto& data_nodes = encoder_->known();
  bool degraded = std::any_of(data_nodes.begin(), data_nodes.end(),
                              [&](std::size_t d) { return !nodes_[d].up; });
  std::optional<ErasureSolver> decoder;
  if (degraded) decoder.emplace(code_, failed);
  std::vector<Felt> symbols;
  symbols.reserve(rec.stripes * stripe_symbols());
  for (std::size_t s = rec.first_stripe; s < rec.first_stripe + rec.stripes; ++s) {
    Codeword cw = stripe(s);
    if (decoder) decoder->solve(cw);
    for (std::size_t d : data_nodes) {
      symbols.insert(symbols.end(), cw.columns[d].begin(), cw.columns[d].end());
    }
  }
  return unpack_symbols(symbols, bits_, rec.len_bytes);
}

void Cluster::save(const std::string& dir) const {
  fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir + ": " + ec.message());
  const auto& p = code_.params;
  json meta = {{"family", to_string(spec_.family)},
               {"nbar", p.nbar},
               {"w", p.w},
               {"r", p.r},
               {"s", p.s},
               {"q", code_.field.q()},
               {"c", code_.field.c()},
               {"n", p.n},
               {"k", p.k},
               {"d", p.d},
               {"dc", p.dc},
               {"N", p.N},
               {"stripes", json::array()}};
  for (const auto& o : objects_) meta["stripes"].push_back({{"id", o.id}, {"len_bytes", o.len_bytes}});
  {
    std::ofstream out(root / "meta.json");
    if (!out) throw Error(ErrorKind::Io, "cannot write meta.json in " + dir);
    out << meta.dump(2) << "\n";
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    std::string path = node_file(root, i);
    if (!nodes_[i].up) {
      fs::remove(path, ec);
      continue;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out.write(kMagic, 4);
    out.put(static_cast<char>(kVersion));
    put_le(out, code_.field.q(), 8);
    put_le(out, p.N, 4);
    put_le(out, nodes_[i].symbols.size(), 4);
    for (Felt v : nodes_[i].symbols) put_le(out, v, 4);
    if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
  }
}

Cluster Cluster::load(const std::string& dir) {
  fs::path root(dir);
  std::ifstream in(root / "meta.json");
  if (!in) throw Error(ErrorKind::Io, "cannot read meta.json in " + dir);
  json meta;
  try {
    in >> meta;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Io, std::string("meta.json: ") + e.what());
  }
  CodeSpec spec;
  try {
    spec = parse_code_spec({{"family", meta.at("family")},
                            {"nbar", meta.at("nbar")},
                            {"w", meta.at("w")},
                            {"r", meta.at("r")},
                            {"s", meta.at("s")},
                            {"q", meta.at("q")}});
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Io, std::string("meta.json: ") + e.what());
  }
  Cluster cl(spec);
  if (cl.code_.field.c() != meta.at("c").get<std::uint64_t>() ||
      cl.code_.params.N != meta.at("N").get<std::size_t>()) {
    throw Error(ErrorKind::Io, "meta.json does not match the rebuilt code");
  }
  for (const auto& s : meta.at("stripes")) {
    ObjectRecord rec{s.at("id").get<std::size_t>(), s.at("len_bytes").get<std::size_t>(),
                     cl.stripes_, 0};
    if (rec.id != cl.objects_.size()) throw Error(ErrorKind::Io, "object ids out of order");
    rec.stripes = cl.stripes_for(rec.len_bytes);
    cl.stripes_ += rec.stripes;
    cl.objects_.push_back(rec);
  }
  const std::size_t N = cl.code_.params.N;
  for (std::size_t i = 0; i < cl.nodes_.size(); ++i) {
    std::string path = node_file(root, i);
    std::ifstream nf(path, std::ios::binary);
    if (!nf) {
      cl.nodes_[i].up = false;
      continue;
    }
    char magic[4];
    nf.read(magic, 4);
    if (!nf || !std::equal(magic, magic + 4, kMagic) || nf.get() != kVersion) {
      throw Error(ErrorKind::Io, path + ": bad header");
    }
    if (get_le(nf, 8) != cl.code_.field.q() || get_le(nf, 4) != N) {
      throw Error(ErrorKind::Io, path + ": field or N mismatch");
    }
    std::size_t count = get_le(nf, 4);
    if (count != cl.stripes_ * N) throw Error(ErrorKind::Io, path + ": symbol count mismatch");
    cl.nodes_[i].symbols.resize(count);
    for (auto& v : cl.nodes_[i].symbols) {
      v = get_le(nf, 4);
      if (v >= cl.code_.field.q()) throw Error(ErrorKind::Io, path + ": symbol out of range");
    }
  }
  return cl;
}

}  // namespace mdsarray
