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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "mdsarray/error.hpp"
#include "table.hpp"

namespace mdsarray::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io: return kIo;
    case ErrorKind::InvalidParams:
    case ErrorKind::UnknownFamily:
    case ErrorKind::OutOfRange:
    case ErrorKind::InvalidAvoidSet:
    case ErrorKind::NotPrime:
    case ErrorKind::FieldTooSmall:
    case ErrorKind::FieldExhausted:
    case ErrorKind::TooLarge: return kUsage;
    default: return kViolation;
  }
}

json to_json(const RepairReport& report) {
  return {{"failed", report.failed},
          {"helpers", report.helpers},
          {"avoided", report.avoided},
          {"downloaded_symbols", report.downloaded_symbols},
          {"accessed_columns", report.accessed_columns},
          {"gamma_optimal", report.gamma_optimal},
          {"ratio_num", report.ratio_num},
          {"ratio_den", report.ratio_den}};
}

json to_json(const MdsReport& report) {
  return {{"patterns", report.patterns},
          {"determinant_pass", report.determinant_pass},
          {"decode_pass", report.decode_pass},
          {"agree", report.agree},
          {"failures", report.failures},
          {"pass", report.pass()}};
}

json to_json(const RepairSuiteReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"failed", f.failed}, {"avoided", f.avoided}, {"reason", f.reason}});
  }
  return {{"runs", report.runs},
          {"passes", report.passes},
          {"gamma", report.gamma},
          {"gamma_optimal", report.gamma_optimal},
          {"ratio_num", report.ratio_num},
          {"ratio_den", report.ratio_den},
          {"bandwidth_exact", report.bandwidth_exact},
          {"failures", failures},
          {"pass", report.pass()}};
}

json to_json(const ConditionReport& report) {
  json clauses = json::array();
  for (const auto& c : report.clauses) {
    json j = {{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) j["witness"] = c.witness;
    clauses.push_back(j);
  }
  return {{"family", to_string(report.family)}, {"clauses", clauses}, {"pass", report.pass()}};
}

json to_json(const NodeRepairReport& report) {
  json j = {{"performed", report.performed},
            {"node", report.node},
            {"stripes", report.stripes},
            {"total_symbols", report.total_symbols}};
  if (report.performed) j["per_stripe"] = to_json(report.per_stripe);
  return j;
}

namespace {

struct Globals {
  std::string spec_path;
  std::optional<std::uint64_t> q;
  std::optional<std::uint64_t> seed;
  bool json_out = false;
};

CodeSpec resolve_spec(const Globals& g) {
  if (g.spec_path.empty()) throw Error(ErrorKind::InvalidParams, "--spec is required");
  CodeSpec spec = load_code_spec(g.spec_path);
  if (g.q) spec.q = g.q;
  if (g.seed) spec.seed = g.seed;
  return spec;
}

std::uint64_t seed_of(const CodeSpec& spec) { return spec.seed.value_or(0); }

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const Bytes& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
}

Bytes seeded_payload(std::size_t len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes out(len);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() & 0xff);
  return out;
}

int cmd_build(const Globals& g, std::ostream& out) {
  CodeSpec spec = resolve_spec(g);
  ArrayCode code = build_code(spec);
  json j = describe(code);
  j["spec"] = to_json(spec);
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_verify(const Globals& g, bool mds, bool repair, bool conditions, std::ostream& out,
               std::ostream& err) {
  if (!mds && !repair && !conditions) mds = repair = conditions = true;
  CodeSpec spec = resolve_spec(g);
  ArrayCode code = build_code(spec);
  std::uint64_t seed = seed_of(spec);
  json j = {{"code", describe(code)}, {"seed", seed}};
  bool pass = true;
  if (conditions) {
    ConditionReport rep = check_conditions(code);
    j["conditions"] = to_json(rep);
    for (const auto& c : rep.clauses) {
      if (!c.pass) err << "violation: condition " << c.name << ": " << c.witness << '\n';
    }
    pass = pass && rep.pass();
  }
  if (mds) {
    MdsReport rep = verify_mds(code, seed);
    j["mds"] = to_json(rep);
    if (!rep.failures.empty()) {
      err << "violation: mds pattern " << json(rep.failures.front()).dump() << '\n';
    }
    pass = pass && rep.pass();
  }
  if (repair) {
    RepairSuiteReport rep = verify_repair_all(code, seed);
    j["repair"] = to_json(rep);
    if (!rep.failures.empty()) {
      const auto& f = rep.failures.front();
      err << "violation: repair failed=" << f.failed << " avoid=" << json(f.avoided).dump()
          << ": " << f.reason << '\n';
    } else if (!rep.bandwidth_exact) {
      err << "violation: repair bandwidth differs from the formula\n";
    }
    pass = pass && rep.pass();
  }
  j["pass"] = pass;
  out << j.dump(2) << '\n';
  return pass ? kPass : kViolation;
}

int cmd_encode(const Globals& g, const std::string& in_path, const std::string& dir,
               std::ostream& out) {
  CodeSpec spec = resolve_spec(g);
  Bytes payload = read_file(in_path);
  Cluster cluster(spec);
  std::size_t id = cluster.ingest(payload);
  cluster.save(dir);
  json j = {{"id", id},
            {"len_bytes", payload.size()},
            {"stripes", cluster.objects().back().stripes},
            {"bits", cluster.bits()},
            {"cluster", dir}};
  out << j.dump(2) << '\n';
  return kPass;
}

int cmd_decode(const std::string& dir, const std::string& out_path, std::size_t id,
               std::ostream& out) {
  Cluster cluster = Cluster::load(dir);
  Bytes payload = cluster.read_object(id);
  write_file(out_path, payload);
  json j = {{"id", id}, {"len_bytes", payload.size()}, {"failed_nodes", cluster.failed_nodes()}};
  out << j.dump(2) << '\n';
  return kPass;
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::InvalidParams, "bad node list '" + text + "'");
    }
    out.push_back(std::stoull(piece));
  }
  return out;
}

std::size_t parse_count(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::InvalidParams, "expected a number, got '" + text + "'");
  }
  return std::stoull(text);
}

int cmd_sim(const Globals& g, const std::string& script, std::ostream& out, std::ostream& err) {
  CodeSpec spec = resolve_spec(g);
  std::ifstream in(script);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + script);
  Cluster cluster(spec);
  std::uint64_t seed = seed_of(spec);
  std::map<std::size_t, Bytes> originals;
  json events = json::array();
  auto emit = [&](const json& event, const std::string& text) {
    if (g.json_out) {
      events.push_back(event);
    } else {
      out << text << '\n';
    }
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> words{std::istream_iterator<std::string>(ls),
                                   std::istream_iterator<std::string>()};
    if (words.empty()) continue;
    const std::string& op = words[0];
    auto arg = [&](std::size_t i) -> const std::string& {
      if (i >= words.size()) {
        throw Error(ErrorKind::InvalidParams, "line " + std::to_string(lineno) + ": missing argument");
      }
      return words[i];
    };
    try {
      if (op == "ingest" || op == "ingest-file") {
        Bytes payload = op == "ingest" ? seeded_payload(parse_count(arg(1)), seed + originals.size())
                                       : read_file(arg(1));
        std::size_t id = cluster.ingest(payload);
        std::size_t stripes = cluster.objects().back().stripes;
        originals[id] = std::move(payload);
        emit({{"op", "ingest"}, {"id", id}, {"len_bytes", originals[id].size()}, {"stripes", stripes}},
             "ingest id=" + std::to_string(id) + " bytes=" + std::to_string(originals[id].size()) +
                 " stripes=" + std::to_string(stripes));
      } else if (op == "fail") {
        std::size_t node = parse_count(arg(1));
        cluster.fail_node(node);
        emit({{"op", "fail"}, {"node", node}}, "fail node=" + std::to_string(node));
      } else if (op == "repair") {
        std::size_t node = parse_count(arg(1));
        std::optional<std::vector<std::size_t>> avoid;
        if (words.size() > 2) avoid = parse_list(words[2]);
        NodeRepairReport rep = cluster.repair_node(node, avoid);
        json j = to_json(rep);
        j["op"] = "repair";
        std::string text = rep.performed
                               ? "repair node=" + std::to_string(node) +
                                     " stripes=" + std::to_string(rep.stripes) +
                                     " per_stripe=" + std::to_string(rep.per_stripe.downloaded_symbols) +
                                     " total=" + std::to_string(rep.total_symbols)
                               : "repair node=" + std::to_string(node) + " noop";
        emit(j, text);
      } else if (op == "read") {
        std::size_t id = parse_count(arg(1));
        Bytes got = cluster.read_object(id);
        auto it = originals.find(id);
        bool match = it != originals.end() && it->second == got;
        emit({{"op", "read"}, {"id", id}, {"len_bytes", got.size()}, {"match", match}},
             "read id=" + std::to_string(id) + " bytes=" + std::to_string(got.size()) +
                 (match ? " ok" : " MISMATCH"));
        if (!match) {
          if (g.json_out) out << json({{"events", events}}).dump(2) << '\n';
          err << "line " << lineno << ": read-back differs from ingested payload\n";
          return kViolation;
        }
      } else if (op == "ledger") {
        emit({{"op", "ledger"}, {"transfers", cluster.ledger().size()}, {"total", cluster.ledger_total()}},
             "ledger transfers=" + std::to_string(cluster.ledger().size()) +
                 " total=" + std::to_string(cluster.ledger_total()));
      } else if (op == "save") {
        cluster.save(arg(1));
        emit({{"op", "save"}, {"dir", arg(1)}}, "save dir=" + arg(1));
      } else {
        throw Error(ErrorKind::InvalidParams, "unknown action '" + op + "'");
      }
    } catch (const Error& e) {
      if (g.json_out) out << json({{"events", events}}).dump(2) << '\n';
      err << "line " << lineno << ": " << e.what() << '\n';
      return exit_code_for(e.kind());
    }
  }
  if (g.json_out) {
    out << json({{"events", events}, {"ledger_total", cluster.ledger_total()}}).dump(2) << '\n';
  } else {
    out << "done ledger_total=" << cluster.ledger_total() << '\n';
  }
  return kPass;
}

struct TableArgs {
  std::string family, r, w, nbar, s;
  bool csv = false;
};

int cmd_table(const Globals& g, const TableArgs& a, std::ostream& out) {
  std::vector<TableRow> rows;
  bool ranged = !a.r.empty() || !a.w.empty() || !a.nbar.empty() || !a.s.empty();
  Family family = a.family.empty() ? Family::C1 : family_from_string(a.family);
  if (!ranged) {
    for (auto q : desk_rows()) {
      q.family = family;
      for (auto& row : table_rows(q)) rows.push_back(row);
    }
  } else {
    bool base = family == Family::C0 || family == Family::YB1 || family == Family::YB2;
    TableQuery q;
    q.family = family;
    q.r = parse_range(a.r.empty() ? "3" : a.r);
    q.w = parse_range(a.w.empty() ? "2" : a.w);
    q.nbar = parse_range(a.nbar.empty() ? "5" : a.nbar);
    q.s = parse_range(a.s.empty() ? (base ? "1" : "2") : a.s);
    rows = table_rows(q);
  }
  if (rows.empty()) throw Error(ErrorKind::InvalidParams, "no valid parameter combination");
  if (g.json_out) {
    out << render_json(rows).dump(2) << '\n';
  } else if (a.csv) {
    out << render_csv(rows);
  } else {
    out << render_text(rows);
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mdsarray: MDS array codes with near-optimal repair"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--spec", g.spec_path, "code spec JSON file");
  app.add_option("--q", g.q, "field size override");
  app.add_option("--seed", g.seed, "seed for test data");
  app.add_flag("--json", g.json_out, "JSON output where text is the default");

  auto* build = app.add_subcommand("build", "build a code and print its parameters");

  bool v_mds = false, v_repair = false, v_cond = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_flag("--mds", v_mds, "exhaustive erasure patterns");
  verify->add_flag("--repair", v_repair, "every failed node and avoid set");
  verify->add_flag("--conditions", v_cond, "coefficient conditions");

  std::string in_path, out_path, dir;
  auto* encode = app.add_subcommand("encode", "stripe a file into a cluster directory");
  encode->add_option("--in", in_path, "input file")->required();
  encode->add_option("--out", dir, "cluster directory")->required();

  std::size_t id = 0;
  auto* decode = app.add_subcommand("decode", "read an object back from a cluster directory");
  decode->add_option("--cluster", dir, "cluster directory")->required();
  decode->add_option("--out", out_path, "output file")->required();
  decode->add_option("--id", id, "object id");

  TableArgs ta;
  auto* table = app.add_subcommand("table", "parameter and ratio table");
  table->add_option("--family", ta.family, "family (default C1)");
  table->add_option("--r", ta.r, "r range, e.g. 3-4");
  table->add_option("--w", ta.w, "w range");
  table->add_option("--nbar", ta.nbar, "nbar range");
  table->add_option("--s", ta.s, "s range");
  table->add_flag("--csv", ta.csv, "CSV output");

  std::string script;
  auto* sim = app.add_subcommand("sim", "run a cluster script");
  sim->add_option("--script", script, "script file")->required();

  for (auto* sub : {build, verify, encode, decode, table, sim}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*build) return cmd_build(g, out);
    if (*verify) return cmd_verify(g, v_mds, v_repair, v_cond, out, err);
    if (*encode) return cmd_encode(g, in_path, dir, out);
    if (*decode) return cmd_decode(dir, out_path, id, out);
    if (*table) return cmd_table(g, ta, out);
    if (*sim) return cmd_sim(g, script, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace mdsarray::cli
