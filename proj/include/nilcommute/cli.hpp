#pragma once

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilcommute/burge.hpp"
#include "nilcommute/commutator.hpp"
#include "nilcommute/loci.hpp"
#include "nilcommute/partition.hpp"
#include "nilcommute/report.hpp"

namespace nilcommute {

enum ExitCode : int { exit_pass = 0, exit_failure = 1, exit_usage = 2 };

namespace cli_detail {

/// "[5,2]"
inline std::string bracket(const Partition& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) s += (i ? "," : "") + std::to_string(p[static_cast<std::size_t>(i)]);
  return s + "]";
}

inline std::string show(const Partition& p) { return bracket(p) + " " + to_block_string(p); }

inline std::string rate(double x) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << x;
  return os.str();
}

inline std::pair<int, int> two_part(const Partition& q) {
  if (!is_two_part_stable(q)) throw std::invalid_argument("Q must be a stable partition with two parts");
  return {q[0], q[0] - q[1]};
}

/// "k,l"
inline Cell parse_cell(const std::string& text) {
  std::istringstream is(text);
  std::string a, b, extra;
  if (!std::getline(is, a, ',') || !std::getline(is, b, ',') || std::getline(is, extra, ','))
    throw std::invalid_argument("cell must be written k,l");
  try {
    std::size_t pa = 0, pb = 0;
    const int k = std::stoi(a, &pa), l = std::stoi(b, &pb);
    if (pa != a.size() || pb != b.size()) throw std::invalid_argument("");
    return {k, l};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("cell must be written k,l");
  }
}

/// "1,2+2,1"
inline std::vector<Cell> parse_cells(const std::string& text) {
  std::vector<Cell> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    out.push_back(parse_cell(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
    if (plus == std::string::npos) return out;
    start = plus + 1;
  }
}

inline void check_cell(int u, int r, Cell c) {
  if (!is_valid_cell(u, r, c.k, c.l))
    throw std::invalid_argument("cell (" + std::to_string(c.k) + "," + std::to_string(c.l) + ") is outside the table");
}

inline Json envelope(const std::string& command, const RunConfig& cfg) {
  return Json{{"command", command}, {"config", to_json(cfg)}};
}

}  // namespace cli_detail

inline int cmd_burge(const std::string& action, const std::string& partition, const std::string& code,
                     const RunConfig& cfg, std::ostream& out) {
  using namespace cli_detail;
  Json j = envelope("burge " + action, cfg);
  std::string text;
  if (action == "encode") {
    const Partition p = parse_partition(partition);
    const BurgeWord w = encode(p);
    j["partition"] = to_json(p);
    j["code"] = w.to_compact();
    j["run_length"] = w.to_run_length();
    text = w.to_run_length();
  } else if (action == "decode") {
    const BurgeWord w = BurgeWord::parse(code);
    const Partition p = decode(w);
    j["code"] = w.to_compact();
    j["partition"] = to_json(p);
    text = show(p);
  } else {
    Partition p;
    if (!code.empty()) {
      const BurgeWord w = BurgeWord::parse(code);
      j["code"] = w.to_compact();
      p = dmap_from_code(w);
    } else {
      const Partition src = parse_partition(partition);
      j["partition"] = to_json(src);
      p = dmap(src);
    }
    j["dmap"] = to_json(p);
    text = show(p);
  }
  if (cfg.output == OutputFormat::json)
    out << j.dump() << '\n';
  else
    out << text << '\n';
  return exit_pass;
}

inline int cmd_box(const Partition& q, bool as_table, const RunConfig& cfg, std::ostream& out) {
  using namespace cli_detail;
  if (q.empty() || !is_stable(q)) throw std::invalid_argument("Q = " + q.to_string() + " is not stable");
  if (as_table) two_part(q);
  Json j = envelope(as_table ? "table" : "box", cfg);
  const Json box = box_json(q);
  bool ok = true;
  for (const auto& c : box["cells"]) ok = ok && c["parts_ok"].get<bool>() && c["dmap_ok"].get<bool>();
  for (const auto& [k, v] : box.items()) j[k] = v;
  if (as_table) {
    const auto [u, r] = two_part(q);
    const PartitionTable t = table(q);
    Json rows = Json::array();
    for (int k = 1; k <= t.rows(); ++k) {
      Json row = Json::array();
      for (int l = 1; l <= t.cols(); ++l) row.push_back(t.at(k, l).parts());
      rows.push_back(std::move(row));
    }
    j["u"] = u;
    j["r"] = r;
    j["table"] = std::move(rows);
  }
  j["pass"] = ok;

  if (cfg.output == OutputFormat::json) {
    out << j.dump() << '\n';
  } else if (as_table) {
    const PartitionTable t = table(q);
    out << "table " << bracket(q) << ": " << t.rows() << " x " << t.cols() << '\n';
    for (int k = 1; k <= t.rows(); ++k) {
      out << "k=" << k << ':';
      for (int l = 1; l <= t.cols(); ++l) out << "  " << show(t.at(k, l));
      out << '\n';
    }
  } else {
    out << "box " << bracket(q) << " key " << Partition(key(q).s).to_string() << ": " << box["cells"].size()
        << " cells\n";
    for (const auto& c : box["cells"]) {
      const Partition p(c["partition"].get<std::vector<int>>());
      out << "  " << c["index"].dump() << "  " << BurgeWord::parse(c["code"].get<std::string>()).to_run_length()
          << "  " << show(p) << "  parts " << (c["parts_ok"].get<bool>() ? "ok" : "FAIL") << "  dmap "
          << (c["dmap_ok"].get<bool>() ? "ok" : "FAIL") << '\n';
    }
  }
  return ok ? exit_pass : exit_failure;
}

inline int cmd_verify(const Partition& q, const std::string& cell, const RunConfig& cfg, std::ostream& out) {
  using namespace cli_detail;
  const auto [u, r] = two_part(q);
  std::vector<Cell> cells;
  if (!cell.empty()) {
    cells.push_back(parse_cell(cell));
    check_cell(u, r, cells.back());
  } else {
    for (int k = 1; k <= r - 1; ++k)
      for (int l = 1; l <= u - r; ++l) cells.push_back({k, l});
  }
  const PrimeField field(cfg.prime);
  Json j = envelope("verify", cfg);
  j["q"] = q.parts();
  Json reports = Json::array();
  int passed = 0;
  for (const Cell& c : cells) {
    const CellReport rep = verify_cell(u, r, c.k, c.l, cfg.samples, field, cfg.seed);
    passed += rep.pass ? 1 : 0;
    if (cfg.output == OutputFormat::json) {
      reports.push_back(to_json(rep));
    } else {
      out << "cell (" << c.k << ',' << c.l << ")  expected " << show(rep.expected) << "  max "
          << (rep.max_type ? show(*rep.max_type) : std::string("none")) << "  match " << rate(rep.match_rate)
          << "  jacobian " << (rep.jacobian_rank_ok ? "ok" : "FAIL") << "  tropical "
          << (rep.tropical_agree ? "ok" : "FAIL") << "  converse " << rep.converse_status() << "  "
          << (rep.pass ? "PASS" : "FAIL") << '\n';
    }
  }
  const bool ok = passed == static_cast<int>(cells.size());
  if (cfg.output == OutputFormat::json) {
    j["reports"] = std::move(reports);
    j["passed"] = passed;
    j["total"] = cells.size();
    j["pass"] = ok;
    out << j.dump() << '\n';
  } else {
    out << passed << '/' << cells.size() << " cells pass\n";
  }
  return ok ? exit_pass : exit_failure;
}

inline int cmd_survey(const Partition& q, const RunConfig& cfg, std::ostream& out) {
  using namespace cli_detail;
  if (q.empty() || !is_stable(q)) throw std::invalid_argument("Q = " + q.to_string() + " is not stable");
  const SurveyReport rep = survey(q, cfg.samples, PrimeField(cfg.prime), cfg.seed);
  if (cfg.output == OutputFormat::json) {
    Json j = envelope("survey", cfg);
    const Json body = to_json(rep);
    for (const auto& [k, v] : body.items()) j[k] = v;
    out << j.dump() << '\n';
  } else {
    out << "survey " << bracket(q) << ", " << rep.samples << " samples\n";
    for (const auto& [t, n] : rep.types) out << "  " << show(t) << "  " << n << '\n';
    out << (rep.all_in_box ? "all observed types lie in the box" : "types outside the box observed") << '\n';
  }
  return rep.all_in_box ? exit_pass : exit_failure;
}

inline int cmd_intersect(const Partition& q, const std::string& cells_text, const RunConfig& cfg,
                         std::ostream& out) {
  using namespace cli_detail;
  const auto [u, r] = two_part(q);
  const std::vector<Cell> cells = parse_cells(cells_text);
  for (const Cell& c : cells) check_cell(u, r, c);
  const IntersectReport rep = intersect_experiment(u, r, cells, cfg.samples, PrimeField(cfg.prime), cfg.seed);
  bool ok = rep.sampled;
  for (const auto& b : rep.branches) ok = ok && b.max_type && b.equation_failures == 0;
  if (cfg.output == OutputFormat::json) {
    Json j = envelope("intersect", cfg);
    const Json body = to_json(rep);
    for (const auto& [k, v] : body.items()) j[k] = v;
    out << j.dump() << '\n';
  } else if (!rep.sampled) {
    out << "not sampled: " << rep.reason << '\n';
  } else {
    for (const auto& b : rep.branches)
      out << b.label << ": generic type " << (b.max_type ? show(*b.max_type) : std::string("none")) << '\n';
  }
  return ok ? exit_pass : exit_failure;
}

inline int cmd_oracle(const Partition& p, const RunConfig& cfg, std::ostream& out) {
  using namespace cli_detail;
  const Partition sampled = dmap_oracle(p, cfg.samples, PrimeField(cfg.prime), cfg.seed, cfg.size_bound);
  const Partition exact = dmap(p);
  const bool ok = sampled == exact;
  if (cfg.output == OutputFormat::json) {
    Json j = envelope("oracle", cfg);
    j["partition"] = p.parts();
    j["oracle"] = sampled.parts();
    j["dmap"] = exact.parts();
    j["agree"] = ok;
    out << j.dump() << '\n';
  } else {
    out << show(sampled) << (ok ? "  agrees with dmap" : "  disagrees with dmap " + show(exact)) << '\n';
  }
  return ok ? exit_pass : exit_failure;
}

inline std::uint64_t env_or(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos == std::string(v).size()) return x;
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument(std::string(name) + " is not a nonnegative integer");
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.prime = env_or("NILCOMMUTE_PRIME", cfg.prime);
    cfg.seed = env_or("NILCOMMUTE_SEED", cfg.seed);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App app{"Jordan types of nilpotent commutators: Burge codes, boxes and tables, locus verification"};
  app.name("nilcommute");
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--prime", cfg.prime, "prime field characteristic (env NILCOMMUTE_PRIME)");
  app.add_option("--seed", cfg.seed, "master seed (env NILCOMMUTE_SEED)");
  app.add_option("--samples", cfg.samples, "samples per experiment");
  app.add_option("--size-bound", cfg.size_bound, "largest partition size for exhaustive searches");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string partition, code, qtext, cell, cells, ptext;

  auto* burge = app.add_subcommand("burge", "Burge code of a partition");
  burge->require_subcommand(1);
  auto* enc = burge->add_subcommand("encode", "partition to code");
  enc->add_option("--partition", partition, "comma-separated parts")->required();
  auto* dec = burge->add_subcommand("decode", "code to partition");
  dec->add_option("--code", code, "run-length code, e.g. \"a a b b a\"")->required();
  auto* dm = burge->add_subcommand("dmap", "generic commuting nilpotent Jordan type");
  auto* dm_p = dm->add_option("--partition", partition, "comma-separated parts");
  auto* dm_c = dm->add_option("--code", code, "run-length code");
  dm_p->excludes(dm_c);
  dm->require_option(1);

  auto* box = app.add_subcommand("box", "box of partitions with generic type Q");
  box->add_option("--q", qtext, "stable partition")->required();
  auto* tab = app.add_subcommand("table", "table of a stable two-part Q");
  tab->add_option("--q", qtext, "stable two-part partition")->required();

  auto* ver = app.add_subcommand("verify", "check the cell loci of a two-part Q by sampling");
  ver->add_option("--q", qtext, "stable two-part partition")->required();
  ver->add_option("--cell", cell, "single cell k,l");

  auto* sur = app.add_subcommand("survey", "Jordan types of random commuting nilpotents");
  sur->add_option("--q", qtext, "stable partition")->required();

  auto* inter = app.add_subcommand("intersect", "sample an intersection of cell loci");
  inter->add_option("--q", qtext, "stable two-part partition")->required();
  inter->add_option("--cells", cells, "cells joined by '+', e.g. 1,2+2,1")->required();

  auto* orc = app.add_subcommand("oracle", "Monte-Carlo generic type in the commutant of J_P");
  orc->add_option("--p", ptext, "partition")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code_ = app.exit(e, out, err);
    return code_ == 0 ? exit_pass : exit_usage;
  }

  try {
    cfg.output = format == "json" ? OutputFormat::json : OutputFormat::text;
    cfg.validate();
    if (*burge) {
      const std::string action = *enc ? "encode" : *dec ? "decode" : "dmap";
      return cmd_burge(action, partition, code, cfg, out);
    }
    if (*box) return cmd_box(parse_partition(qtext), false, cfg, out);
    if (*tab) return cmd_box(parse_partition(qtext), true, cfg, out);
    if (*ver) return cmd_verify(parse_partition(qtext), cell, cfg, out);
    if (*sur) return cmd_survey(parse_partition(qtext), cfg, out);
    if (*inter) return cmd_intersect(parse_partition(qtext), cells, cfg, out);
    if (*orc) return cmd_oracle(parse_partition(ptext), cfg, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "failure: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"nilcommute"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace nilcommute
