#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcommute/burge.hpp"
#include "nilcommute/commutator.hpp"
#include "nilcommute/loci.hpp"
#include "nilcommute/partition.hpp"

namespace nilcommute {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, json };

struct RunConfig {
  std::uint64_t prime = PrimeField::default_prime;
  std::uint64_t seed = 0;
  int samples = 50;
  int size_bound = default_cover_bound;
  OutputFormat output = OutputFormat::text;

  void validate() const {
    if (!is_prime(prime) || prime == 2) throw std::invalid_argument("prime must be an odd prime");
    if (samples < 1) throw std::invalid_argument("samples must be at least 1");
    if (size_bound < 0) throw std::invalid_argument("size bound must be nonnegative");
  }
};

inline Json parts_array(const Partition& p) { return Json(p.parts()); }

/// {"parts":[...]}
inline Json to_json(const Partition& p) { return Json{{"parts", p.parts()}}; }

inline Json to_json(const RunConfig& c) {
  return Json{{"prime", c.prime},
              {"seed", c.seed},
              {"samples", c.samples},
              {"size_bound", c.size_bound},
              {"output", c.output == OutputFormat::json ? "json" : "text"}};
}

inline Json to_json(const TruncPoly& f) { return Json(f.coeffs()); }

inline Json to_json(const TwoPartElement& e) {
  return Json{{"u", e.u}, {"r", e.r},         {"a", to_json(e.a)}, {"b", to_json(e.b)},
              {"g", to_json(e.g)}, {"h", to_json(e.h)}, {"p", e.field().modulus()}};
}

inline Json box_json(const Partition& q) {
  Json cells = Json::array();
  for (const auto& [idx, code] : box_codes(q)) {
    const Partition p = decode(code);
    cells.push_back(Json{{"index", idx.i},
                         {"code", code.to_compact()},
                         {"partition", p.parts()},
                         {"parts_ok", p.length() == idx.weight()},
                         {"dmap_ok", dmap(p) == q}});
  }
  return Json{{"q", q.parts()}, {"key", key(q).s}, {"cells", std::move(cells)}};
}

inline Json to_json(const CellReport& r) {
  return Json{{"q", r.q.parts()},
              {"cell", {r.cell.k, r.cell.l}},
              {"prime", r.prime},
              {"seed", r.seed},
              {"samples", r.samples},
              {"max_type", r.max_type ? Json(r.max_type->parts()) : Json(nullptr)},
              {"expected", r.expected.parts()},
              {"match_rate", r.match_rate},
              {"jacobian_full_rank_rate", r.jacobian_full_rank_rate},
              {"tropical_profile_rate", r.tropical_profile_rate},
              {"converse", {{"hits", r.converse_hits}, {"violations", r.converse_violations},
                            {"status", r.converse_status()}}},
              {"jacobian_rank_ok", r.jacobian_rank_ok},
              {"tropical_agree", r.tropical_agree},
              {"pass", r.pass}};
}

inline Json type_histogram(const std::map<Partition, int>& types) {
  Json out = Json::array();
  for (const auto& [t, n] : types) out.push_back(Json{{"type", t.parts()}, {"count", n}});
  return out;
}

inline Json to_json(const IntersectReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) cells.push_back({c.k, c.l});
  Json branches = Json::array();
  for (const auto& b : r.branches) {
    Json zeros = Json::array();
    for (const auto& z : b.extra_zeros) zeros.push_back(z.name());
    branches.push_back(Json{{"label", b.label},
                            {"extra_zeros", std::move(zeros)},
                            {"max_type", b.max_type ? Json(b.max_type->parts()) : Json(nullptr)},
                            {"equation_failures", b.equation_failures},
                            {"types", type_histogram(b.types)}});
  }
  Json out{{"q", r.q.parts()}, {"cells", std::move(cells)}, {"prime", r.prime}, {"seed", r.seed},
           {"samples", r.samples}, {"status", r.sampled ? "sampled" : "not sampled"}};
  if (!r.sampled) out["reason"] = r.reason;
  out["branches"] = std::move(branches);
  return out;
}

inline Json to_json(const SurveyReport& r) {
  Json outside = Json::array();
  for (const auto& p : r.outside_box) outside.push_back(p.parts());
  return Json{{"q", r.q.parts()},       {"prime", r.prime},
              {"seed", r.seed},         {"samples", r.samples},
              {"types", type_histogram(r.types)}, {"outside_box", std::move(outside)},
              {"all_in_box", r.all_in_box}};
}

}  // namespace nilcommute
