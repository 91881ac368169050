// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace nilcommute;

namespace {

const PrimeField F;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void check(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_time(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

const std::vector<Partition>& stable_shapes() {
  static const std::vector<Partition> qs{Partition{5, 2},        Partition{7, 3},        Partition{9, 5},
                                         Partition{8, 5, 2},     Partition{9, 6, 3},     Partition{10, 7, 4, 1},
                                         Partition{12, 7, 4, 1}};
  return qs;
}

Outcome crit1() {
  Outcome o;
  const Partition p{5, 4, 3, 3, 3, 2, 2, 1};
  const auto t0 = std::chrono::steady_clock::now();
  const BurgeWord w = encode(p);
  const Partition d = dmap(p);
  const double dt = seconds_since(t0);
  o.check(w.to_run_length() == "b a2 b2 a7 b5 a", "code " + w.to_run_length());
  o.check(d == Partition({17, 5, 1}), "dmap " + d.to_string());
  o.check(dt < 1e-3, "took " + fmt_time(dt));
  o.detail = o.ok ? "code " + w.to_run_length() + ", dmap " + d.to_string() + ", " + fmt_time(dt) : o.detail;
  return o;
}

Outcome crit2() {
  Outcome o;
  const std::vector<Partition> chain{
      {5, 4, 3, 3, 3, 2, 2, 1}, {4, 4, 3, 3, 2, 2, 2}, {4, 3, 3, 3, 2, 2, 1}, {3, 3, 3, 3, 2, 1, 1},
      {3, 3, 3, 2, 2, 1},       {3, 3, 2, 2, 2},       {3, 2, 2, 2, 2},       {2, 2, 2, 2, 2},
      {2, 2, 2, 2, 1},          {2, 2, 2, 1, 1},       {2, 2, 1, 1, 1},       {2, 1, 1, 1, 1},
      {1, 1, 1, 1, 1},          {1, 1, 1, 1},          {1, 1, 1},             {1, 1},
      {1},                      {}};
  const std::string classes = "baabbaaaaaaabbbbba";
  Partition cur = chain.front();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    o.check(cur == chain[i], "P_" + std::to_string(i + 1) + " = " + cur.to_string());
    const char c = classify(cur) == PartitionClass::B ? 'b' : 'a';
    o.check(c == classes[i], "class of P_" + std::to_string(i + 1));
    if (i + 1 < chain.size()) cur = delta(cur);
  }
  const Partition fig{7, 6, 5, 5, 5, 2, 2, 1};
  const Partition d1 = delta(fig), d2 = delta(d1), d3 = delta(d2);
  o.check(r_set(fig) == std::vector<int>{7, 5, 2}, "R of (7,6,5^3,2^2,1)");
  o.check(d1.to_exponent_string() == "(6^2,5^2,4,2,1^2)", "dP " + d1.to_exponent_string());
  // 27 boxes; the next iterate (5^4,2,1^2) also forces three parts of size 1 here.
  o.check(d2.to_exponent_string() == "(6,5^3,3,1^3)", "d2P " + d2.to_exponent_string());
  o.check(d3.to_exponent_string() == "(5^4,2,1^2)", "d3P " + d3.to_exponent_string());
  o.check(classify(fig) == PartitionClass::A && classify(d1) == PartitionClass::A &&
              classify(d2) == PartitionClass::B,
          "classes of the iterates");
  if (o.ok) o.detail = "18 steps and 3 iterates of (7,6,5^3,2^2,1) exact";
  return o;
}

Outcome crit3() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0, failures = 0;
  for (int n = 0; n <= 30; ++n)
    for_each_partition(n, [&](const Partition& p) {
      ++count;
      if (decode(encode(p)) != p) ++failures;
    });
  const double dt = seconds_since(t0);
  o.check(failures == 0, std::to_string(failures) + " round-trip failures");
  o.check(dt < 10.0, "took " + fmt_time(dt));
  if (o.ok) o.detail = std::to_string(count) + " partitions, " + fmt_time(dt);
  return o;
}

Outcome crit4() {
  Outcome o;
  std::size_t count = 0;
  for (int n = 0; n <= 14; ++n)
    for_each_partition(n, [&](const Partition& p) {
      ++count;
      const Partition d = dmap(p);
      o.check(dmap(d) == d, "not idempotent at " + p.to_string());
      o.check(is_stable(d), "unstable image at " + p.to_string());
      o.check(d.length() == min_ar_cover(p), "length law at " + p.to_string());
    });
  if (o.ok) o.detail = std::to_string(count) + " partitions";
  return o;
}

Outcome crit5() {
  Outcome o;
  const PartitionTable t = table(Partition{5, 2});
  o.check(t.at(1, 1) == Partition({5, 2}) && t.at(1, 2) == Partition({5, 1, 1}) &&
              t.at(2, 1) == Partition({4, 2, 1}) && t.at(2, 2) == Partition({4, 1, 1, 1}),
          "table entries");
  using S = std::vector<std::string>;
  o.check(equations(5, 3, 1, 1).to_strings() == S{}, "E(1,1)");
  o.check(equations(5, 3, 1, 2).to_strings() == S{"b_1"}, "E(1,2)");
  o.check(equations(5, 3, 2, 1).to_strings() == S{"a_1"}, "E(2,1)");
  o.check(equations(5, 3, 2, 2).to_strings() == S{"a_1", "a_2*b_1 - g_0*h_0"}, "E(2,2)");
  if (o.ok) o.detail = "table and 4 equation sets exact";
  return o;
}

Outcome crit6() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t cells = 0;
  for (const Partition& q : stable_shapes()) {
    const auto box = box_partitions(q);
    std::size_t expected = 1;
    for (int s : key(q).s) expected *= static_cast<std::size_t>(s);
    std::set<Partition> distinct;
    for (const auto& [idx, p] : box) {
      distinct.insert(p);
      o.check(p.length() == idx.weight(), "length at " + p.to_string());
      o.check(dmap(p) == q, "dmap at " + p.to_string());
    }
    o.check(distinct.size() == expected && box.size() == expected, "box size for " + q.to_string());
    cells += box.size();
  }
  const double dt = seconds_since(t0);
  o.check(dt < 5.0, "took " + fmt_time(dt));
  if (o.ok) o.detail = std::to_string(cells) + " box cells over 7 shapes, " + fmt_time(dt);
  return o;
}

Outcome crit7() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int cells = 0;
  double worst = 1.0;
  for (const Partition& q : {Partition{5, 2}, Partition{7, 3}, Partition{9, 5}, Partition{8, 3}}) {
    const int u = q[0], r = q[0] - q[1];
    for (int k = 1; k <= r - 1; ++k)
      for (int l = 1; l <= u - r; ++l) {
        const CellReport rep = verify_cell(u, r, k, l, 50, F, 42);
        ++cells;
        worst = std::min(worst, rep.match_rate);
        const std::string where = q.to_string() + " cell (" + std::to_string(k) + "," + std::to_string(l) + ")";
        o.check(rep.max_type && *rep.max_type == rep.expected, "max type at " + where);
        o.check(rep.match_rate >= min_match_rate, "match rate at " + where);
      }
  }
  const double dt = seconds_since(t0);
  o.check(dt < 60.0, "took " + fmt_time(dt));
  if (o.ok) {
    std::ostringstream os;
    os << cells << " cells, worst match rate " << worst << ", " << fmt_time(dt);
    o.detail = os.str();
  }
  return o;
}

Outcome crit8() {
  Outcome o;
  int cells = 0, draws = 0, full = 0;
  for (int u = 3; u <= 10; ++u)
    for (int r = 2; r < u; ++r)
      for (int k = 1; k <= r - 1; ++k)
        for (int l = 1; l <= u - r; ++l) {
          ++cells;
          const EquationSet E = equations(u, r, k, l);
          o.check(static_cast<int>(E.size()) == k + l - 2, "equation count");
          const EquationSet big = equations(u + 1, r, k, l);
          o.check(big.linear_vars == E.linear_vars && big.quadrics == E.quadrics, "restriction compatibility");
          for (int s = 0; s < 20; ++s) {
            Rng rng(derive_seed(derive_seed(8, static_cast<std::uint64_t>(cells)), static_cast<std::uint64_t>(s)));
            ++draws;
            if (jacobian_rank_at(E, sample_on_locus(u, r, k, l, F, rng)) == k + l - 2) ++full;
          }
        }
  o.check(full >= 0.99 * draws, "full Jacobian rank in " + std::to_string(full) + "/" + std::to_string(draws));
  if (o.ok) o.detail = std::to_string(cells) + " cells, full rank " + std::to_string(full) + "/" + std::to_string(draws);
  return o;
}

Outcome crit9() {
  Outcome o;
  int cases = 0;
  for (int k = 1; k <= 6; ++k)
    for (int l = 1; l <= 6; ++l)
      for (int r = 2; r <= 8; ++r) {
        const OrderMatrix t = make_order_matrix(ExtNat(k), ExtNat(0), ExtNat(r), ExtNat(l));
        for (int s = 2; s <= 12; ++s) {
          ++cases;
          o.check(closed_form_power(k, l, r, s) == minplus_power(t, s),
                  "closed form at k=" + std::to_string(k) + " l=" + std::to_string(l) + " r=" + std::to_string(r) +
                      " s=" + std::to_string(s));
        }
      }
  int table_cells = 0;
  for (int u = 3; u <= 12; ++u)
    for (int r = 2; r < u; ++r)
      for (int k = 1; k <= r - 1; ++k)
        for (int l = 1; l <= u - r; ++l) {
          ++table_cells;
          o.check(predicted_jordan_type(u, r, k, l) == decode(table_code(u, r, k, l)),
                  "tropical type at u=" + std::to_string(u) + " r=" + std::to_string(r));
          o.check(predicted_jordan_type_from_coranks(u, r, k, l) == decode(table_code(u, r, k, l)),
                  "corank-profile type at u=" + std::to_string(u) + " r=" + std::to_string(r));
        }
  Rng pick(derive_seed(9, 0));
  int agree = 0;
  const int samples = 500;
  for (int s = 0; s < samples; ++s) {
    const int u = std::uniform_int_distribution<int>(3, 9)(pick);
    const int r = std::uniform_int_distribution<int>(2, u - 1)(pick);
    const int k = std::uniform_int_distribution<int>(1, r - 1)(pick);
    const int l = std::uniform_int_distribution<int>(1, u - r)(pick);
    Rng rng(derive_seed(9, static_cast<std::uint64_t>(s) + 1));
    const TwoPartElement e = sample_on_locus(u, r, k, l, F, rng);
    if (predicted_coranks(u, r, k, l, 1).front() == static_cast<int>(assemble(e).corank())) ++agree;
  }
  o.check(agree >= 0.99 * samples, "corank agreement " + std::to_string(agree) + "/" + std::to_string(samples));
  if (o.ok)
    o.detail = std::to_string(cases) + " closed-form cases, " + std::to_string(table_cells) + " table cells, corank " +
               std::to_string(agree) + "/" + std::to_string(samples);
  return o;
}

Outcome crit10() {
  Outcome o;
  for (const Partition& q : stable_shapes()) {
    std::vector<Partition> types;
    for (int s = 0; s < 30; ++s) {
      Rng rng(derive_seed(10, static_cast<std::uint64_t>(s)));
      const Partition t = jordan_type(sample_commutator(q, F, rng));
      o.check(dmap(t) == q, "dmap of sampled type for " + q.to_string());
      types.push_back(t);
    }
    const auto top = dominance_maximum(types);
    o.check(top && *top == q, "generic type for " + q.to_string());
  }
  if (o.ok) o.detail = "7 shapes x 30 samples";
  return o;
}

Outcome crit11() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  int count = 0, disagree = 0;
  for (int n = 1; n <= 8; ++n)
    for_each_partition(n, [&](const Partition& p) {
      ++count;
      if (dmap_oracle(p, 300, F, 11) != dmap(p)) ++disagree;
    });
  const double dt = seconds_since(t0);
  o.check(disagree == 0, std::to_string(disagree) + " disagreements");
  o.check(dt < 120.0, "took " + fmt_time(dt));
  if (o.ok) o.detail = std::to_string(count) + " partitions, " + fmt_time(dt);
  return o;
}

Outcome crit12() {
  Outcome o;
  const IntersectReport a = intersect_experiment(5, 3, {{1, 2}, {2, 1}}, 200, F, 12);
  o.check(a.sampled && a.branches.size() == 1 && a.branches[0].max_type == Partition({3, 3, 1}) &&
              a.branches[0].equation_failures == 0,
          "intersection (1,2),(2,1)");
  const IntersectReport b = intersect_experiment(5, 3, {{1, 2}, {2, 2}}, 200, F, 12);
  o.check(b.sampled && b.branches.size() == 2, "split of (1,2),(2,2)");
  for (const auto& br : b.branches)
    o.check(br.max_type == Partition({3, 2, 1, 1}) && br.equation_failures == 0, "branch " + br.label);
  int pairs = 0;
  for (const Partition& q : {Partition{5, 2}, Partition{7, 3}}) {
    const int u = q[0], r = q[0] - q[1];
    for (int k = 1; k <= r - 1; ++k)
      for (int l = 1; l <= u - r; ++l)
        for (int k2 = 1; k2 <= r - 1; ++k2)
          for (int l2 = 1; l2 <= u - r; ++l2) {
            ++pairs;
            const auto res = closure_contains(u, r, {k, l}, {k2, l2}, 50, F, 12);
            o.check(res.predicate == res.montecarlo, "containment pair in " + q.to_string());
          }
  }
  if (o.ok) o.detail = "(3,3,1); (3,2,1,1) on g_0=0 and h_0=0; " + std::to_string(pairs) + " ordered pairs agree";
  return o;
}

Outcome crit13() {
  Outcome o;
  for (const Partition& q : {Partition{5, 2}, Partition{7, 3}, Partition{8, 5, 2}}) {
    for (int s = 0; s < 100; ++s) {
      Rng rng(derive_seed(13, static_cast<std::uint64_t>(s)));
      const CommutatorElement x = sample_commutator(q, F, rng), y = sample_commutator(q, F, rng);
      o.check(assemble(multiply(x, y)) == assemble(x) * assemble(y), "product mismatch for " + q.to_string());
    }
  }
  if (o.ok) o.detail = "3 shapes x 100 pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Burge example code and dmap", crit1},
      {"delta chain and iterates of (7,6,5^3,2^2,1)", crit2},
      {"decode o encode = id for n <= 30", crit3},
      {"dmap laws for |P| <= 14", crit4},
      {"table (5,2) and its equation sets", crit5},
      {"boxes of stable partitions", crit6},
      {"generic type on every cell locus", crit7},
      {"codimension, smoothness, restriction", crit8},
      {"tropical closed forms and coranks", crit9},
      {"generic commutator type", crit10},
      {"dmap oracle agreement for |P| <= 8", crit11},
      {"intersections and containment", crit12},
      {"assemble is a ring map", crit13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.ok ? 0 : 1;
    std::printf("%s criterion %2zu: %s -- %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
