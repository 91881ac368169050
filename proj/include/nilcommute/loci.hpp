#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcommute/burge.hpp"
#include "nilcommute/commutator.hpp"
#include "nilcommute/field_matrix.hpp"
#include "nilcommute/partition.hpp"
#include "nilcommute/tropical.hpp"

namespace nilcommute {

/// One affine coordinate of the commutant of J_{(u,u-r)}:
/// a_1..a_{u-1}, b_1..b_{u-r-1}, g_0..g_{u-r-1}, h_0..h_{u-r-1}.
struct Coordinate {
  enum class Kind { a, b, g, h };
  Kind kind;
  int index;

  std::string name() const {
    static constexpr char letters[] = {'a', 'b', 'g', 'h'};
    return std::string(1, letters[static_cast<int>(kind)]) + "_" + std::to_string(index);
  }

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
  friend auto operator<=>(const Coordinate&, const Coordinate&) = default;
};

inline Coordinate coord_a(int i) { return {Coordinate::Kind::a, i}; }
inline Coordinate coord_b(int i) { return {Coordinate::Kind::b, i}; }
inline Coordinate coord_g(int i) { return {Coordinate::Kind::g, i}; }
inline Coordinate coord_h(int i) { return {Coordinate::Kind::h, i}; }

/// All coordinates in the order a, b, g, h.
inline std::vector<Coordinate> coordinates(int u, int r) {
  std::vector<Coordinate> out;
  for (int i = 1; i <= u - 1; ++i) out.push_back(coord_a(i));
  for (int i = 1; i <= u - r - 1; ++i) out.push_back(coord_b(i));
  for (int i = 0; i <= u - r - 1; ++i) out.push_back(coord_g(i));
  for (int i = 0; i <= u - r - 1; ++i) out.push_back(coord_h(i));
  return out;
}

inline std::size_t coordinate_index(int u, int r, Coordinate c) {
  const int w = u - r;
  switch (c.kind) {
    case Coordinate::Kind::a:
      if (c.index >= 1 && c.index <= u - 1) return static_cast<std::size_t>(c.index - 1);
      break;
    case Coordinate::Kind::b:
      if (c.index >= 1 && c.index <= w - 1) return static_cast<std::size_t>(u - 1 + c.index - 1);
      break;
    case Coordinate::Kind::g:
      if (c.index >= 0 && c.index <= w - 1) return static_cast<std::size_t>(u - 1 + w - 1 + c.index);
      break;
    case Coordinate::Kind::h:
      if (c.index >= 0 && c.index <= w - 1) return static_cast<std::size_t>(u - 1 + 2 * w - 1 + c.index);
      break;
  }
  throw std::out_of_range("coordinate " + c.name() + " does not exist for this shape");
}

inline const TruncPoly& coordinate_poly(const TwoPartElement& e, Coordinate::Kind k) {
  switch (k) {
    case Coordinate::Kind::a: return e.a;
    case Coordinate::Kind::b: return e.b;
    case Coordinate::Kind::g: return e.g;
    case Coordinate::Kind::h: return e.h;
  }
  throw std::logic_error("unreachable");
}

inline Scalar coordinate_value(const TwoPartElement& e, Coordinate c) {
  coordinate_index(e.u, e.r, c);
  return coordinate_poly(e, c.kind).coeff(static_cast<std::size_t>(c.index));
}

inline void set_coordinate(TwoPartElement& e, Coordinate c, Scalar v) {
  coordinate_index(e.u, e.r, c);
  TruncPoly* p = nullptr;
  switch (c.kind) {
    case Coordinate::Kind::a: p = &e.a; break;
    case Coordinate::Kind::b: p = &e.b; break;
    case Coordinate::Kind::g: p = &e.g; break;
    case Coordinate::Kind::h: p = &e.h; break;
  }
  p->set_coeff(static_cast<std::size_t>(c.index), v);
}

/// sign * x * y
struct BilinearTerm {
  int sign;
  Coordinate x, y;
  friend bool operator==(const BilinearTerm&, const BilinearTerm&) = default;
};

struct Quadric {
  std::vector<BilinearTerm> terms;

  std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& t = terms[i];
      if (i == 0)
        os << (t.sign < 0 ? "-" : "");
      else
        os << (t.sign < 0 ? " - " : " + ");
      os << t.x.name() << '*' << t.y.name();
    }
    return os.str();
  }

  friend bool operator==(const Quadric&, const Quadric&) = default;
};

/// The defining equations of the cell (k, l) locus for Q = (u, u-r):
/// coordinates that vanish, then the bilinear forms
/// sum_j a_{k+j} b_{r-k+d-j} - sum_j g_j h_{d-j}, d = 0..k+l-r-1.
struct EquationSet {
  int u, r, k, l;
  std::vector<Coordinate> linear_vars;
  std::vector<Quadric> quadrics;

  std::size_t size() const { return linear_vars.size() + quadrics.size(); }

  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : linear_vars) out.push_back(c.name());
    for (const auto& q : quadrics) out.push_back(q.to_string());
    return out;
  }
};

/// 1-based table position.
struct Cell {
  int k, l;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline bool is_valid_cell(int u, int r, int k, int l) {
  return u > r && r >= 2 && k >= 1 && k <= r - 1 && l >= 1 && l <= u - r;
}

inline EquationSet equations(int u, int r, int k, int l) {
  if (!is_valid_cell(u, r, k, l)) throw std::invalid_argument("equations: cell outside the table");
  EquationSet e{u, r, k, l, {}, {}};
  for (int i = 1; i <= k - 1; ++i) e.linear_vars.push_back(coord_a(i));
  if (k + l <= r) {
    for (int i = 1; i <= l - 1; ++i) e.linear_vars.push_back(coord_b(i));
    return e;
  }
  for (int i = 1; i <= r - k - 1; ++i) e.linear_vars.push_back(coord_b(i));
  for (int d = 0; d <= k + l - r - 1; ++d) {
    Quadric q;
    for (int j = 0; j <= d; ++j) q.terms.push_back({+1, coord_a(k + j), coord_b(r - k + d - j)});
    for (int j = 0; j <= d; ++j) q.terms.push_back({-1, coord_g(j), coord_h(d - j)});
    e.quadrics.push_back(std::move(q));
  }
  return e;
}

inline Scalar evaluate(const Quadric& q, const TwoPartElement& e) {
  const PrimeField& F = e.field();
  Scalar acc = 0;
  for (const auto& t : q.terms) {
    const Scalar v = F.mul(coordinate_value(e, t.x), coordinate_value(e, t.y));
    acc = t.sign > 0 ? F.add(acc, v) : F.sub(acc, v);
  }
  return acc;
}

inline void check_shape(const EquationSet& E, const TwoPartElement& e) {
  if (E.u != e.u || E.r != e.r) throw std::invalid_argument("equation set and element have different shapes");
}

/// Values of the linear equations, then of the quadrics.
inline std::vector<Scalar> evaluate(const EquationSet& E, const TwoPartElement& e) {
  check_shape(E, e);
  std::vector<Scalar> out;
  for (const auto& c : E.linear_vars) out.push_back(coordinate_value(e, c));
  for (const auto& q : E.quadrics) out.push_back(evaluate(q, e));
  return out;
}

inline bool satisfies(const EquationSet& E, const TwoPartElement& e) {
  const auto v = evaluate(E, e);
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

/// ord(a) >= k and ord(det M) >= k + l. Agrees with satisfies() wherever
/// ord(a) <= k, in particular on the dense set a_k != 0.
inline bool order_form_holds(const EquationSet& E, const TwoPartElement& e) {
  check_shape(E, e);
  return e.a.ord() >= ExtNat(E.k) && det2(e).ord() >= ExtNat(E.k + E.l);
}

inline int free_coordinate_count(int u, int r, int k, int l) { return 4 * u - 3 * r - k - l; }

/// A general point of the cell locus: the vanishing coordinates are zero,
/// a_k is a uniform nonzero scalar, the remaining free coordinates are
/// uniform, and each quadric is solved in turn for b_{r-k+d} (its
/// coefficient is a_k).
inline TwoPartElement sample_on_locus(int u, int r, int k, int l, PrimeField field, Rng& rng) {
  const EquationSet E = equations(u, r, k, l);
  TwoPartElement e = TwoPartElement::zero(u, r, field);
  std::set<Coordinate> fixed(E.linear_vars.begin(), E.linear_vars.end());
  const int nq = static_cast<int>(E.quadrics.size());
  for (int d = 0; d < nq; ++d) fixed.insert(coord_b(r - k + d));
  for (const auto& c : coordinates(u, r)) {
    if (fixed.count(c)) continue;
    set_coordinate(e, c, c == coord_a(k) ? field.random_nonzero(rng) : field.random(rng));
  }
  const Scalar inv_ak = field.inv(coordinate_value(e, coord_a(k)));
  for (int d = 0; d < nq; ++d) {
    Scalar rhs = 0;
    for (int j = 0; j <= d; ++j)
      rhs = field.add(rhs, field.mul(coordinate_value(e, coord_g(j)), coordinate_value(e, coord_h(d - j))));
    for (int j = 1; j <= d; ++j)
      rhs = field.sub(rhs, field.mul(coordinate_value(e, coord_a(k + j)), coordinate_value(e, coord_b(r - k + d - j))));
    set_coordinate(e, coord_b(r - k + d), field.mul(rhs, inv_ak));
  }
  return e;
}

inline FieldMatrix jacobian_at(const EquationSet& E, const TwoPartElement& e) {
  check_shape(E, e);
  const PrimeField& F = e.field();
  FieldMatrix J(F, E.size(), e.coordinate_count());
  std::size_t row = 0;
  for (const auto& c : E.linear_vars) J(row++, coordinate_index(E.u, E.r, c)) = 1;
  for (const auto& q : E.quadrics) {
    for (const auto& t : q.terms) {
      const std::size_t ix = coordinate_index(E.u, E.r, t.x), iy = coordinate_index(E.u, E.r, t.y);
      const Scalar vx = coordinate_value(e, t.x), vy = coordinate_value(e, t.y);
      J(row, ix) = t.sign > 0 ? F.add(J(row, ix), vy) : F.sub(J(row, ix), vy);
      J(row, iy) = t.sign > 0 ? F.add(J(row, iy), vx) : F.sub(J(row, iy), vx);
    }
    ++row;
  }
  return J;
}

inline int jacobian_rank_at(const EquationSet& E, const TwoPartElement& e) {
  return static_cast<int>(jacobian_at(E, e).rank());
}

/// Whether the locus of `inner` lies in the closure of the locus of `outer`:
/// same row and l <= l2, or k <= k2, l <= l2 and k2 + l <= r.
inline bool containment_predicate(int r, Cell outer, Cell inner) {
  if (outer.k == inner.k && outer.l <= inner.l) return true;
  return outer.k <= inner.k && outer.l <= inner.l && inner.k + outer.l <= r;
}

struct ContainmentResult {
  bool predicate;
  bool montecarlo;
};

/// Predicate versus sampling: every general point of the `inner` cell
/// satisfies the equations of `outer`.
inline ContainmentResult closure_contains(int u, int r, Cell outer, Cell inner, int samples, PrimeField field,
                                          std::uint64_t seed) {
  const EquationSet E = equations(u, r, outer.k, outer.l);
  equations(u, r, inner.k, inner.l);
  bool all = true;
  for (int s = 0; s < samples && all; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    all = satisfies(E, sample_on_locus(u, r, inner.k, inner.l, field, rng));
  }
  return {containment_predicate(r, outer, inner), all};
}

struct CellReport {
  Partition q;
  Cell cell;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int samples = 0;
  std::optional<Partition> max_type;
  Partition expected;
  double match_rate = 0;
  double jacobian_full_rank_rate = 0;
  double tropical_profile_rate = 0;
  int converse_hits = 0;
  int converse_violations = 0;
  bool jacobian_rank_ok = false;
  bool tropical_agree = false;
  bool pass = false;

  std::string converse_status() const {
    if (converse_violations > 0) return "fail";
    return converse_hits == 0 ? "vacuous-pass" : "pass";
  }
};

inline constexpr double min_match_rate = 0.95;
inline constexpr double min_generic_rate = 0.99;

/// Samples the cell locus and checks the generic Jordan type, smoothness,
/// and the tropical prediction. Independent samples of the whole commutant
/// whose type equals the cell partition must satisfy the cell equations.
inline CellReport verify_cell(int u, int r, int k, int l, int samples, PrimeField field, std::uint64_t seed) {
  if (!is_valid_cell(u, r, k, l)) throw std::invalid_argument("verify_cell: cell outside the table");
  if (samples < 1) throw std::invalid_argument("verify_cell: need at least one sample");
  CellReport rep;
  rep.q = Partition{u, u - r};
  rep.cell = {k, l};
  rep.prime = field.modulus();
  rep.seed = seed;
  rep.samples = samples;
  rep.expected = table(rep.q).at(k, l);

  const EquationSet E = equations(u, r, k, l);
  std::vector<int> predicted{0};
  for (int c : predicted_coranks(u, r, k, l, 2 * u + 1)) predicted.push_back(c);

  std::vector<Partition> types;
  int matches = 0, full_rank = 0, profile_ok = 0;
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    const TwoPartElement e = sample_on_locus(u, r, k, l, field, rng);
    const std::vector<int> prof = corank_profile(assemble(e));
    const Partition t = jordan_from_coranks(prof);
    if (t == rep.expected) ++matches;
    if (jacobian_rank_at(E, e) == static_cast<int>(E.size())) ++full_rank;
    bool same = true;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      const int exact = i < prof.size() ? prof[i] : prof.back();
      if (exact != predicted[i]) same = false;
    }
    if (same) ++profile_ok;
    if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(t);
  }

  const std::uint64_t converse_seed = derive_seed(seed, 0x636f6e7665727365ull);
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(converse_seed, static_cast<std::uint64_t>(s)));
    const TwoPartElement e = TwoPartElement::from_commutator(sample_commutator(rep.q, field, rng));
    if (jordan_type(e) == rep.expected) {
      ++rep.converse_hits;
      if (!satisfies(E, e)) ++rep.converse_violations;
    }
  }

  rep.max_type = dominance_maximum(types);
  rep.match_rate = static_cast<double>(matches) / samples;
  rep.jacobian_full_rank_rate = static_cast<double>(full_rank) / samples;
  rep.tropical_profile_rate = static_cast<double>(profile_ok) / samples;
  rep.jacobian_rank_ok = rep.jacobian_full_rank_rate >= min_generic_rate;
  rep.tropical_agree = predicted_jordan_type(u, r, k, l) == rep.expected;
  rep.pass = rep.max_type && *rep.max_type == rep.expected && rep.match_rate >= min_match_rate &&
             rep.jacobian_rank_ok && rep.tropical_agree && rep.converse_violations == 0;
  return rep;
}

struct BranchReport {
  std::string label;
  std::vector<Coordinate> extra_zeros;
  std::optional<Partition> max_type;
  std::map<Partition, int> types;
  int equation_failures = 0;
};

struct IntersectReport {
  Partition q;
  std::vector<Cell> cells;
  int samples = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  bool sampled = false;
  std::string reason;
  std::vector<BranchReport> branches;
};

namespace detail {

inline std::vector<Quadric> reduce_quadrics(const std::vector<Quadric>& qs, const std::set<Coordinate>& zeros) {
  std::vector<Quadric> out;
  for (const auto& q : qs) {
    Quadric red;
    for (const auto& t : q.terms)
      if (!zeros.count(t.x) && !zeros.count(t.y)) red.terms.push_back(t);
    if (!red.terms.empty()) out.push_back(std::move(red));
  }
  return out;
}

inline int pivot_rank(const Coordinate& c) {
  switch (c.kind) {
    case Coordinate::Kind::b: return 3;
    case Coordinate::Kind::a: return 2;
    case Coordinate::Kind::h: return 1;
    case Coordinate::Kind::g: return 0;
  }
  return 0;
}

/// Pivot per quadric such that each pivot is untouched by earlier quadrics;
/// empty if no such plan exists.
inline std::optional<std::vector<Coordinate>> plan_pivots(const std::vector<Quadric>& qs) {
  std::set<Coordinate> seen;
  std::vector<Coordinate> pivots;
  for (const auto& q : qs) {
    std::optional<Coordinate> best;
    for (const auto& t : q.terms)
      for (const Coordinate& c : {t.x, t.y}) {
        if (seen.count(c)) continue;
        if (!best || pivot_rank(c) > pivot_rank(*best) || (pivot_rank(c) == pivot_rank(*best) && c.index > best->index))
          best = c;
      }
    if (!best) return std::nullopt;
    pivots.push_back(*best);
    for (const auto& t : q.terms) {
      seen.insert(t.x);
      seen.insert(t.y);
    }
  }
  return pivots;
}

}  // namespace detail

/// Samples the common zero set of several cells' equations and reports the
/// dominance-maximum Jordan type on each branch. A bilinear form that
/// collapses to a single monomial x*y splits the set into the branches
/// x = 0 and y = 0 (at most one such split); richer systems are reported as
/// not sampled.
inline IntersectReport intersect_experiment(int u, int r, const std::vector<Cell>& cells, int samples,
                                            PrimeField field, std::uint64_t seed) {
  if (cells.empty()) throw std::invalid_argument("intersect_experiment: no cells");
  IntersectReport rep;
  rep.q = Partition{u, u - r};
  rep.cells = cells;
  rep.samples = samples;
  rep.prime = field.modulus();
  rep.seed = seed;

  std::set<Coordinate> zeros;
  std::vector<Quadric> quadrics;
  std::vector<EquationSet> sets;
  for (const auto& c : cells) {
    sets.push_back(equations(u, r, c.k, c.l));
    zeros.insert(sets.back().linear_vars.begin(), sets.back().linear_vars.end());
    for (const auto& q : sets.back().quadrics)
      if (std::find(quadrics.begin(), quadrics.end(), q) == quadrics.end()) quadrics.push_back(q);
  }

  struct Plan {
    std::string label;
    std::vector<Coordinate> extra;
    std::set<Coordinate> zeros;
  };
  std::vector<Plan> plans{{"generic", {}, zeros}};
  {
    const auto red = detail::reduce_quadrics(quadrics, zeros);
    const auto mono = std::find_if(red.begin(), red.end(), [](const Quadric& q) { return q.terms.size() == 1; });
    if (mono != red.end()) {
      const BilinearTerm t = mono->terms.front();
      plans.clear();
      for (const Coordinate& z : {t.x, t.y}) {
        Plan p{z.name() + "=0", {z}, zeros};
        p.zeros.insert(z);
        plans.push_back(std::move(p));
      }
    }
  }

  std::vector<std::pair<Plan, std::vector<Coordinate>>> ready;
  for (auto& p : plans) {
    const auto red = detail::reduce_quadrics(quadrics, p.zeros);
    for (const auto& q : red)
      if (q.terms.size() == 1) {
        rep.reason = "more than one monomial split needed";
        return rep;
      }
    auto pivots = detail::plan_pivots(red);
    if (!pivots) {
      rep.reason = "no sequential pivot order for the bilinear forms";
      return rep;
    }
    ready.emplace_back(std::move(p), std::move(*pivots));
  }

  rep.sampled = true;
  for (std::size_t b = 0; b < ready.size(); ++b) {
    const auto& [plan, pivots] = ready[b];
    const auto red = detail::reduce_quadrics(quadrics, plan.zeros);
    const std::set<Coordinate> pivot_set(pivots.begin(), pivots.end());
    BranchReport br{plan.label, plan.extra, std::nullopt, {}, 0};
    std::vector<Partition> seen;
    const std::uint64_t branch_seed = derive_seed(seed, 0x6272616e6368ull + b);
    for (int s = 0; s < samples; ++s) {
      Rng rng(derive_seed(branch_seed, static_cast<std::uint64_t>(s)));
      std::optional<TwoPartElement> point;
      for (int attempt = 0; attempt < 100 && !point; ++attempt) {
        TwoPartElement e = TwoPartElement::zero(u, r, field);
        for (const auto& c : coordinates(u, r))
          if (!plan.zeros.count(c) && !pivot_set.count(c)) set_coordinate(e, c, field.random(rng));
        bool ok = true;
        for (std::size_t i = 0; i < red.size() && ok; ++i) {
          Scalar coef = 0, rest = 0;
          for (const auto& t : red[i].terms) {
            const bool px = t.x == pivots[i], py = t.y == pivots[i];
            if (px || py) {
              const Scalar partner = coordinate_value(e, px ? t.y : t.x);
              coef = t.sign > 0 ? field.add(coef, partner) : field.sub(coef, partner);
            } else {
              const Scalar v = field.mul(coordinate_value(e, t.x), coordinate_value(e, t.y));
              rest = t.sign > 0 ? field.add(rest, v) : field.sub(rest, v);
            }
          }
          if (coef == 0) {
            ok = false;
          } else {
            set_coordinate(e, pivots[i], field.mul(field.neg(rest), field.inv(coef)));
          }
        }
        if (ok) point = std::move(e);
      }
      if (!point) {
        ++br.equation_failures;
        continue;
      }
      bool on_all = true;
      for (const auto& E : sets) on_all = on_all && satisfies(E, *point);
      for (const auto& z : plan.extra) on_all = on_all && coordinate_value(*point, z) == 0;
      if (!on_all) ++br.equation_failures;
      const Partition t = jordan_type(*point);
      ++br.types[t];
      if (std::find(seen.begin(), seen.end(), t) == seen.end()) seen.push_back(t);
    }
    br.max_type = dominance_maximum(seen);
    rep.branches.push_back(std::move(br));
  }
  return rep;
}

struct SurveyReport {
  Partition q;
  int samples = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::map<Partition, int> types;
  std::vector<Partition> outside_box;
  bool all_in_box = false;
};

/// Jordan types of random elements of the commutant of J_Q, checked
/// against the box of partitions with generic type Q.
inline SurveyReport survey(const Partition& q, int samples, PrimeField field, std::uint64_t seed) {
  if (q.empty() || !is_stable(q)) throw std::invalid_argument("survey: Q is not stable");
  SurveyReport rep;
  rep.q = q;
  rep.samples = samples;
  rep.prime = field.modulus();
  rep.seed = seed;
  std::set<Partition> box;
  for (const auto& [idx, p] : box_partitions(q)) box.insert(p);
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    ++rep.types[jordan_type(sample_commutator(q, field, rng))];
  }
  for (const auto& [t, n] : rep.types)
    if (!box.count(t)) rep.outside_box.push_back(t);
  rep.all_in_box = rep.outside_box.empty();
  return rep;
}

}  // namespace nilcommute
