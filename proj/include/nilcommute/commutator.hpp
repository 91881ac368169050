#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nilcommute/burge.hpp"
#include "nilcommute/field_matrix.hpp"
#include "nilcommute/partition.hpp"
#include "nilcommute/prime_field.hpp"
#include "nilcommute/trunc_poly.hpp"

namespace nilcommute {

/// A nilpotent element of the commutant of J_Q, written as an l x l matrix
/// of module maps between the cyclic blocks F[t]/(t^{q_j}).
///
/// entry(i, j) is the image of the generator of block j in block i, stored
/// modulo t^{q_i}. It must have order at least q_i - q_j when q_i > q_j.
/// Nilpotency: among blocks of equal size (in particular on the diagonal),
/// entry(i, j) with i >= j has zero constant term.
class CommutatorElement {
 public:
  CommutatorElement(Partition q, PrimeField field, std::vector<TruncPoly> entries)
      : q_(std::move(q)), field_(field), entries_(std::move(entries)) {
    const auto l = static_cast<std::size_t>(q_.length());
    if (entries_.size() != l * l) throw std::invalid_argument("CommutatorElement: wrong number of entries");
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        const TruncPoly& e = entry(i, j);
        if (!(e.field() == field_)) throw std::invalid_argument("CommutatorElement: field mismatch");
        if (e.precision() != static_cast<std::size_t>(q_[i]))
          throw std::invalid_argument("CommutatorElement: entry precision must be q_i");
        if (e.ord() < ExtNat(static_cast<std::int64_t>(min_order(q_, i, j))))
          throw std::invalid_argument("CommutatorElement: entry violates the order constraint");
      }
  }

  /// Least admissible order of entry (i, j).
  static std::size_t min_order(const Partition& q, std::size_t i, std::size_t j) {
    const int qi = q[i], qj = q[j];
    if (qi > qj) return static_cast<std::size_t>(qi - qj);
    if (qi == qj && i >= j) return 1;
    return 0;
  }

  static CommutatorElement zero(const Partition& q, PrimeField field) {
    std::vector<TruncPoly> e;
    for (int qi : q)
      for (int j = 0; j < q.length(); ++j) e.emplace_back(field, static_cast<std::size_t>(qi));
    return CommutatorElement(q, field, std::move(e));
  }

  /// J_Q itself: multiplication by t on every block.
  static CommutatorElement jordan(const Partition& q, PrimeField field) {
    std::vector<TruncPoly> e;
    for (int i = 0; i < q.length(); ++i)
      for (int j = 0; j < q.length(); ++j)
        e.push_back(TruncPoly::monomial(field, static_cast<std::size_t>(q[i]), 1, i == j ? 1 : 0));
    return CommutatorElement(q, field, std::move(e));
  }

  const Partition& shape() const { return q_; }
  const PrimeField& field() const { return field_; }
  std::size_t blocks() const { return static_cast<std::size_t>(q_.length()); }
  std::size_t dimension() const { return static_cast<std::size_t>(q_.total()); }

  const TruncPoly& entry(std::size_t i, std::size_t j) const { return entries_[i * blocks() + j]; }

  friend bool operator==(const CommutatorElement&, const CommutatorElement&) = default;

 private:
  Partition q_;
  PrimeField field_;
  std::vector<TruncPoly> entries_;
};

/// The n x n matrix on the direct sum of blocks. Block i occupies q_i
/// consecutive coordinates; position c (1-based) holds t^{q_i - c}, so the
/// last coordinate of each block is its generator.
inline FieldMatrix assemble(const CommutatorElement& e) {
  const Partition& q = e.shape();
  const std::size_t l = e.blocks();
  FieldMatrix m(e.field(), e.dimension(), e.dimension());
  std::vector<std::size_t> offset(l + 1, 0);
  for (std::size_t i = 0; i < l; ++i) offset[i + 1] = offset[i] + static_cast<std::size_t>(q[i]);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const TruncPoly& c = e.entry(i, j);
      const int qi = q[i], qj = q[j];
      for (int row = 1; row <= qi; ++row)
        for (int col = 1; col <= qj; ++col) {
          const int idx = (qi - row) - (qj - col);
          if (idx >= 0 && idx < qi)
            m(offset[i] + static_cast<std::size_t>(row - 1), offset[j] + static_cast<std::size_t>(col - 1)) =
                c.coeff(static_cast<std::size_t>(idx));
        }
    }
  return m;
}

/// corank(B^s) for s = 0, 1, ... until B^s = 0, plus one stationary step.
inline std::vector<int> corank_profile(const FieldMatrix& b) {
  const std::size_t n = b.rows();
  std::vector<int> prof{0};
  if (n == 0) return prof;
  FieldMatrix power = b;
  for (std::size_t s = 1; s <= n + 1; ++s) {
    prof.push_back(static_cast<int>(power.corank()));
    if (static_cast<std::size_t>(prof.back()) == n) {
      prof.push_back(static_cast<int>(n));
      return prof;
    }
    power = power * b;
  }
  throw std::domain_error("corank_profile: matrix is not nilpotent");
}

inline Partition jordan_type(const FieldMatrix& b) { return jordan_from_coranks(corank_profile(b)); }

inline Partition jordan_type(const CommutatorElement& e) { return jordan_type(assemble(e)); }

/// Composition of module maps; entry (i, k) is the sum over j of
/// entry1(i, j) * lift(entry2(j, k)) mod t^{q_i}.
inline CommutatorElement multiply(const CommutatorElement& x, const CommutatorElement& y) {
  if (!(x.shape() == y.shape()) || !(x.field() == y.field()))
    throw std::invalid_argument("multiply: elements of different commutants");
  const std::size_t l = x.blocks();
  std::vector<TruncPoly> out;
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k) {
      const auto prec = static_cast<std::size_t>(x.shape()[i]);
      TruncPoly acc(x.field(), prec);
      for (std::size_t j = 0; j < l; ++j) acc = acc + TruncPoly::multiply(x.entry(i, j), y.entry(j, k), prec);
      out.push_back(std::move(acc));
    }
  return CommutatorElement(x.shape(), x.field(), std::move(out));
}

inline CommutatorElement add(const CommutatorElement& x, const CommutatorElement& y) {
  if (!(x.shape() == y.shape()) || !(x.field() == y.field()))
    throw std::invalid_argument("add: elements of different commutants");
  std::vector<TruncPoly> out;
  for (std::size_t i = 0; i < x.blocks(); ++i)
    for (std::size_t j = 0; j < x.blocks(); ++j) out.push_back(x.entry(i, j) + y.entry(i, j));
  return CommutatorElement(x.shape(), x.field(), std::move(out));
}

/// Uniformly random nilpotent element of the commutant of J_P, for any P.
/// Equal-size blocks get strictly upper triangular leading coefficients;
/// every other admissible coefficient is uniform.
inline CommutatorElement sample_nilpotent_commutant(const Partition& p, PrimeField field, Rng& rng) {
  std::vector<TruncPoly> e;
  const auto l = static_cast<std::size_t>(p.length());
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      TruncPoly c(field, static_cast<std::size_t>(p[i]));
      for (std::size_t m = CommutatorElement::min_order(p, i, j); m < c.precision(); ++m)
        c.set_coeff(m, field.random(rng));
      e.push_back(std::move(c));
    }
  return CommutatorElement(p, field, std::move(e));
}

inline CommutatorElement sample_commutator(const Partition& q, PrimeField field, Rng& rng) {
  if (q.empty() || !is_stable(q)) throw std::invalid_argument("sample_commutator: Q is not stable");
  return sample_nilpotent_commutant(q, field, rng);
}

/// For Q = (u, u-r): a = sum a_i t^i (i >= 1) mod t^u; b = sum b_i t^i
/// (i >= 1), g and h mod t^{u-r}. In the natural block form the element is
/// [[a, t^r g], [h, b]]; the order matrix uses [[a, g], [h t^r, b]].
struct TwoPartElement {
  int u = 0, r = 0;
  TruncPoly a, b, g, h;

  TwoPartElement(int u_, int r_, TruncPoly a_, TruncPoly b_, TruncPoly g_, TruncPoly h_)
      : u(u_), r(r_), a(std::move(a_)), b(std::move(b_)), g(std::move(g_)), h(std::move(h_)) {
    if (!(u > r && r >= 2)) throw std::invalid_argument("TwoPartElement: need u > r >= 2");
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(u - r);
    if (a.precision() != su || b.precision() != sv || g.precision() != sv || h.precision() != sv)
      throw std::invalid_argument("TwoPartElement: a lives mod t^u; b, g, h mod t^(u-r)");
    if (a.coeff(0) != 0 || b.coeff(0) != 0)
      throw std::invalid_argument("TwoPartElement: a and b must have zero constant term");
    const PrimeField& f = a.field();
    if (!(b.field() == f) || !(g.field() == f) || !(h.field() == f))
      throw std::invalid_argument("TwoPartElement: field mismatch");
  }

  static TwoPartElement zero(int u, int r, PrimeField field) {
    const auto su = static_cast<std::size_t>(u), sv = static_cast<std::size_t>(u - r);
    return TwoPartElement(u, r, TruncPoly(field, su), TruncPoly(field, sv), TruncPoly(field, sv),
                          TruncPoly(field, sv));
  }

  /// J_{(u,u-r)}: a = b = t.
  static TwoPartElement jordan(int u, int r, PrimeField field) {
    TwoPartElement e = zero(u, r, field);
    e.a.set_coeff(1, 1);
    if (u - r > 1) e.b.set_coeff(1, 1);
    return e;
  }

  const PrimeField& field() const { return a.field(); }
  Partition shape() const { return Partition{u, u - r}; }
  std::size_t coordinate_count() const { return static_cast<std::size_t>(4 * u - 3 * r - 2); }

  CommutatorElement to_commutator() const {
    std::vector<TruncPoly> e;
    e.push_back(a);
    TruncPoly tg = g.retarget(static_cast<std::size_t>(u)).shifted(static_cast<std::size_t>(r));
    e.push_back(std::move(tg));
    e.push_back(h);
    e.push_back(b);
    return CommutatorElement(shape(), field(), std::move(e));
  }

  static TwoPartElement from_commutator(const CommutatorElement& c) {
    if (c.blocks() != 2 || !is_stable(c.shape()))
      throw std::invalid_argument("TwoPartElement: need a stable two-part shape");
    const int u = c.shape()[0], r = c.shape()[0] - c.shape()[1];
    const auto sv = static_cast<std::size_t>(u - r);
    TruncPoly g(c.field(), sv);
    for (std::size_t d = 0; d < sv; ++d) g.set_coeff(d, c.entry(0, 1).coeff(d + static_cast<std::size_t>(r)));
    return TwoPartElement(u, r, c.entry(0, 0), c.entry(1, 1), std::move(g), c.entry(1, 0));
  }

  friend bool operator==(const TwoPartElement&, const TwoPartElement&) = default;
};

/// ab - g h t^r in F[t]/(t^u).
inline TruncPoly det2(const TwoPartElement& e) {
  return det2(e.a, e.g, e.h, e.b, static_cast<std::size_t>(e.r), static_cast<std::size_t>(e.u));
}

inline FieldMatrix assemble(const TwoPartElement& e) { return assemble(e.to_commutator()); }
inline Partition jordan_type(const TwoPartElement& e) { return jordan_type(e.to_commutator()); }

inline constexpr int default_oracle_bound = 12;

/// Monte-Carlo estimate of the generic Jordan type in the nilpotent
/// commutant of J_P: the dominance maximum of the sampled types. Throws if
/// the observed types have no unique dominance maximum.
inline Partition dmap_oracle(const Partition& p, int samples, PrimeField field, std::uint64_t seed,
                             int size_bound = default_oracle_bound) {
  if (p.total() > size_bound) throw std::invalid_argument("dmap_oracle: partition exceeds size bound");
  if (samples < 1) throw std::invalid_argument("dmap_oracle: need at least one sample");
  std::vector<Partition> types;
  for (int s = 0; s < samples; ++s) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    Partition t = jordan_type(sample_nilpotent_commutant(p, field, rng));
    if (std::find(types.begin(), types.end(), t) == types.end()) types.push_back(std::move(t));
  }
  auto top = dominance_maximum(types);
  if (!top) throw std::runtime_error("dmap_oracle: observed types have no dominance maximum");
  return *top;
}

}  // namespace nilcommute
