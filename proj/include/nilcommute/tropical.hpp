#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcommute/commutator.hpp"
#include "nilcommute/ext_nat.hpp"
#include "nilcommute/partition.hpp"

namespace nilcommute {

/// 2 x 2 matrix of t-adic orders over the min-plus semiring.
struct OrderMatrix {
  std::array<std::array<ExtNat, 2>, 2> m{};

  ExtNat& operator()(int i, int j) { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  ExtNat operator()(int i, int j) const { return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  friend bool operator==(const OrderMatrix&, const OrderMatrix&) = default;

  /// "[[1,inf],[inf,1]]"
  std::string to_string() const {
    std::ostringstream os;
    os << "[[" << m[0][0].to_string() << ',' << m[0][1].to_string() << "],[" << m[1][0].to_string() << ','
       << m[1][1].to_string() << "]]";
    return os.str();
  }
};

inline OrderMatrix make_order_matrix(ExtNat a, ExtNat b, ExtNat c, ExtNat d) {
  OrderMatrix t;
  t(0, 0) = a;
  t(0, 1) = b;
  t(1, 0) = c;
  t(1, 1) = d;
  return t;
}

/// [[ord a, ord g], [r + ord h, ord b]].
inline OrderMatrix order_matrix(const TwoPartElement& e) {
  return make_order_matrix(e.a.ord(), e.g.ord(), ExtNat(e.r) + e.h.ord(), e.b.ord());
}

inline OrderMatrix minplus_product(const OrderMatrix& x, const OrderMatrix& y) {
  OrderMatrix out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = oplus(x(i, 0) + y(0, j), x(i, 1) + y(1, j));
  return out;
}

inline OrderMatrix minplus_power(const OrderMatrix& t, int s) {
  if (s < 1) throw std::invalid_argument("minplus_power: need s >= 1");
  OrderMatrix out = t;
  for (int i = 1; i < s; ++i) out = minplus_product(out, t);
  return out;
}

/// Orders of M^s for T(M) = [[k, 0], [r, l]] when no leading terms cancel.
inline OrderMatrix closed_form_power(int k, int l, int r, int s) {
  if (k < 1 || l < 1 || r < 2 || s < 2) throw std::invalid_argument("closed_form_power: need k,l >= 1, r >= 2, s >= 2");
  auto mn = [](std::initializer_list<int> xs) { return ExtNat(std::min(xs)); };
  if (s % 2 == 0) {
    const int h = s / 2;
    return make_order_matrix(mn({s * k, h * r, (s - 2) * l + r}),
                             mn({(s - 1) * k, k + (h - 1) * r, l + (h - 1) * r, (s - 1) * l}),
                             mn({(s - 1) * k + r, k + h * r, l + h * r, (s - 1) * l + r}),
                             mn({(s - 2) * k + r, h * r, s * l}));
  }
  const int h = (s - 1) / 2;
  return make_order_matrix(mn({s * k, k + h * r, l + h * r, (s - 2) * l + r}),
                           mn({(s - 1) * k, h * r, (s - 1) * l}),
                           mn({(s - 1) * k + r, (h + 1) * r, (s - 1) * l + r}),
                           mn({(s - 2) * k + r, k + h * r, l + h * r, s * l}));
}

/// corank B = min(ord det M_B, ord a + u - r), valid when a != 0 and
/// ord a <= r + min(ord g, ord h). Throws std::domain_error otherwise.
inline int corank_from_orders(const TwoPartElement& e) {
  const ExtNat oa = e.a.ord();
  if (oa.is_infinite()) throw std::domain_error("corank_from_orders: a = 0");
  if (oa > ExtNat(e.r) + std::min(e.g.ord(), e.h.ord()))
    throw std::domain_error("corank_from_orders: ord a exceeds r + min(ord g, ord h)");
  const ExtNat od = det2(e).ord();
  return static_cast<int>(std::min(od, oa + ExtNat(e.u - e.r)).value());
}

/// Orders of the exact s-th power in the [[a, g], [h t^r, b]] convention,
/// each entry read in its own quotient (t^u for the left column, t^{u-r}
/// for the right).
inline OrderMatrix exact_power_orders(const TwoPartElement& e, int s) {
  if (s < 1) throw std::invalid_argument("exact_power_orders: need s >= 1");
  CommutatorElement c = e.to_commutator();
  CommutatorElement p = c;
  for (int i = 1; i < s; ++i) p = multiply(p, c);
  const TwoPartElement q = TwoPartElement::from_commutator(p);
  return order_matrix(q);
}

/// l' = min(l, r - k): the order of b at a general point of the cell.
inline int effective_b_order(int r, int k, int l) { return std::min(l, r - k); }

/// corank B^s for s = 1..s_max at a general point of cell (k, l):
/// (k+l)s (+) (T(M^s)_{11} + u - r) (+) (2u - r).
inline std::vector<int> predicted_coranks(int u, int r, int k, int l, int s_max) {
  if (!(u > r && r >= 2 && k >= 1 && k <= r - 1 && l >= 1 && l <= u - r))
    throw std::invalid_argument("predicted_coranks: cell outside the table");
  const int lp = effective_b_order(r, k, l);
  std::vector<int> out;
  for (int s = 1; s <= s_max; ++s) {
    const std::int64_t t11 = s == 1 ? k : closed_form_power(k, lp, r, s)(0, 0).value();
    const std::int64_t c = std::min({static_cast<std::int64_t>(k + l) * s, t11 + u - r,
                                     static_cast<std::int64_t>(2 * u - r)});
    out.push_back(static_cast<int>(c));
  }
  return out;
}

/// Generic Jordan type on the cell locus, from the tropical corank profile.
inline Partition predicted_jordan_type_from_coranks(int u, int r, int k, int l) {
  std::vector<int> prof{0};
  for (int c : predicted_coranks(u, r, k, l, 2 * u + 1)) prof.push_back(c);
  return jordan_from_coranks(prof);
}

/// Closed forms for the last column (l = u - r), three cases.
inline Partition predicted_last_column_type(int u, int r, int k) {
  if (!(u > r && r >= 2 && k >= 1 && k <= r - 1))
    throw std::invalid_argument("predicted_last_column_type: cell outside the table");
  auto glue = [](const Partition& head, int ones) {
    std::vector<int> parts = head.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition(std::move(parts));
  };
  if (2 * k <= r) return glue(almost_rectangular(u, k), u - r);
  if (r - k <= u - r) return glue(almost_rectangular(u - r + 2 * (r - k), r - k), u - 2 * (r - k));
  return glue(almost_rectangular(u + r - 2 * k, r - k), u - 2 * r + 2 * k);
}

inline Partition predicted_jordan_type(int u, int r, int k, int l) {
  if (l == u - r) return predicted_last_column_type(u, r, k);
  return predicted_jordan_type_from_coranks(u, r, k, l);
}

}  // namespace nilcommute
