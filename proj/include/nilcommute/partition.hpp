#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilcommute {

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the zero partition.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }

  /// |P|, the sum of the parts.
  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// l(P), the number of parts.
  int length() const { return static_cast<int>(parts_.size()); }

  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

  /// "(7,6,5,5,5,2,2,1)"; the zero partition prints as "()".
  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
  }

  /// Exponent form, e.g. "(6^2,5^2,4,2,1^2)".
  std::string to_exponent_string() const {
    std::ostringstream os;
    os << '(';
    std::size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      os << (first ? "" : ",") << parts_[i];
      if (j - i > 1) os << '^' << (j - i);
      first = false;
      i = j;
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

/// Multiplicities of part sizes; at(i) is the number of parts equal to i.
struct FrequencySeq {
  std::vector<int> counts;  // counts[i-1] = f_i

  int at(int i) const {
    return (i >= 1 && i <= static_cast<int>(counts.size())) ? counts[i - 1] : 0;
  }
  friend bool operator==(const FrequencySeq&, const FrequencySeq&) = default;
};

enum class PartitionClass { A, B };

enum class Dominance { greater_or_equal, less_or_equal, equal, incomparable };

/// Side lengths of the box attached to a stable partition.
struct StableKey {
  std::vector<int> s;
  friend bool operator==(const StableKey&, const StableKey&) = default;
};

inline FrequencySeq frequency(const Partition& p) {
  FrequencySeq f;
  f.counts.assign(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p) ++f.counts[static_cast<std::size_t>(part - 1)];
  return f;
}

inline Partition from_frequency(const FrequencySeq& f) {
  std::vector<int> parts;
  for (int i = static_cast<int>(f.counts.size()); i >= 1; --i) {
    if (f.at(i) < 0) throw std::invalid_argument("from_frequency: negative count");
    parts.insert(parts.end(), static_cast<std::size_t>(f.at(i)), i);
  }
  return Partition(std::move(parts));
}

/// Tops of the maximal almost rectangular blocks, largest first.
inline std::vector<int> r_set(const Partition& p) {
  std::vector<int> tops;
  const FrequencySeq f = frequency(p);
  for (int j = p.largest(); j >= 1;) {
    if (f.at(j) > 0) {
      tops.push_back(j);
      j -= 2;
    } else {
      --j;
    }
  }
  return tops;
}

inline PartitionClass classify(const Partition& p) {
  const auto tops = r_set(p);
  return (!tops.empty() && tops.back() == 1) ? PartitionClass::B : PartitionClass::A;
}

/// Moves one part of each block top j down to j-1; parts of size 1 vanish.
inline Partition delta(const Partition& p) {
  FrequencySeq f = frequency(p);
  for (int j : r_set(p)) {
    --f.counts[static_cast<std::size_t>(j - 1)];
    if (j >= 2) ++f.counts[static_cast<std::size_t>(j - 2)];
  }
  return from_frequency(f);
}

/// ([m]^k): k parts, each floor(m/k) or ceil(m/k).
inline Partition almost_rectangular(int m, int k) {
  if (k < 1 || m < k) throw std::invalid_argument("almost_rectangular: need m >= k >= 1");
  std::vector<int> parts(static_cast<std::size_t>(k), m / k);
  for (int i = 0; i < m % k; ++i) ++parts[static_cast<std::size_t>(i)];
  return Partition(std::move(parts));
}

inline bool is_almost_rectangular(const Partition& p) {
  return p.empty() || p.parts().front() - p.parts().back() <= 1;
}

/// Parts pairwise differ by at least two.
inline bool is_stable(const Partition& q) {
  for (int i = 1; i < q.length(); ++i)
    if (q[i - 1] - q[i] < 2) return false;
  return true;
}

inline StableKey key(const Partition& q) {
  if (q.empty() || !is_stable(q)) throw std::invalid_argument("key: partition is not stable");
  StableKey k;
  for (int i = 0; i + 1 < q.length(); ++i) k.s.push_back(q[i] - q[i + 1] - 1);
  k.s.push_back(q[q.length() - 1]);
  return k;
}

inline Dominance dominance_compare(const Partition& p, const Partition& p2) {
  if (p.total() != p2.total())
    throw std::invalid_argument("dominance_compare: partitions of different sizes");
  bool ge = true, le = true;
  int sp = 0, sq = 0;
  const int len = std::max(p.length(), p2.length());
  for (int i = 0; i < len; ++i) {
    sp += i < p.length() ? p[i] : 0;
    sq += i < p2.length() ? p2[i] : 0;
    if (sp < sq) ge = false;
    if (sp > sq) le = false;
  }
  if (ge && le) return Dominance::equal;
  if (ge) return Dominance::greater_or_equal;
  if (le) return Dominance::less_or_equal;
  return Dominance::incomparable;
}

/// p >= p2 in dominance order.
inline bool dominates(const Partition& p, const Partition& p2) {
  const auto d = dominance_compare(p, p2);
  return d == Dominance::equal || d == Dominance::greater_or_equal;
}

/// The element of ps that dominates every other one, if there is one.
inline std::optional<Partition> dominance_maximum(const std::vector<Partition>& ps) {
  if (ps.empty()) return std::nullopt;
  const Partition* best = &ps.front();
  for (const auto& p : ps)
    if (dominates(p, *best)) best = &p;
  for (const auto& p : ps)
    if (!dominates(*best, p)) return std::nullopt;
  return *best;
}

namespace detail {

inline int min_ar_cover_rec(std::vector<int>& f, std::map<std::vector<int>, int>& memo) {
  int top = static_cast<int>(f.size());
  while (top > 0 && f[static_cast<std::size_t>(top - 1)] == 0) --top;
  if (top == 0) return 0;
  if (auto it = memo.find(f); it != memo.end()) return it->second;

  // Some group contains a copy of the largest remaining size v; it holds
  // a >= 1 copies of v and b >= 0 copies of v-1.
  const std::size_t v = static_cast<std::size_t>(top - 1);
  const int fv = f[v];
  const int fw = v > 0 ? f[v - 1] : 0;
  int best = std::numeric_limits<int>::max();
  for (int a = 1; a <= fv; ++a) {
    for (int b = 0; b <= fw; ++b) {
      f[v] -= a;
      if (v > 0) f[v - 1] -= b;
      best = std::min(best, 1 + min_ar_cover_rec(f, memo));
      f[v] += a;
      if (v > 0) f[v - 1] += b;
    }
  }
  memo.emplace(f, best);
  return best;
}

}  // namespace detail

inline constexpr int default_cover_bound = 20;

/// Fewest almost rectangular groups that the multiset of parts splits into.
/// Exhaustive over all groupings, memoized on the remaining multiplicities.
inline int min_ar_cover(const Partition& p, int size_bound = default_cover_bound) {
  if (p.total() > size_bound)
    throw std::invalid_argument("min_ar_cover: partition exceeds size bound");
  std::vector<int> f = frequency(p).counts;
  std::map<std::vector<int>, int> memo;
  return detail::min_ar_cover_rec(f, memo);
}

/// Maximal almost rectangular blocks read from the largest part down.
inline std::vector<Partition> ar_blocks(const Partition& p) {
  std::vector<Partition> blocks;
  std::size_t i = 0;
  while (i < p.parts().size()) {
    std::size_t j = i;
    while (j < p.parts().size() && p[i] - p[j] <= 1) ++j;
    blocks.emplace_back(std::vector<int>(p.begin() + static_cast<std::ptrdiff_t>(i),
                                         p.begin() + static_cast<std::ptrdiff_t>(j)));
    i = j;
  }
  return blocks;
}

/// Block notation, e.g. (4,1,1,1) -> "(4,[3]^3)", (5,2) -> "(5,2)".
inline std::string to_block_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& b : ar_blocks(p)) {
    os << (first ? "" : ",");
    if (b.length() == 1)
      os << b[0];
    else
      os << '[' << b.total() << "]^" << b.length();
    first = false;
  }
  os << ')';
  return os.str();
}

/// Inverts s -> corank(B^s) = sum_i min(p_i, s). coranks[0] must be 0, the
/// increments must be nonnegative and weakly decreasing, and the last
/// increment must be zero (the profile has stabilized).
inline Partition jordan_from_coranks(std::span<const int> coranks) {
  if (coranks.empty() || coranks[0] != 0)
    throw std::invalid_argument("jordan_from_coranks: profile must start at 0");
  std::vector<int> inc;
  for (std::size_t s = 1; s < coranks.size(); ++s) {
    const int d = coranks[s] - coranks[s - 1];
    if (d < 0) throw std::invalid_argument("jordan_from_coranks: profile not monotone");
    if (!inc.empty() && d > inc.back())
      throw std::invalid_argument("jordan_from_coranks: increments not concave");
    inc.push_back(d);
  }
  if (!inc.empty() && inc.back() != 0)
    throw std::invalid_argument("jordan_from_coranks: profile has not stabilized");
  // inc is the conjugate partition; transpose it.
  std::vector<int> parts;
  const int rows = inc.empty() ? 0 : inc.front();
  for (int i = 1; i <= rows; ++i) {
    int c = 0;
    for (int d : inc)
      if (d >= i) ++c;
    parts.push_back(c);
  }
  return Partition(std::move(parts));
}

inline std::vector<int> corank_profile_of(const Partition& p) {
  std::vector<int> prof{0};
  for (int s = 1; s <= p.largest() + 1; ++s) {
    int c = 0;
    for (int part : p) c += std::min(part, s);
    prof.push_back(c);
  }
  return prof;
}

/// Calls fn on every partition of n, in reverse lexicographic order.
inline void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) return;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      fn(Partition(cur));
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
}

inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

/// Comma-separated parts, "5,4,3"; an empty string is the zero partition.
inline Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw std::invalid_argument("parse_partition: empty part in '" + text + "'");
    }
    token = token.substr(b, e - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_partition: bad part '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("parse_partition: bad part '" + token + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

}  // namespace nilcommute
