#pragma once

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcommute/partition.hpp"

namespace nilcommute {

enum class Letter : char { alpha = 'a', beta = 'b' };

/// A finite word over {alpha, beta}. Codes produced by encode() end in
/// alpha, and either are the single letter alpha or end in "beta alpha".
class BurgeWord {
 public:
  BurgeWord() = default;
  explicit BurgeWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Accepts letters with optional repeat counts, whitespace ignored:
  /// "b a2 b2 a7 b5 a", "baabb", "a a b b a".
  static BurgeWord parse(const std::string& text) {
    std::vector<Letter> out;
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      Letter letter;
      if (c == 'a' || c == 'A')
        letter = Letter::alpha;
      else if (c == 'b' || c == 'B')
        letter = Letter::beta;
      else
        throw std::invalid_argument(std::string("BurgeWord: bad letter '") + c + "'");
      ++i;
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      long count = 1;
      if (j > i) {
        count = std::stol(text.substr(i, j - i));
        if (count < 1 || count > 100000)
          throw std::invalid_argument("BurgeWord: bad repeat count");
      }
      out.insert(out.end(), static_cast<std::size_t>(count), letter);
      i = j;
    }
    return BurgeWord(std::move(out));
  }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(Letter l, int count) { letters_.insert(letters_.end(), static_cast<std::size_t>(count), l); }

  /// Lies in the image of encode().
  bool is_valid_code() const {
    const std::size_t m = letters_.size();
    if (m == 0 || letters_.back() != Letter::alpha) return false;
    return m == 1 || letters_[m - 2] == Letter::beta;
  }

  /// "baabb..." one character per letter.
  std::string to_compact() const {
    std::string s;
    for (Letter l : letters_) s.push_back(static_cast<char>(l));
    return s;
  }

  /// Run-length display form, "b a2 b2 a7 b5 a".
  std::string to_run_length() const {
    std::ostringstream os;
    std::size_t i = 0;
    while (i < letters_.size()) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      if (i) os << ' ';
      os << static_cast<char>(letters_[i]);
      if (j - i > 1) os << (j - i);
      i = j;
    }
    return os.str();
  }

  friend bool operator==(const BurgeWord&, const BurgeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// One letter per iterate P, dP, d^2P, ..., up to and including the zero
/// partition: alpha for class A, beta for class B.
inline BurgeWord encode(const Partition& p) {
  BurgeWord w;
  Partition cur = p;
  while (true) {
    w.push_back(classify(cur) == PartitionClass::A ? Letter::alpha : Letter::beta);
    if (cur.empty()) break;
    cur = delta(cur);
  }
  return w;
}

/// The unique partition p with classify(p) == cls and delta(p) == image.
/// Backward pairs of p land on pairs (j-1, j) of the image with a positive
/// lower entry, so a left-to-right scan of the image recovers them.
inline Partition delta_preimage(const Partition& image, PartitionClass cls) {
  const FrequencySeq g = frequency(image);
  std::vector<int> f(g.counts.size() + 2, 0);
  int i = 1;
  if (cls == PartitionClass::B) {
    f[0] = g.at(1) + 1;
    i = 2;
  }
  const int top = static_cast<int>(g.counts.size());
  while (i <= top) {
    if (g.at(i) > 0) {
      f[static_cast<std::size_t>(i - 1)] = g.at(i) - 1;
      f[static_cast<std::size_t>(i)] = g.at(i + 1) + 1;
      i += 2;
    } else {
      ++i;
    }
  }
  return from_frequency(FrequencySeq{std::move(f)});
}

/// Inverse of encode(), reading the word from the right.
inline Partition decode(const BurgeWord& w) {
  if (!w.is_valid_code())
    throw std::invalid_argument("decode: '" + w.to_run_length() + "' is not a Burge code");
  Partition cur;
  for (std::size_t i = w.length() - 1; i-- > 0;) {
    cur = delta_preimage(cur, w[i] == Letter::alpha ? PartitionClass::A : PartitionClass::B);
  }
  return cur;
}

/// Parts are the positions that end a run of betas, largest first.
inline Partition dmap_from_code(const BurgeWord& w) {
  std::vector<int> parts;
  const std::size_t m = w.length();
  for (std::size_t i = m; i-- > 0;) {
    if (w[i] == Letter::beta && (i + 1 == m || w[i + 1] == Letter::alpha))
      parts.push_back(static_cast<int>(i + 1));
  }
  return Partition(std::move(parts));
}

/// The Jordan type of a generic nilpotent matrix commuting with J_P.
inline Partition dmap(const Partition& p) { return dmap_from_code(encode(p)); }

/// 1-based position (i_1, ..., i_l) in the box of a stable partition.
struct BoxIndex {
  std::vector<int> i;
  int weight() const {
    int s = 0;
    for (int v : i) s += v;
    return s;
  }
  friend bool operator==(const BoxIndex&, const BoxIndex&) = default;
  friend auto operator<=>(const BoxIndex&, const BoxIndex&) = default;
};

namespace detail {

inline void for_each_box_index(const StableKey& k, const std::function<void(const BoxIndex&)>& fn) {
  const std::size_t n = k.s.size();
  if (n == 0) return;
  BoxIndex idx{std::vector<int>(n, 1)};
  while (true) {
    fn(idx);
    std::size_t d = n;
    while (d > 0 && idx.i[d - 1] == k.s[d - 1]) idx.i[--d] = 1;
    if (d == 0) return;
    ++idx.i[d - 1];
  }
}

}  // namespace detail

/// The code alpha^{s_l-i_l} beta^{i_l} alpha^{s_{l-1}-i_{l-1}+1} beta^{i_{l-1}} ... beta^{i_1} alpha.
inline BurgeWord box_code(const StableKey& k, const BoxIndex& idx) {
  if (idx.i.size() != k.s.size()) throw std::invalid_argument("box_code: index rank mismatch");
  const std::size_t len = k.s.size();
  BurgeWord w;
  for (std::size_t d = len; d-- > 0;) {
    const int s = k.s[d], i = idx.i[d];
    if (i < 1 || i > s) throw std::invalid_argument("box_code: index outside the box");
    w.append(Letter::alpha, s - i + (d + 1 == len ? 0 : 1));
    w.append(Letter::beta, i);
  }
  w.push_back(Letter::alpha);
  return w;
}

inline std::map<BoxIndex, BurgeWord> box_codes(const Partition& q) {
  if (!is_stable(q) || q.empty()) throw std::invalid_argument("box_codes: Q is not stable");
  const StableKey k = key(q);
  std::map<BoxIndex, BurgeWord> out;
  detail::for_each_box_index(k, [&](const BoxIndex& idx) { out.emplace(idx, box_code(k, idx)); });
  return out;
}

inline std::map<BoxIndex, Partition> box_partitions(const Partition& q) {
  std::map<BoxIndex, Partition> out;
  for (const auto& [idx, code] : box_codes(q)) out.emplace(idx, decode(code));
  return out;
}

/// The (r-1) x (u-r) table for Q = (u, u-r); at(k, l) is 1-based.
class PartitionTable {
 public:
  PartitionTable(int rows, int cols) : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Partition& at(int k, int l) const { return cells_[offset(k, l)]; }
  Partition& at(int k, int l) { return cells_[offset(k, l)]; }

 private:
  std::size_t offset(int k, int l) const {
    if (k < 1 || k > rows_ || l < 1 || l > cols_) throw std::out_of_range("PartitionTable: cell out of range");
    return static_cast<std::size_t>((k - 1) * cols_ + (l - 1));
  }
  int rows_, cols_;
  std::vector<Partition> cells_;
};

/// Q = (u, u-r) with u > r >= 2.
inline bool is_two_part_stable(const Partition& q) {
  return q.length() == 2 && is_stable(q);
}

/// alpha^{u-r-l} beta^l alpha^{r-k} beta^k alpha.
inline BurgeWord table_code(int u, int r, int k, int l) {
  if (!(u > r && r >= 2 && k >= 1 && k <= r - 1 && l >= 1 && l <= u - r))
    throw std::invalid_argument("table_code: cell outside the table");
  BurgeWord w;
  w.append(Letter::alpha, u - r - l);
  w.append(Letter::beta, l);
  w.append(Letter::alpha, r - k);
  w.append(Letter::beta, k);
  w.push_back(Letter::alpha);
  return w;
}

inline PartitionTable table(const Partition& q) {
  if (!is_two_part_stable(q)) throw std::invalid_argument("table: Q must be stable with two parts");
  const int u = q[0], r = q[0] - q[1];
  PartitionTable t(r - 1, u - r);
  for (int k = 1; k <= r - 1; ++k)
    for (int l = 1; l <= u - r; ++l) t.at(k, l) = decode(table_code(u, r, k, l));
  return t;
}

}  // namespace nilcommute
