#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace nilcommute {

using Scalar = std::uint64_t;
using Rng = std::mt19937_64;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Arithmetic in Z/pZ for an odd prime p < 2^62. Scalars are canonical
/// representatives in [0, p).
class PrimeField {
 public:
  static constexpr std::uint64_t default_prime = 1'000'000'007ull;

  explicit PrimeField(std::uint64_t p = default_prime) : p_(p) {
    if (p <= 2 || p >= (1ull << 62) || !is_prime(p))
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not an odd prime below 2^62");
  }

  std::uint64_t modulus() const { return p_; }

  Scalar reduce(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Scalar>(r < 0 ? r + m : r);
  }

  Scalar add(Scalar a, Scalar b) const {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const { return detail::mulmod(a, b, p_); }
  Scalar pow(Scalar a, std::uint64_t e) const { return detail::powmod(a, e, p_); }

  Scalar inv(Scalar a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p_ - 2);
  }

  /// Uniform in [0, p).
  Scalar random(Rng& rng) const { return std::uniform_int_distribution<Scalar>(0, p_ - 1)(rng); }

  /// Uniform in [1, p).
  Scalar random_nonzero(Rng& rng) const { return std::uniform_int_distribution<Scalar>(1, p_ - 1)(rng); }

  /// Signed representative in (-p/2, p/2], for display.
  std::int64_t centered(Scalar a) const {
    return a > p_ / 2 ? -static_cast<std::int64_t>(p_ - a) : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Per-task seed derived from a master seed and a task index (splitmix64),
/// so sampling loops are reproducible independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace nilcommute
