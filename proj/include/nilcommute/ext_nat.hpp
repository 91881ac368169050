#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace nilcommute {

/// A nonnegative integer or infinity. Used for t-adic orders, where the
/// order of zero is infinite, and as the carrier of the min-plus semiring.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::int64_t v) : value_(v) {  // NOLINT: implicit on purpose
    if (v < 0) throw std::invalid_argument("ExtNat: negative value");
  }

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.value_ = inf_rep;
    return e;
  }

  constexpr bool is_infinite() const { return value_ == inf_rep; }
  constexpr bool is_finite() const { return !is_infinite(); }

  constexpr std::int64_t value() const {
    if (is_infinite()) throw std::domain_error("ExtNat: value of infinity");
    return value_;
  }

  // Saturating addition: tropical multiplication.
  friend constexpr ExtNat operator+(ExtNat x, ExtNat y) {
    if (x.is_infinite() || y.is_infinite()) return infinity();
    return ExtNat(x.value_ + y.value_);
  }

  friend constexpr bool operator==(ExtNat, ExtNat) = default;
  friend constexpr auto operator<=>(ExtNat, ExtNat) = default;

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

 private:
  static constexpr std::int64_t inf_rep = std::numeric_limits<std::int64_t>::max();
  std::int64_t value_ = 0;
};

/// Tropical addition.
constexpr ExtNat oplus(ExtNat x, ExtNat y) { return x < y ? x : y; }

/// Tropical multiplication.
constexpr ExtNat otimes(ExtNat x, ExtNat y) { return x + y; }

}  // namespace nilcommute
