#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "nilcommute/ext_nat.hpp"
#include "nilcommute/prime_field.hpp"

namespace nilcommute {

/// An element of F_p[t]/(t^N): coeff(j) is the coefficient of t^j, 0 <= j < N.
class TruncPoly {
 public:
  TruncPoly(PrimeField field, std::size_t precision)
      : field_(field), coeffs_(precision, 0) {
    if (precision == 0) throw std::invalid_argument("TruncPoly: precision must be positive");
  }

  TruncPoly(PrimeField field, std::vector<Scalar> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncPoly: precision must be positive");
    for (auto& c : coeffs_) c %= field_.modulus();
  }

  /// c * t^degree, or zero when degree >= precision.
  static TruncPoly monomial(PrimeField field, std::size_t precision, std::size_t degree, Scalar c = 1) {
    TruncPoly f(field, precision);
    if (degree < precision) f.coeffs_[degree] = c % field.modulus();
    return f;
  }

  const PrimeField& field() const { return field_; }
  std::size_t precision() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : 0; }
  void set_coeff(std::size_t j, Scalar c) {
    if (j >= coeffs_.size()) throw std::out_of_range("TruncPoly: coefficient index past precision");
    coeffs_[j] = c % field_.modulus();
  }

  bool is_zero() const {
    for (Scalar c : coeffs_)
      if (c) return false;
    return true;
  }

  /// t-adic order; infinite for zero.
  ExtNat ord() const {
    for (std::size_t j = 0; j < coeffs_.size(); ++j)
      if (coeffs_[j]) return ExtNat(static_cast<std::int64_t>(j));
    return ExtNat::infinity();
  }

  /// Truncates, or lifts by zero padding.
  TruncPoly retarget(std::size_t precision) const {
    std::vector<Scalar> c(precision, 0);
    for (std::size_t j = 0; j < precision && j < coeffs_.size(); ++j) c[j] = coeffs_[j];
    return TruncPoly(field_, std::move(c));
  }

  /// Multiplication by t^k, truncated.
  TruncPoly shifted(std::size_t k) const {
    TruncPoly out(field_, precision());
    for (std::size_t j = 0; j + k < precision(); ++j) out.coeffs_[j + k] = coeffs_[j];
    return out;
  }

  TruncPoly scaled(Scalar c) const {
    TruncPoly out = *this;
    for (auto& x : out.coeffs_) x = field_.mul(x, c % field_.modulus());
    return out;
  }

  TruncPoly operator-() const {
    TruncPoly out = *this;
    for (auto& x : out.coeffs_) x = field_.neg(x);
    return out;
  }

  friend TruncPoly operator+(const TruncPoly& f, const TruncPoly& g) {
    check_compatible(f, g);
    TruncPoly out = f;
    for (std::size_t j = 0; j < out.coeffs_.size(); ++j) out.coeffs_[j] = f.field_.add(f.coeffs_[j], g.coeffs_[j]);
    return out;
  }

  friend TruncPoly operator-(const TruncPoly& f, const TruncPoly& g) { return f + (-g); }

  friend TruncPoly operator*(const TruncPoly& f, const TruncPoly& g) {
    check_compatible(f, g);
    return multiply(f, g, f.precision());
  }

  /// Product of arbitrary-precision lifts of f and g, reduced mod t^target.
  /// Mixing moduli is only meaningful when the caller knows the result does
  /// not depend on the lift.
  static TruncPoly multiply(const TruncPoly& f, const TruncPoly& g, std::size_t target) {
    if (!(f.field_ == g.field_)) throw std::invalid_argument("TruncPoly: field mismatch");
    TruncPoly out(f.field_, target);
    const auto& F = f.field_;
    for (std::size_t i = 0; i < f.coeffs_.size() && i < target; ++i) {
      if (!f.coeffs_[i]) continue;
      for (std::size_t j = 0; j < g.coeffs_.size() && i + j < target; ++j) {
        if (!g.coeffs_[j]) continue;
        out.coeffs_[i + j] = F.add(out.coeffs_[i + j], F.mul(f.coeffs_[i], g.coeffs_[j]));
      }
    }
    return out;
  }

  friend bool operator==(const TruncPoly& f, const TruncPoly& g) {
    return f.field_ == g.field_ && f.coeffs_ == g.coeffs_;
  }

 private:
  static void check_compatible(const TruncPoly& f, const TruncPoly& g) {
    if (!(f.field_ == g.field_)) throw std::invalid_argument("TruncPoly: field mismatch");
    if (f.precision() != g.precision())
      throw std::invalid_argument("TruncPoly: precision mismatch; use multiply() with an explicit target");
  }

  PrimeField field_;
  std::vector<Scalar> coeffs_;
};

/// ab - g h t^shift in F_p[t]/(t^target), using zero-padded lifts. The
/// matrix is [[a, g], [h t^shift, b]].
inline TruncPoly det2(const TruncPoly& a, const TruncPoly& g, const TruncPoly& h, const TruncPoly& b,
                      std::size_t shift, std::size_t target) {
  TruncPoly ab = TruncPoly::multiply(a, b, target);
  TruncPoly gh = TruncPoly::multiply(g, h, target).shifted(shift);
  return ab - gh;
}

}  // namespace nilcommute
