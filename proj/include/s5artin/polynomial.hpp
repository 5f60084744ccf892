#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "s5artin/rat.hpp"

namespace s5artin {

/// Integer polynomial, coefficients low degree first, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);
  static IntPoly from_longs(const std::vector<long>& coeffs);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const { return i >= 0 && i <= degree() ? c_[i] : BigInt(0); }
  const BigInt& leading() const { return c_.back(); }

  IntPoly derivative() const;
  BigInt eval(const BigInt& x) const;

  /// "x^5 - x^3 - x^2 + x + 1"
  std::string str() const;
  /// "1,1,-1,-1,0,1" (low to high)
  std::string coeff_list() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<BigInt> c_;
};

/// Resultant via the Sylvester determinant (fraction-free elimination).
BigInt resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Requires degree >= 1.
BigInt discriminant(const IntPoly& f);

/// Discriminant of a monic quintic. Throws DomainError otherwise.
BigInt disc_quintic(const IntPoly& f);

/// Number of distinct real roots, by an exact Sturm sequence over Q.
/// Throws DomainError for the zero polynomial.
int real_root_count(const IntPoly& f);

}  // namespace s5artin
