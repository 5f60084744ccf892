#pragma once

#include <array>
#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "s5artin/rat.hpp"

namespace s5artin {

/// Conductor of the fixed cyclotomic field. The exponent of GL2(F5) is 120,
/// so every character value and eigenvalue handled here lives in Q(zeta_120).
inline constexpr int kConductor = 120;
/// phi(120): dimension of Q(zeta_120) over Q.
inline constexpr int kCycDegree = 32;

/// Exact element of Q(zeta_120) in the power basis 1, z, ..., z^31, reduced
/// modulo the 120th cyclotomic polynomial. z = exp(2 pi i / 120) under the
/// canonical complex embedding.
class Cyc {
 public:
  using Coeffs = std::array<Rat, kCycDegree>;

  Cyc() = default;
  Cyc(long n) { c_[0] = Rat(n); }          // NOLINT(google-explicit-constructor)
  Cyc(const Rat& r) { c_[0] = r; }         // NOLINT(google-explicit-constructor)
  explicit Cyc(Coeffs coeffs) : c_(std::move(coeffs)) {}

  /// z^k for any integer k (taken mod 120).
  static Cyc root(long k);

  const Coeffs& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The value as a rational; throws DomainError if it is not rational.
  Rat to_rat() const;
  /// True when the element is fixed by complex conjugation.
  bool is_real() const { return *this == conj(); }

  Cyc operator-() const;
  Cyc& operator+=(const Cyc& o);
  Cyc& operator-=(const Cyc& o);
  Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
  Cyc& operator/=(const Cyc& o) { return *this = *this / o; }
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }
  Cyc scaled(const Rat& r) const;

  /// Multiplication by z^k; cheaper than a general product.
  Cyc mul_root(long k) const;
  /// Multiplicative inverse. Throws ArithmeticError on zero.
  Cyc inverse() const;
  /// Non-negative integer power.
  Cyc pow(unsigned long e) const;
  /// Field automorphism z -> z^a, gcd(a, 120) = 1.
  Cyc galois(long a) const;
  /// Complex conjugation z -> z^-1.
  Cyc conj() const { return galois(kConductor - 1); }
  /// a * conj(a).
  Cyc norm_sq() const { return *this * conj(); }

  std::complex<double> eval_complex() const;
  /// k in [0, 120) with *this == z^k, if the element is a root of unity.
  std::optional<int> root_exponent() const;

  friend bool operator==(const Cyc& a, const Cyc& b) { return a.c_ == b.c_; }
  /// Lexicographic order on coefficient vectors; used for deterministic tie-breaks.
  friend bool lex_less(const Cyc& a, const Cyc& b);

  /// Exact text, e.g. "1 + 2*z^5 - 1/3*z^7" with z = zeta_120.
  std::string str() const;
  /// Decimal approximation "re+imi" with the given number of digits after the point.
  std::string approx(int digits = 12) const;

  friend std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.str(); }

 private:
  Coeffs c_{};
};

/// Embeds zeta_m^j as z^(120/m * j). Throws UnsupportedRootError unless m | 120.
Cyc cyc_root(long m, long j);

/// Multiplicative order of z^k.
int root_order(long k);

/// Coefficients (low degree first) of the 120th cyclotomic polynomial.
const std::array<long, kCycDegree + 1>& cyclotomic120();

}  // namespace s5artin
