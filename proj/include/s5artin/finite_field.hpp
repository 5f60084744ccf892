#pragma once

#include <cstdint>
#include <vector>

#include "s5artin/polynomial.hpp"

namespace s5artin {

/// Residue modulo a prime p < 2^31.
class FpElem {
 public:
  FpElem(std::int64_t value, std::uint32_t p);

  std::uint32_t residue() const { return r_; }
  std::uint32_t modulus() const { return p_; }

  FpElem operator+(FpElem o) const;
  FpElem operator-(FpElem o) const;
  FpElem operator*(FpElem o) const;
  FpElem operator-() const { return FpElem(p_ - r_, p_); }
  FpElem pow(std::uint64_t e) const;
  /// Throws ArithmeticError on zero.
  FpElem inverse() const;
  /// Euler's criterion; zero counts as a square.
  bool is_square() const;

  friend bool operator==(FpElem a, FpElem b) { return a.r_ == b.r_ && a.p_ == b.p_; }

 private:
  std::uint32_t r_;
  std::uint32_t p_;
};

/// Polynomials over F_p as dense residue vectors (low degree first). Used for
/// the per-prime splitting computations where FpElem objects would be wasteful.
namespace fp {

using Poly = std::vector<std::uint64_t>;

Poly reduce(const IntPoly& f, std::uint64_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly rem(Poly a, const Poly& m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly div_exact(Poly a, const Poly& b, std::uint64_t p);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace fp

/// Degrees of the irreducible factors of f mod p, ascending, by distinct-degree
/// factorization. Throws RamifiedPrimeError when p divides disc(f), DomainError
/// when p divides the leading coefficient.
std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint32_t p);

/// Same, with the discriminant supplied by the caller (hot loops).
std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint32_t p, const BigInt& disc);

}  // namespace s5artin
