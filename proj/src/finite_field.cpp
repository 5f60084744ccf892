#include "s5artin/finite_field.hpp"

#include <algorithm>
#include <string>

#include "s5artin/error.hpp"

namespace s5artin {

FpElem::FpElem(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p < 2) throw DomainError("FpElem modulus must be prime");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  r_ = static_cast<std::uint32_t>(r);
}

FpElem FpElem::operator+(FpElem o) const {
  std::uint64_t s = std::uint64_t(r_) + o.r_;
  return FpElem(static_cast<std::int64_t>(s % p_), p_);
}

FpElem FpElem::operator-(FpElem o) const {
  return FpElem(static_cast<std::int64_t>(r_) - o.r_, p_);
}

FpElem FpElem::operator*(FpElem o) const {
  return FpElem(static_cast<std::int64_t>((std::uint64_t(r_) * o.r_) % p_), p_);
}

FpElem FpElem::pow(std::uint64_t e) const {
  FpElem result(1, p_), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

FpElem FpElem::inverse() const {
  if (r_ == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(p_));
  return pow(p_ - 2);
}

bool FpElem::is_square() const {
  if (r_ == 0 || p_ == 2) return true;
  return pow((p_ - 1) / 2).residue() == 1;
}

namespace fp {
namespace {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

Poly reduce(const IntPoly& f, std::uint64_t p) {
  Poly out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    BigInt r = c % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  const int dm = degree(m);
  const std::uint64_t lead_inv = inv(m.back(), p);
  while (degree(a) >= dm) {
    std::uint64_t f = a.back() * lead_inv % p;
    const int shift = degree(a) - dm;
    if (f != 0)
      for (int i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - f * m[i] % p) % p;
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  trim(prod);
  return rem(std::move(prod), m, p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t li = inv(a.back(), p);
    for (auto& x : a) x = x * li % p;
  }
  return a;
}

Poly div_exact(Poly a, const Poly& b, std::uint64_t p) {
  const int db = degree(b);
  const std::uint64_t lead_inv = inv(b.back(), p);
  Poly q(std::max(0, degree(a) - db + 1), 0);
  while (degree(a) >= db) {
    std::uint64_t f = a.back() * lead_inv % p;
    const int shift = degree(a) - db;
    q[shift] = f;
    for (int i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p - f * b[i] % p) % p;
    a.pop_back();
    trim(a);
  }
  return q;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = rem(result, m, p);
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) result = mul_mod(result, base, m, p);
    e >>= 1;
    if (e) base = mul_mod(base, base, m, p);
  }
  return result;
}

}  // namespace fp

std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint32_t p) {
  return factor_degrees_mod_p(f, p, discriminant(f));
}

std::vector<int> factor_degrees_mod_p(const IntPoly& f, std::uint32_t p, const BigInt& disc) {
  if (p < 2) throw DomainError("factor_degrees_mod_p: modulus must be prime");
  if (f.degree() < 1) throw DomainError("factor_degrees_mod_p: polynomial must be non-constant");
  if (BigInt(f.leading() % p) == 0)
    throw DomainError("factor_degrees_mod_p: p divides the leading coefficient");
  if (BigInt(disc % p) == 0)
    throw RamifiedPrimeError("p = " + std::to_string(p) + " divides disc(f)");

  const std::uint64_t q = p;
  fp::Poly g = fp::reduce(f, q);
  std::vector<int> degrees;
  fp::Poly x{0, 1};
  fp::Poly h = fp::rem(x, g, q);
  for (int d = 1; 2 * d <= fp::degree(g); ++d) {
    h = fp::pow_mod(h, q, g, q);
    fp::Poly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = (hx[1] + q - 1) % q;
    while (!hx.empty() && hx.back() == 0) hx.pop_back();
    fp::Poly e = fp::gcd(g, hx, q);
    if (fp::degree(e) > 0) {
      for (int k = 0; k < fp::degree(e) / d; ++k) degrees.push_back(d);
      g = fp::div_exact(g, e, q);
      h = fp::rem(h, g, q);
    }
  }
  if (fp::degree(g) > 0) degrees.push_back(fp::degree(g));
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace s5artin
