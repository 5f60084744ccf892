#include "s5artin/polynomial.hpp"

#include <sstream>

#include "s5artin/error.hpp"

namespace s5artin {
namespace {

using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Remainder of a by b (b nonzero).
RatPoly rem(RatPoly a, const RatPoly& b) {
  const size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t shift = a.size() - 1 - db;
    for (size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign_at_infinity(const RatPoly& p, bool negative) {
  int s = p.back().sign();
  if (negative && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

int sign_changes(const std::vector<RatPoly>& seq, bool negative) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at_infinity(p, negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_longs(const std::vector<long>& coeffs) {
  std::vector<BigInt> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
  return IntPoly(std::move(d));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

std::string IntPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    BigInt mag = neg ? BigInt(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::string IntPoly::coeff_list() const {
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  return os.str();
}

BigInt resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree(), n = g.degree();
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  std::vector<std::vector<BigInt>> a(size, std::vector<BigInt>(size, 0));
  // rows 0..n-1: shifted f; rows n..n+m-1: shifted g; highest degree first.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(n - i);

  // Bareiss fraction-free elimination.
  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int piv = k + 1;
      while (piv < size && a[piv][k] == 0) ++piv;
      if (piv == size) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

BigInt discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw DomainError("discriminant needs degree >= 1");
  if (n == 1) return 1;
  BigInt res = resultant(f, f.derivative());
  BigInt d = res / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

BigInt disc_quintic(const IntPoly& f) {
  if (f.degree() != 5 || !f.is_monic())
    throw DomainError("disc_quintic expects a monic polynomial of degree 5, got " + f.str());
  return discriminant(f);
}

int real_root_count(const IntPoly& f) {
  if (f.is_zero()) throw DomainError("real_root_count of the zero polynomial");
  if (f.degree() == 0) return 0;
  std::vector<RatPoly> seq;
  RatPoly p0, p1;
  for (const auto& c : f.coeffs()) p0.emplace_back(c);
  const IntPoly df = f.derivative();
  for (const auto& c : df.coeffs()) p1.emplace_back(c);
  seq.push_back(p0);
  seq.push_back(p1);
  while (seq.back().size() > 1) {
    RatPoly r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    seq.push_back(std::move(r));
  }
  return sign_changes(seq, true) - sign_changes(seq, false);
}

}  // namespace s5artin
