#include "s5artin/cyc.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <vector>

#include "s5artin/error.hpp"

namespace s5artin {
namespace {

using IntVec = std::vector<long>;

// Exact division of integer polynomials (divisor monic).
IntVec poly_div_exact(IntVec num, const IntVec& den) {
  const size_t dn = den.size() - 1;
  IntVec q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    q[i - dn] = c;
    for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

IntVec cyclotomic(int n) {
  IntVec p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic(d));
  return p;
}

struct Tables {
  std::array<long, kCycDegree + 1> phi{};
  // basis[k] = coefficients of z^k reduced, k in [0, 120).
  std::array<std::array<long, kCycDegree>, kConductor> basis{};

  Tables() {
    IntVec p = cyclotomic(kConductor);
    for (int i = 0; i <= kCycDegree; ++i) phi[i] = p[i];
    std::array<long, kCycDegree> cur{};
    cur[0] = 1;
    for (int k = 0; k < kConductor; ++k) {
      basis[k] = cur;
      // multiply by z and reduce the z^32 term with the monic relation
      long top = cur[kCycDegree - 1];
      for (int i = kCycDegree - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      for (int i = 0; i < kCycDegree; ++i) cur[i] -= top * phi[i];
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

long mod120(long k) {
  long r = k % kConductor;
  return r < 0 ? r + kConductor : r;
}

// Adds coefficient * z^k (k arbitrary) into out.
void add_root_term(Cyc::Coeffs& out, const Rat& coeff, long k) {
  if (coeff.is_zero()) return;
  const auto& b = tables().basis[mod120(k)];
  for (int i = 0; i < kCycDegree; ++i) {
    if (b[i] == 0) continue;
    if (b[i] == 1) {
      out[i] += coeff;
    } else if (b[i] == -1) {
      out[i] -= coeff;
    } else {
      out[i] += coeff * Rat(b[i]);
    }
  }
}

}  // namespace

const std::array<long, kCycDegree + 1>& cyclotomic120() { return tables().phi; }

Cyc Cyc::root(long k) {
  Coeffs c{};
  const auto& b = tables().basis[mod120(k)];
  for (int i = 0; i < kCycDegree; ++i) c[i] = Rat(b[i]);
  return Cyc(std::move(c));
}

int root_order(long k) {
  long r = mod120(k);
  return static_cast<int>(kConductor / std::gcd(r, static_cast<long>(kConductor)));
}

Cyc cyc_root(long m, long j) {
  if (m <= 0 || kConductor % m != 0)
    throw UnsupportedRootError("root of unity of order " + std::to_string(m) +
                               " does not lie in Q(zeta_120)");
  return Cyc::root((kConductor / m) * j);
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (int i = 1; i < kCycDegree; ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyc::to_rat() const {
  if (!is_rational()) throw DomainError("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyc& Cyc::operator+=(const Cyc& o) {
  for (int i = 0; i < kCycDegree; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& o) {
  for (int i = 0; i < kCycDegree; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  std::array<Rat, 2 * kCycDegree - 1> raw{};
  bool any = false;
  for (int i = 0; i < kCycDegree; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < kCycDegree; ++j) {
      if (b.c_[j].is_zero()) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
      any = true;
    }
  }
  Cyc r;
  if (!any) return r;
  for (int k = 0; k < kCycDegree; ++k) r.c_[k] = raw[k];
  for (int k = kCycDegree; k < 2 * kCycDegree - 1; ++k) add_root_term(r.c_, raw[k], k);
  return r;
}

Cyc Cyc::scaled(const Rat& r) const {
  Cyc out = *this;
  for (auto& x : out.c_) x *= r;
  return out;
}

Cyc Cyc::mul_root(long k) const {
  Cyc r;
  for (int i = 0; i < kCycDegree; ++i) add_root_term(r.c_, c_[i], i + k);
  return r;
}

Cyc Cyc::galois(long a) const {
  if (std::gcd(mod120(a), static_cast<long>(kConductor)) != 1)
    throw DomainError("galois exponent must be coprime to 120");
  Cyc r;
  for (int i = 0; i < kCycDegree; ++i) add_root_term(r.c_, c_[i], a * i);
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero in Q(zeta_120)");
  if (is_rational()) return Cyc(Rat(1) / c_[0]);
  if (auto k = root_exponent()) return root(-*k);
  // Solve M x = e_0 where column j of M holds the coefficients of a * z^j.
  constexpr int n = kCycDegree;
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int j = 0; j < n; ++j) {
    Cyc col = mul_root(j);
    for (int i = 0; i < n; ++i) m[i][j] = col.c_[i];
  }
  m[0][n] = Rat(1);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) throw ArithmeticError("singular multiplication matrix in Q(zeta_120)");
    std::swap(m[piv], m[col]);
    Rat inv = Rat(1) / m[col][col];
    for (int j = col; j <= n; ++j) m[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col].is_zero()) continue;
      Rat f = m[i][col];
      for (int j = col; j <= n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  Cyc r;
  for (int i = 0; i < n; ++i) r.c_[i] = m[i][n];
  return r;
}

Cyc Cyc::pow(unsigned long e) const {
  Cyc result(1L), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::complex<double> Cyc::eval_complex() const {
  long double re = 0, im = 0;
  for (int i = 0; i < kCycDegree; ++i) {
    if (c_[i].is_zero()) continue;
    long double v = c_[i].to_double();
    long double ang = 2.0L * std::numbers::pi_v<long double> * i / kConductor;
    re += v * std::cos(ang);
    im += v * std::sin(ang);
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

std::optional<int> Cyc::root_exponent() const {
  auto v = eval_complex();
  if (std::abs(std::abs(v) - 1.0) > 1e-6) return std::nullopt;
  double ang = std::arg(v);
  long k = std::lround(ang * kConductor / (2.0 * std::numbers::pi));
  k = mod120(k);
  if (root(k) == *this) return static_cast<int>(k);
  return std::nullopt;
}

bool lex_less(const Cyc& a, const Cyc& b) {
  for (int i = 0; i < kCycDegree; ++i) {
    if (a.c_[i] < b.c_[i]) return true;
    if (b.c_[i] < a.c_[i]) return false;
  }
  return false;
}

std::string Cyc::str() const {
  if (is_rational()) return c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kCycDegree; ++i) {
    const Rat& x = c_[i];
    if (x.is_zero()) continue;
    bool neg = x.sign() < 0;
    Rat mag = neg ? -x : x;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
    } else {
      if (mag != Rat(1)) os << mag << '*';
      os << "z^" << i;
    }
  }
  return os.str();
}

std::string Cyc::approx(int digits) const {
  auto v = eval_complex();
  auto clean = [digits](double x) {
    // avoid printing "-0.000..."
    double eps = 0.5 * std::pow(10.0, -digits);
    return std::abs(x) < eps ? 0.0 : x;
  };
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(digits);
  double im = clean(v.imag());
  os << clean(v.real()) << (im < 0 ? "-" : "+") << std::abs(im) << 'i';
  return os.str();
}

}  // namespace s5artin
