#include "s5artin/lfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <boost/multiprecision/mpfr.hpp>

#include "s5artin/error.hpp"

namespace s5artin {

namespace {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<kAccumulatorDigits>>;

Real to_real(const Rat& r) {
  return Real(r.numerator().get_str()) / Real(r.denominator().get_str());
}

std::string digits40(const Real& x) { return x.str(40); }

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RatPoly one_minus_x_pow(int k) {
  RatPoly p(k + 1);
  p[0] = Rat(1);
  p[k] = p[k] - Rat(1);
  return p;
}

}  // namespace

RatPoly poly_trim(RatPoly a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  return a;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(out);
}

std::string poly_str(const RatPoly& a) {
  std::string out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    Rat mag = a[k].sign() < 0 ? -a[k] : a[k];
    std::string term;
    if (k == 0) term = mag.str();
    else {
      if (!(mag == Rat(1))) term = mag.str() + "*";
      term += k == 1 ? "X" : "X^" + std::to_string(k);
    }
    if (out.empty()) out = (a[k].sign() < 0 ? "-" : "") + term;
    else out += (a[k].sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

RatPoly LocalFactor::rational() const {
  RatPoly out;
  for (const auto& c : coeffs) {
    if (!c.is_rational()) throw DomainError("local factor has a non-rational coefficient " + c.str());
    out.push_back(c.to_rat());
  }
  return poly_trim(out);
}

std::string LocalFactor::str() const {
  bool rational = std::all_of(coeffs.begin(), coeffs.end(), [](const Cyc& c) { return c.is_rational(); });
  if (rational) return poly_str(this->rational());
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[k].str() + ")" + (k == 0 ? "" : k == 1 ? "*X" : "*X^" + std::to_string(k));
  }
  return out;
}

ClassLabel pgl_label_of_class(const Group& pgl, std::size_t c) {
  std::size_t rep = pgl.cls(c).representative;
  const GroupElem& e = pgl.element(rep);
  if (e.is_matrix()) throw DomainError("expected PGL2(F5) acting on the projective line");
  return label_from_order_parity(pgl.element_order(rep), e.perm().sign());
}

std::vector<Cyc> factor_from_eigenvalues(const EigenMultiset& e) {
  std::vector<Cyc> p{Cyc(1L)};
  for (int t : e.exponents()) {
    std::vector<Cyc> next(p.size() + 1);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k] += p[k];
      next[k + 1] -= p[k].mul_root(t);
    }
    p = std::move(next);
  }
  return p;
}

LocalFactor local_factor(const Character& a, const ClassLabel& label) {
  const Group& g = *a.group();
  if (g.order() != 120 || g.num_classes() != 7)
    throw DomainError("local factors are defined for characters of PGL2(F5) = S5");
  for (std::size_t c = 0; c < g.num_classes(); ++c)
    if (pgl_label_of_class(g, c) == label) return {label, factor_from_eigenvalues(eigenvalues(a, c))};
  throw DomainError("no class labelled " + label.name);
}

PartialLValue partial_L(const Character& a, const std::vector<FrobeniusRecord>& records, double s,
                        std::uint64_t bound) {
  if (!(s > 1.0)) throw DomainError("partial_L needs s > 1 (the product diverges or is not defined at s = " +
                                    std::to_string(s) + ")");
  if (bound < 2) throw DomainError("prime bound must be at least 2");
  const auto& labels = s5_labels();
  std::vector<std::vector<Real>> factors;
  for (const auto& l : labels) {
    std::vector<Real> f;
    for (const auto& c : local_factor(a, l).rational()) f.push_back(to_real(c));
    factors.push_back(std::move(f));
  }
  const Real sr(s);
  Real log_sum = 0;
  PartialLValue out;
  for (const auto& r : records) {
    if (r.p > bound) break;
    if (r.ramified) continue;
    const auto& f = factors[label_index(*r.label)];
    Real x = exp(-sr * log(Real(r.p)));
    Real v = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
    log_sum -= log(v);
    ++out.primes_used;
  }
  Real value = exp(log_sum);
  out.s = s;
  out.bound = bound;
  out.value = digits40(value);
  out.value_approx = value.convert_to<double>();
  out.log_value = digits40(log_sum);
  const double d = a.degree();
  const double P = static_cast<double>(bound);
  out.tail_bound = d * std::pow(P, 1.0 - s) / ((s - 1.0) * std::log(P));
  return out;
}

PartialLValue partial_L(const Character& a, const Quintic& q, double s, std::uint64_t bound) {
  if (!(s > 1.0)) return partial_L(a, std::vector<FrobeniusRecord>{}, s, bound);
  return partial_L(a, frobenius_records(q, bound), s, bound);
}

nlohmann::ordered_json to_json(const PartialLValue& v) {
  return {{"s", v.s}, {"P", v.bound}, {"value", v.value}, {"tail_bound", v.tail_bound},
          {"digits", v.digits}};
}

std::string to_string(PhiSource s) { return s == PhiSource::Computed ? "computed" : "printed"; }

PhiSource parse_phi_source(const std::string& text) {
  if (text == "computed") return PhiSource::Computed;
  if (text == "printed") return PhiSource::Printed;
  throw DomainError("unknown phi source '" + text + "' (expected computed or printed)");
}

PhiAverage phi_average(const PaperGroups& pg, const std::vector<FrobeniusRecord>& records,
                       NuHypothesis nu, PhiSource source) {
  auto phi = source == PhiSource::Computed ? forced_phi(pg, nu) : printed_forced_phi(nu);
  PhiAverage out;
  for (const auto& r : records) {
    if (r.ramified) continue;
    out.sum += phi[label_index(*r.label)];
    ++out.processed;
  }
  return out;
}

PhiAverage phi_average(const PaperGroups& pg, const Quintic& q, std::uint64_t bound,
                       NuHypothesis nu, PhiSource source) {
  return phi_average(pg, frobenius_records(q, bound), nu, source);
}

MuOmega mu_omega_partial(const std::vector<std::uint32_t>& omega, double s) {
  if (!(s > 0.0)) throw DomainError("mu_omega needs s > 0");
  Real prod = 1;
  for (std::uint32_t p : omega) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    Real x = exp(-Real(s) * log(Real(p)));
    Real f = (1 + x) / (1 - x);
    prod *= f * f;
  }
  return {digits40(prod), prod.convert_to<double>()};
}

LemmaReport omega_factor_identity_check(const PaperGroups& pg) {
  LemmaReport r{"omega_factor_identity"};
  const RatPoly one_plus_x2{Rat(1), Rat(0), Rat(1)};
  const RatPoly one_minus_x{Rat(1), Rat(-1)};
  const RatPoly one_plus_x{Rat(1), Rat(1)};
  const RatPoly real = poly_mul(poly_mul(one_plus_x2, one_minus_x), poly_mul(one_plus_x, one_plus_x));
  const RatPoly omega =
      poly_mul(poly_mul(one_plus_x2, one_minus_x), poly_mul(one_minus_x, one_minus_x));

  RatPoly lf = local_factor(pg.s5.rho5, label_by_name("4A")).rational();
  r.check(lf == real, "rho5 on 4A has factor (1 + X^2)(1 - X)(1 + X)^2", "4A: " + poly_str(lf));
  RatPoly from_t_real = poly_trim([&] {
    RatPoly out;
    for (const auto& c : factor_from_eigenvalues(EigenMultiset({0, 30, 90, 60, 60})))
      out.push_back(c.to_rat());
    return out;
  }());
  RatPoly from_t_omega = poly_trim([&] {
    RatPoly out;
    for (const auto& c : factor_from_eigenvalues(EigenMultiset({0, 30, 90, 0, 0})))
      out.push_back(c.to_rat());
    return out;
  }());
  r.check(from_t_real == real, "T = {1, i, -i, -1, -1} gives (1 + X^2)(1 - X)(1 + X)^2",
          "4A: " + poly_str(from_t_real));
  r.check(from_t_omega == omega, "T = {1, i, -i, 1, 1} gives (1 + X^2)(1 - X)^3",
          "4A: " + poly_str(from_t_omega));
  // real / omega = ((1 + X) / (1 - X))^2, cross-multiplied
  r.check(poly_mul(real, poly_mul(one_minus_x, one_minus_x)) ==
              poly_mul(omega, poly_mul(one_plus_x, one_plus_x)),
          "[(1 + X^2)(1 - X)(1 + X)^2] / [(1 + X^2)(1 - X)^3] = ((1 + X)/(1 - X))^2");
  // the same ratio at X = p^-s for small p and integer s, exactly
  for (long p : {2L, 3L, 5L, 7L})
    for (unsigned s : {1u, 2u, 3u}) {
      Rat x = Rat(1) / Rat(static_cast<long>(std::pow(p, s)));
      auto eval = [&](const RatPoly& f) {
        Rat v;
        for (auto it = f.rbegin(); it != f.rend(); ++it) v = v * x + *it;
        return v;
      };
      Rat mu = (Rat(1) + x) / (Rat(1) - x);
      r.check(eval(real) == eval(omega) * mu * mu,
              "per-prime factor at p = " + std::to_string(p) + ", s = " + std::to_string(s),
              "p = " + std::to_string(p));
    }
  r.witness("L-factor of rho5 at 4A", poly_str(real));
  r.witness("L-factor of varpi at an Omega prime", poly_str(omega));
  return r;
}

std::vector<Rat> taylor_coefficients(int n_max) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  // numerator (1 + x)^2, denominator (1 - x)^2 = 1 - 2x + x^2
  const std::vector<Rat> num{Rat(1), Rat(2), Rat(1)};
  const std::vector<Rat> den{Rat(1), Rat(-2), Rat(1)};
  std::vector<Rat> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rat v = n < 3 ? num[n] : Rat(0);
    for (int k = 1; k <= std::min(n, 2); ++k) v -= den[k] * c[n - k];
    c[n] = v / den[0];
  }
  return c;
}

LemmaReport taylor_positivity_check(int n_max) {
  if (n_max < 1) throw DomainError("taylor_positivity_check needs n_max >= 1");
  LemmaReport r{"taylor_positivity"};
  auto c = taylor_coefficients(n_max);
  r.check(c[0] == Rat(1), "constant coefficient is 1", "n = 0: " + c[0].str());
  bool all = true;
  for (int n = 1; n <= n_max; ++n) {
    if (!(c[n] == Rat(4L * n))) {
      all = r.check(false, "coefficient of x^" + std::to_string(n) + " is " + std::to_string(4 * n),
                    "n = " + std::to_string(n) + ": " + c[n].str());
    }
  }
  r.check(all, "coefficients 1..." + std::to_string(n_max) + " equal 4n and are positive");
  r.witness("coefficient of x^1", c[1].str());
  if (n_max >= 10) r.witness("coefficient of x^10", c[10].str());
  return r;
}

namespace {

/// Cycle lengths of x acting on the left cosets of k in g.
std::vector<int> coset_cycle_type(const Group& g, const std::vector<std::size_t>& coset_of,
                                  const std::vector<std::size_t>& coset_rep, std::size_t x) {
  const std::size_t n = coset_rep.size();
  std::vector<bool> seen(n, false);
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = coset_of[g.mul(x, coset_rep[j])]) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Cosets {
  std::vector<std::size_t> coset_of;  // element -> coset id
  std::vector<std::size_t> rep;       // coset id -> representative element
};

Cosets left_cosets(const Group& g, const Group& k) {
  Cosets c{std::vector<std::size_t>(g.order(), SIZE_MAX), {}};
  std::vector<std::size_t> kidx;
  for (const auto& e : k.elements()) kidx.push_back(g.index_of(e));
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (c.coset_of[x] != SIZE_MAX) continue;
    const std::size_t id = c.rep.size();
    c.rep.push_back(x);
    for (std::size_t y : kidx) c.coset_of[g.mul(x, y)] = id;
  }
  return c;
}

GroupPtr borel(const PaperGroups& pg, bool even_only) {
  return subgroup_where(pg.pgl, even_only ? "B0" : "B", [even_only](const GroupElem& e) {
    return e.perm()(5) == 5 && (!even_only || e.perm().sign() == 1);
  });
}

}  // namespace

std::vector<std::pair<std::string, Rat>> borel_decomposition(const PaperGroups& pg) {
  Character perm_f = induced_perm_char(pg.pgl, borel(pg, false));
  std::vector<std::pair<std::string, Rat>> out;
  for (const auto& n : s5_character_names()) {
    Rat m = inner(perm_f, s5_character(pg.s5, n));
    if (!m.is_zero()) out.emplace_back(n, m);
  }
  return out;
}

LemmaReport verify_zeta_H_factorization(const PaperGroups& pg) {
  LemmaReport r{"zeta_H_factorization"};
  const Group& g = *pg.pgl;
  const auto names = pg.pgl_class_names();
  GroupPtr f = borel(pg, false), h = borel(pg, true);
  r.check(f->order() == 20 && h->order() == 10, "point stabiliser has order 20, its even part order 10");

  Character perm_f = induced_perm_char(pg.pgl, f);
  Character perm_h = induced_perm_char(pg.pgl, h);
  r.check(perm_h.degree() == perm_f.degree() + pg.s5.eta.degree() + pg.s5.rho5.degree(),
          "degrees: 12 = 6 + 1 + 5");
  r.check_equal(perm_h, perm_f + pg.s5.eta + pg.s5.rho5, "perm_H = perm_F + eta + rho5", names);

  std::string decomposition;
  for (const auto& [n, m] : borel_decomposition(pg))
    decomposition += (decomposition.empty() ? "" : " + ") + (m == Rat(1) ? "" : m.str() + "*") + n;
  r.witness("perm_F", decomposition);
  bool is_eta_twist = perm_f == pg.s5.trivial + pg.s5.rho5_eta;
  bool is_plain = perm_f == pg.s5.trivial + pg.s5.rho5;
  r.check(is_eta_twist != is_plain, "perm_F is exactly one of 1 + rho5 and 1 + rho5 eta", decomposition);

  // Ind_F^G (eta restricted to F) = eta + rho5, from the induced-character formula
  std::vector<Cyc> ind(g.num_classes());
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const std::size_t x = g.cls(c).representative;
    Cyc sum;
    for (std::size_t y = 0; y < g.order(); ++y) {
      const std::size_t z = g.mul(g.mul(g.inv(y), x), y);
      if (f->find(g.element(z))) sum += pg.s5.eta[g.class_of(z)];
    }
    ind[c] = sum.scaled(Rat(1) / Rat(static_cast<long>(f->order())));
  }
  r.check_equal(Character(pg.pgl, ind), pg.s5.eta + pg.s5.rho5,
                "Ind from F of eta = eta + rho5 (zeta_H = zeta_F L(eta, H/F))", names);

  // classwise: local factors from brute-force coset cycle types
  Cosets cf = left_cosets(g, *f), ch = left_cosets(g, *h);
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    const std::size_t x = g.cls(c).representative;
    const ClassLabel label = pgl_label_of_class(g, c);
    RatPoly pf{Rat(1)}, ph{Rat(1)};
    auto tf = coset_cycle_type(g, cf.coset_of, cf.rep, x);
    auto th = coset_cycle_type(g, ch.coset_of, ch.rep, x);
    for (int len : tf) pf = poly_mul(pf, one_minus_x_pow(len));
    for (int len : th) ph = poly_mul(ph, one_minus_x_pow(len));
    RatPoly rhs = poly_mul(pf, poly_mul(local_factor(pg.s5.eta, label).rational(),
                                        local_factor(pg.s5.rho5, label).rational()));
    r.check(ph == rhs, "local factor identity on " + label.name + ": " + poly_str(ph),
            names[c] + ": zeta_H factor " + poly_str(ph) + " vs " + poly_str(rhs));
    long fixed = std::count(th.begin(), th.end(), 1);
    r.check(perm_h[c] == Cyc(fixed), "coset fixed points agree with perm_H on " + label.name, names[c]);
  }
  return r;
}

}  // namespace s5artin
