#include <cmath>
#include <map>

#include "doctest.h"
#include "s5artin/error.hpp"
#include "s5artin/lfun.hpp"
#include "s5artin/sieve.hpp"

using namespace s5artin;

namespace {

RatPoly one_minus_x_pow(int k) {
  RatPoly p(k + 1);
  p[0] = Rat(1);
  p[k] = Rat(-1);
  return p;
}

// class label -> a cycle type on five letters
const std::map<std::string, std::vector<int>> kCycleTypes = {
    {"1", {1, 1, 1, 1, 1}}, {"2A", {1, 1, 1, 2}}, {"2B", {1, 2, 2}}, {"3A", {1, 1, 3}},
    {"4A", {1, 4}},         {"5A", {5}},          {"6A", {2, 3}}};

}  // namespace

TEST_CASE("local factors") {
  const PaperGroups& pg = paper_groups();
  const RatPoly one_plus_x2{Rat(1), Rat(0), Rat(1)}, one_minus_x{Rat(1), Rat(-1)}, one_plus_x{Rat(1), Rat(1)};
  CHECK(local_factor(pg.s5.rho5, label_by_name("4A")).rational() ==
        poly_mul(poly_mul(one_plus_x2, one_minus_x), poly_mul(one_plus_x, one_plus_x)));
  for (const auto& l : s5_labels()) CHECK(local_factor(pg.s5.trivial, l).rational() == one_minus_x);
  RatPoly fifth{Rat(1)};
  for (int i = 0; i < 5; ++i) fifth = poly_mul(fifth, one_minus_x);
  CHECK(local_factor(pg.s5.rho5, label_by_name("1")).rational() == fifth);
  CHECK(poly_str(local_factor(pg.s5.rho5, label_by_name("4A")).rational()) == "1 + X - X^4 - X^5");
}

TEST_CASE("1 + rho4 is the permutation representation on five letters") {
  const PaperGroups& pg = paper_groups();
  for (const auto& [name, cycles] : kCycleTypes) {
    RatPoly want{Rat(1)};
    for (int len : cycles) want = poly_mul(want, one_minus_x_pow(len));
    const ClassLabel& l = label_by_name(name);
    CHECK(poly_mul(local_factor(pg.s5.trivial, l).rational(), local_factor(pg.s5.rho4, l).rational()) == want);
  }
}

TEST_CASE("local factors of S5 characters are real") {
  const PaperGroups& pg = paper_groups();
  for (const auto& n : s5_character_names())
    for (const auto& l : s5_labels()) {
      auto f = local_factor(s5_character(pg.s5, n), l);
      CHECK(f.coeffs.size() == static_cast<std::size_t>(s5_character(pg.s5, n).degree()) + 1);
      CHECK(f.coeffs[0] == Cyc(1L));
      CHECK_NOTHROW(f.rational());
    }
  CHECK_THROWS_AS(local_factor(pg.xi.xi, label_by_name("1")), DomainError);
}

TEST_CASE("Taylor coefficients of ((1 + x) / (1 - x))^2") {
  auto c = taylor_coefficients(60);
  CHECK(c[0] == Rat(1));
  CHECK(c[1] == Rat(4));
  CHECK(c[10] == Rat(40));
  for (int n = 1; n <= 60; ++n) CHECK(c[n] == Rat(4L * n));
  CHECK(taylor_positivity_check(50).pass);
  CHECK_THROWS_AS(taylor_positivity_check(0), DomainError);
}

TEST_CASE("mu_Omega") {
  CHECK(mu_omega_partial({}, 2.0).value_approx == 1.0);
  CHECK(std::abs(mu_omega_partial({2}, 1.0).value_approx - 9.0) < 1e-15);
  CHECK(mu_omega_partial({2}, 1.0).value.rfind("9", 0) == 0);
  double prev = INFINITY;
  for (double s : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    double v = mu_omega_partial({2, 3, 5}, s).value_approx;
    CHECK(v < prev);
    prev = v;
  }
  CHECK_THROWS_AS(mu_omega_partial({4}, 1.0), DomainError);
  CHECK_THROWS_AS(mu_omega_partial({2}, 0.0), DomainError);
}

TEST_CASE("partial_L against a direct Euler product") {
  const PaperGroups& pg = paper_groups();
  Quintic q(default_quintic());
  auto records = frobenius_records(q, 100'000);
  auto v = partial_L(pg.s5.trivial, records, 2.0, 100'000);
  long double direct = 1.0L;
  for (std::uint32_t p : primes_up_to(100'000))
    direct /= 1.0L - 1.0L / (static_cast<long double>(p) * p);
  CHECK(std::abs(std::stold(v.value) - direct) <= v.tail_bound * direct);
  CHECK(std::abs(std::stold(v.value) / (1.0L - 1.0L / (1609.0L * 1609.0L)) - direct) < 1e-15L);  // 1609 is ramified
  CHECK(v.digits >= 50);
  CHECK(v.primes_used == records.size() - 1);
  CHECK(std::abs(v.tail_bound - 1.0 / (1e5 * std::log(1e5))) < 1e-12);
}

TEST_CASE("partial_L is multiplicative") {
  const PaperGroups& pg = paper_groups();
  auto records = frobenius_records(Quintic(default_quintic()), 20'000);
  auto la = partial_L(pg.s5.rho5, records, 1.5, 20'000);
  auto lb = partial_L(pg.s5.rho5_eta, records, 1.5, 20'000);
  auto lab = partial_L(pg.s5.rho5 + pg.s5.rho5_eta, records, 1.5, 20'000);
  long double sum = std::stold(la.log_value) + std::stold(lb.log_value);
  CHECK(std::abs(std::stold(lab.log_value) - sum) < 1e-15L);
  CHECK(la.value_approx > 0);
  CHECK(std::abs(lab.tail_bound - 10.0 * std::pow(20000.0, -0.5) / (0.5 * std::log(20000.0))) < 1e-12);
}

TEST_CASE("partial_L domain") {
  const PaperGroups& pg = paper_groups();
  Quintic q(default_quintic());
  CHECK_THROWS_AS(partial_L(pg.s5.rho5, q, 1.0, 1000), DomainError);
  CHECK_THROWS_AS(partial_L(pg.s5.rho5, q, 0.5, 1000), DomainError);
  CHECK_THROWS_AS(partial_L(pg.s5.rho5, q, 2.0, 1), DomainError);
  CHECK(to_json(partial_L(pg.s5.rho5, q, 2.0, 1000)).size() == 5);
}

TEST_CASE("phi averages") {
  const PaperGroups& pg = paper_groups();
  Quintic q(default_quintic());
  auto records = frobenius_records(q, 50'000);
  CHECK(phi_average(pg, records, NuHypothesis::PsiInverse).value().is_zero());
  auto two = frobenius_records(q, 2);
  CHECK(phi_average(pg, two, NuHypothesis::PsiInverseEta).value().is_zero());  // Frob_2 = 5A
  // oracle: count 2A and 6A primes directly
  long n2a = 0, n6a = 0, n = 0;
  for (const auto& r : records) {
    if (r.ramified) continue;
    ++n;
    n2a += r.label->name == "2A";
    n6a += r.label->name == "6A";
  }
  CHECK(phi_average(pg, records, NuHypothesis::PsiInverseEta).value() == Rat(-8 * n2a - 2 * n6a) / Rat(n));
  CHECK(phi_average(pg, records, NuHypothesis::PsiInverseEta, PhiSource::Printed).value() ==
        Rat(-8 * n2a + 2 * n6a) / Rat(n));
  CHECK(parse_phi_source("printed") == PhiSource::Printed);
  CHECK_THROWS_AS(parse_phi_source("paper"), DomainError);
}

TEST_CASE("Euler factor identities") {
  const PaperGroups& pg = paper_groups();
  CHECK(omega_factor_identity_check(pg).pass);
  CHECK(verify_zeta_H_factorization(pg).pass);
  auto d = borel_decomposition(pg);
  REQUIRE(d.size() == 2);
  CHECK(d[0].first == "trivial");
  CHECK(d[1].first == "rho5eta");
  CHECK(pgl_label_of_class(*pg.pgl, 0).name == "1");
}
