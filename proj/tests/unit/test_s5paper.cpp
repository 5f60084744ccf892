#include <cmath>
#include <complex>

#include "doctest.h"
#include "s5artin/error.hpp"
#include "s5artin/s5paper.hpp"

using namespace s5artin;

namespace {

std::complex<double> eval(const EigenMultiset& m) {
  std::complex<double> s;
  for (int k : m.exponents()) s += std::polar(1.0, 2.0 * M_PI * k / 120.0);
  return s;
}

}  // namespace

TEST_CASE("S5 table matches reference values") {
  // columns 1, 2A, 2B, 3A, 4A, 5A, 6A
  const std::vector<std::pair<std::string, std::vector<int>>> reference = {
      {"trivial", {1, 1, 1, 1, 1, 1, 1}}, {"eta", {1, -1, 1, 1, -1, 1, -1}},
      {"rho4", {4, 2, 0, 1, 0, -1, -1}},   {"rho4eta", {4, -2, 0, 1, 0, -1, 1}},
      {"rho5", {5, 1, 1, -1, -1, 0, 1}},   {"rho5eta", {5, -1, 1, -1, 1, 0, -1}},
      {"rho6", {6, 0, -2, 0, 0, 1, 0}}};
  const PaperGroups& pg = paper_groups();
  for (const auto& [name, values] : reference)
    for (std::size_t i = 0; i < values.size(); ++i)
      CHECK(s5_character(pg.s5, name)[pg.pgl_class(s5_labels()[i])] == Cyc(static_cast<long>(values[i])));
  CHECK_THROWS_AS(s5_character(pg.s5, "rho7"), DomainError);
}

TEST_CASE("every verifier passes on the default context") {
  const PaperGroups& pg = paper_groups();
  for (const auto& r : {verify_s5_table(pg), verify_gl2_structure(pg), verify_central_extension(pg),
                        verify_lemma_group(pg), verify_xi_existence(pg), verify_symplectic_lemma(pg),
                        verify_lemma_char(pg), verify_projective_table(pg), verify_satake_tables(pg),
                        verify_density_sums(pg)}) {
    CAPTURE(r.lemma);
    CHECK(r.pass);
  }
}

TEST_CASE("xi and psi") {
  const PaperGroups& pg = paper_groups();
  CHECK(pg.xi.extension_count == 2);
  CHECK(pg.xi.xi.degree() == 4);
  CHECK(pg.xi.psi.is_linear());
  CHECK(pg.xi.xi.conj() == pg.xi.xi * pg.xi.psi);
  auto tw = symplectic_twist(pg);
  CHECK(tw.psi_works);
  CHECK(!tw.psi_inverse_works);
}

TEST_CASE("scenario rows: phi from the definition") {
  const PaperGroups& pg = paper_groups();
  for (NuHypothesis nu : {NuHypothesis::PsiInverse, NuHypothesis::PsiInverseEta})
    for (const std::string label : {"2A", "4A", "6A"}) {
      auto rows = satake_scenarios(pg, label_by_name(label), nu);
      REQUIRE(!rows.empty());
      for (const auto& row : rows) {
        CHECK(std::abs(std::norm(eval(row.S)) - row.chi_pi_normsq.to_double()) < 1e-9);
        CHECK(std::abs(std::pow(eval(row.T).real(), 2) - row.chi_varpi_sq.to_double()) < 1e-9);
        CHECK(row.phi == row.chi_pi_normsq - row.chi_xi_normsq - (row.chi_varpi_sq - row.chi_rho_sq));
        CHECK(row.S.size() == 4);
        CHECK(row.T.size() == 5);
      }
    }
  auto phi_eta = forced_phi(pg, NuHypothesis::PsiInverseEta);
  auto phi_inv = forced_phi(pg, NuHypothesis::PsiInverse);
  CHECK(phi_eta[label_index(label_by_name("2A"))] == Rat(-8));
  CHECK(phi_eta[label_index(label_by_name("4A"))] == Rat(0));
  CHECK(phi_eta[label_index(label_by_name("6A"))] == Rat(-2));
  for (const auto& v : phi_inv) CHECK(v.is_zero());
  CHECK_THROWS_AS(satake_scenarios(pg, label_by_name("3A"), NuHypothesis::PsiInverse), DomainError);
}

TEST_CASE("printed 6A rows: phi from their own columns") {
  // ||chi(Pi)||^2, chi(varpi)^2 as printed; the first row has phi = 0, which
  // fixes ||chi(xi)||^2 - chi(rho)^2 = 3 - 1 = 2 on 6A
  const long offset = 3 - 1;
  for (const auto& x : expected_scenarios()) {
    if (x.label != "6A") continue;
    long phi = x.chi_pi_normsq - x.chi_varpi_sq - offset;
    CHECK(phi == (x.printed_phi == 0 ? 0 : -2));
  }
  CHECK(printed_forced_phi(NuHypothesis::PsiInverseEta)[label_index(label_by_name("6A"))] == Rat(2));
}

TEST_CASE("density sums") {
  const PaperGroups& pg = paper_groups();
  CHECK(density_sum(pg, NuHypothesis::PsiInverse) == Rat(0));
  // -8 * 10/120 - 2 * 20/120
  CHECK(density_sum(pg, NuHypothesis::PsiInverseEta) == Rat(-1));
  CHECK(printed_density_sum(NuHypothesis::PsiInverseEta) == Rat(-1) / Rat(3));
}

TEST_CASE("scenario tables reproduce every printed row") {
  auto cmp = compare_scenario_tables(paper_groups());
  for (std::size_t k = 0; k < cmp.matched.size(); ++k) {
    CAPTURE(k);
    CHECK(cmp.matched[k]);
    CHECK(cmp.computed_phi[k].has_value());
  }
}

TEST_CASE("a corrupted rho5 is caught") {
  PaperOptions o;
  o.corrupt_rho5 = true;
  PaperGroups bad = build_paper_groups(o);
  CHECK(!verify_symplectic_lemma(bad).pass);
  CHECK(!verify_s5_table(bad).pass);
}

TEST_CASE("report JSON shape") {
  auto r = verify_satake_tables(paper_groups());
  auto j = to_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"lemma", "pass", "witnesses", "trace", "rows"});
  REQUIRE(!j["rows"].empty());
  for (const char* k : {"nu", "class", "S", "chiPi2", "T", "chiVarpi2", "phi"}) CHECK(j["rows"][0].contains(k));
  auto c = cyc_json(Cyc::root(30));
  CHECK(c["exact"].size() == 32);
  CHECK(c.contains("approx"));
  CHECK(parse_nu("psi-eta") == NuHypothesis::PsiInverseEta);
  CHECK(parse_nu("psi^-1") == NuHypothesis::PsiInverse);
  CHECK_THROWS_AS(parse_nu("eta"), DomainError);
}
