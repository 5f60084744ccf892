#include <complex>

#include "doctest.h"
#include "s5artin/chars.hpp"
#include "s5artin/error.hpp"

using namespace s5artin;

namespace {

struct Fixture {
  GroupPtr gl2 = build_gl2f5();
  ProjectiveImage pgl = build_pgl2f5(gl2);
  std::vector<Character> gl2_table = character_table(gl2);
  std::vector<Character> pgl_table = character_table(pgl.pgl);
  GroupPtr na5 = subgroup_na5(gl2);
  std::vector<Character> na5_table = character_table(na5);
};

const Fixture& fx() {
  static const Fixture f;
  return f;
}

// |G| / |C_G(x)| summed over columns: sum_chi |chi(x)|^2 = |C_G(x)|
void check_column_orthogonality(const Group& g, const std::vector<Character>& table) {
  for (std::size_t c = 0; c < g.num_classes(); ++c) {
    Cyc s;
    for (const auto& x : table) s += x[c].norm_sq();
    CHECK(s == Cyc(static_cast<long>(g.order() / g.cls(c).size)));
  }
}

}  // namespace

TEST_CASE("tables are orthonormal") {
  for (const auto* t : {&fx().gl2_table, &fx().na5_table, &fx().pgl_table}) {
    for (std::size_t i = 0; i < t->size(); ++i)
      for (std::size_t j = 0; j < t->size(); ++j) CHECK(inner((*t)[i], (*t)[j]) == Rat(i == j ? 1 : 0));
  }
  check_column_orthogonality(*fx().gl2, fx().gl2_table);
  check_column_orthogonality(*fx().pgl.pgl, fx().pgl_table);
}

TEST_CASE("degree bookkeeping") {
  long s = 0;
  for (const auto& x : fx().gl2_table) s += static_cast<long>(x.degree()) * x.degree();
  CHECK(s == 480);
  CHECK(fx().pgl_table.size() == 7);
  std::vector<int> degrees;
  for (const auto& x : fx().pgl_table) degrees.push_back(x.degree());
  CHECK(degrees == std::vector<int>{1, 1, 4, 4, 5, 5, 6});
}

TEST_CASE("plethysm identities") {
  for (const auto& x : fx().gl2_table) {
    CHECK(sym_power(x, 2) + ext_power(x, 2) == x * x);
    CHECK(sym_power(x, 1) == x);
    CHECK(sym_power(x, 0) == Character::trivial(fx().gl2));
  }
  // for a 2-dimensional character ext^2 is the determinant, Sym^3 has degree 4
  int two_dim = 0;
  for (const auto& x : fx().na5_table) {
    if (x.degree() != 2) continue;
    ++two_dim;
    Character det = ext_power(x, 2);
    CHECK(det.is_linear());
    CHECK(sym_power(x, 3).degree() == 4);
    // Sym^2 x * x = Sym^3 x + x * det (Clebsch-Gordan)
    CHECK(sym_power(x, 2) * x == sym_power(x, 3) + x * det);
  }
  CHECK(two_dim == 4);
}

TEST_CASE("S5 characters are real with indicator +1") {
  for (const auto& x : fx().pgl_table) {
    for (const auto& v : x.values()) CHECK(v.is_rational());
    CHECK(fs_indicator(x) == 1);
  }
}

TEST_CASE("eigenvalue multisets have the right size and trace") {
  for (const auto& x : fx().gl2_table)
    for (std::size_t c = 0; c < fx().gl2->num_classes(); ++c) {
      auto e = eigenvalues(x, c);
      CHECK(e.size() == static_cast<std::size_t>(x.degree()));
      CHECK(e.sum() == x[c]);
    }
}

TEST_CASE("permutation character of a point stabiliser counts fixed points") {
  const GroupPtr& g = fx().pgl.pgl;
  auto stab = subgroup_where(g, "stab", [](const GroupElem& e) { return e.perm()(5) == 5; });
  CHECK(stab->order() == 20);
  Character perm = induced_perm_char(g, stab);
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    const Perm& p = g->element(g->cls(c).representative).perm();
    long fixed = 0;
    for (int i = 0; i < p.size(); ++i) fixed += p(i) == i;
    CHECK(perm[c] == Cyc(fixed));
  }
}

TEST_CASE("errors") {
  auto g = fx().gl2;
  Character sum = fx().gl2_table[4] + fx().gl2_table[5];
  CHECK_THROWS_AS(fs_indicator(sum), DomainError);
  CHECK_THROWS_AS(inner(fx().gl2_table[0], fx().pgl_table[0]), DomainError);
  CHECK_THROWS_AS(sym_power(fx().gl2_table[0], 5), DomainError);
}
