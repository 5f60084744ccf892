#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "s5artin/groups.hpp"

using namespace s5artin;

namespace {

std::map<std::string, int> s5_cycle_type_counts() {
  std::vector<int> p{0, 1, 2, 3, 4};
  std::map<std::string, int> out;
  do {
    ++out[cycle_type_label(Perm(p).cycle_type()).name];
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("GL2(F5) has 480 elements in 24 classes") {
  auto g = build_gl2f5();
  CHECK(g->order() == 480);
  CHECK(g->num_classes() == 24);
  std::size_t total = 0;
  for (const auto& c : g->classes()) {
    total += c.size;
    CHECK(g->order() % c.size == 0);
  }
  CHECK(total == 480);
  CHECK(g->center().size() == 4);
  CHECK(g->cls(0).size == 1);
}

TEST_CASE("N.A5 and the scalars") {
  auto g = build_gl2f5();
  auto na5 = subgroup_na5(g);
  auto delta = subgroup_scalars(g);
  CHECK(na5->order() == 240);
  CHECK(na5->num_classes() == 18);
  CHECK(delta->order() == 4);
  for (const auto& e : na5->elements()) CHECK(e.matrix().det().is_square());
}

TEST_CASE("PGL2(F5) acting on six points is S5") {
  auto g = build_gl2f5();
  auto img = build_pgl2f5(g);
  const Group& pgl = *img.pgl;
  CHECK(pgl.order() == 120);
  CHECK(pgl.num_classes() == 7);
  // class sizes by label, against cycle types of the 120 permutations of five letters
  auto want = s5_cycle_type_counts();
  std::map<std::string, int> got;
  for (std::size_t c = 0; c < pgl.num_classes(); ++c) got[img.labels[c].name] += static_cast<int>(pgl.cls(c).size);
  CHECK(got == want);
  CHECK(want == std::map<std::string, int>{{"1", 1}, {"2A", 10}, {"2B", 15}, {"3A", 20},
                                           {"4A", 30}, {"5A", 24}, {"6A", 20}});
}

TEST_CASE("labels from order and parity") {
  CHECK(label_from_order_parity(2, -1).name == "2A");
  CHECK(label_from_order_parity(2, 1).name == "2B");
  CHECK(label_from_order_parity(6, -1).name == "6A");
  CHECK(cycle_type_label({2, 3}).name == "6A");
  CHECK(cycle_type_label({1, 1, 1, 2}).name == "2A");
  CHECK(cycle_type_label({1, 2, 2}).name == "2B");
  CHECK(cycle_type_label({5}).name == "5A");
  int sum = 0;
  for (int s : s5_class_sizes()) sum += s;
  CHECK(sum == 120);
}

TEST_CASE("permutations") {
  Perm a({1, 2, 0, 3});
  CHECK(a.sign() == 1);
  CHECK((a * a.inverse()) == Perm::identity(4));
  CHECK(Perm({1, 0, 2}).sign() == -1);
  CHECK(a.cycle_type() == std::vector<int>{1, 3});
}

TEST_CASE("power maps send classes to classes of the right order") {
  auto g = build_gl2f5();
  for (std::size_t c = 0; c < g->num_classes(); ++c) {
    const int n = g->cls(c).order;
    CHECK(g->power_class(c, n) == 0);
    CHECK(g->cls(g->inverse_class(c)).size == g->cls(c).size);
    for (long k = 1; k < n; ++k)
      if (std::gcd(k, static_cast<long>(n)) == 1) CHECK(g->cls(g->power_class(c, k)).order == n);
  }
}
