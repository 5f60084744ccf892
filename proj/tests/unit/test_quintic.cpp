#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "s5artin/error.hpp"
#include "s5artin/quintic.hpp"
#include "s5artin/sieve.hpp"

using namespace s5artin;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("s5artin_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("example field profile") {
  auto p = field_profile(default_quintic());
  CHECK(p.disc == 1609);
  CHECK(p.r1 == 1);
  CHECK(p.r2 == 2);
  CHECK(p.conjugation.name == "2B");
  REQUIRE(p.ramified_primes.size() == 1);
  CHECK(p.ramified_primes[0] == 1609);
  CHECK(p.cofactor == 1);
}

TEST_CASE("Frobenius classes") {
  Quintic q(default_quintic());
  CHECK(q.frobenius(2).label->name == "5A");
  CHECK(q.frobenius(5).label->name == "5A");
  CHECK(q.frobenius(7).label->name == "6A");
  auto r = q.frobenius(1609);
  CHECK(r.ramified);
  CHECK(!r.label.has_value());
  CHECK_THROWS_AS(q.frobenius(15), DomainError);
  for (std::uint32_t p : primes_up_to(2000)) {
    auto rec = q.frobenius(p);
    if (rec.ramified) continue;
    CHECK(std::accumulate(rec.partition.begin(), rec.partition.end(), 0) == 5);
    CHECK(*rec.label == cycle_type_label(rec.partition));
  }
}

TEST_CASE("hypothesis checks on the example field") {
  auto h = check_theorem_hypotheses(default_quintic());
  CHECK(h.conjugation_is_2b);
  CHECK(h.five_unramified);
  CHECK(!h.frob5_is_2b);
  CHECK(h.frob5->name == "5A");
  CHECK(h.evidence.certifies_s5());
}

TEST_CASE("input validation") {
  CHECK(parse_coefficients("1, 1,-1,-1,0,+1") == default_quintic());
  CHECK_THROWS_AS(parse_coefficients("1,x"), DomainError);
  CHECK_THROWS_AS(parse_coefficients(""), DomainError);
  CHECK_THROWS_AS(parse_coefficients("1,,2"), DomainError);
  CHECK_THROWS_AS(Quintic(IntPoly{1, 1, -1, -1, 0, 2}), DomainError);  // not monic
  CHECK_THROWS_AS(Quintic(IntPoly{1, 0, 1}), DomainError);              // not degree 5
  CHECK_THROWS_AS(Quintic(IntPoly{0, 0, 0, 0, 0, 1}), DomainError);     // x^5, disc 0
  CHECK_THROWS_AS(Quintic(IntPoly{-1, 0, 0, 0, 0, 1}), DomainError);    // x^5 - 1
  // (x^2 + 1)(x^3 + x + 1): no rational root, still reducible
  CHECK_THROWS_AS(Quintic(IntPoly{1, 1, 1, 2, 0, 1}), DomainError);
  Quintic q(default_quintic());
  CHECK(q.certificate().no_linear_factor == 2);
}

TEST_CASE("Chebotarev counts are consistent") {
  Quintic q(default_quintic());
  auto st = chebotarev_stats(q, 100'000);
  CHECK(st.primes_total == primes_up_to(100'000).size());
  CHECK(st.ramified == 1);
  CHECK(std::accumulate(st.counts.begin(), st.counts.end(), std::uint64_t{0}) == st.processed);
  CHECK(st.processed + st.ramified == st.primes_total);
  CHECK(st.within_tolerance());
  CHECK(ChebotarevStats::density(label_index(label_by_name("4A"))) == Rat(1) / Rat(4));
}

TEST_CASE("Frobenius cache round trip") {
  fs::path dir = scratch_dir("cache");
  Quintic q(default_quintic());
  fs::path file = cache_file(dir, q.poly());
  CHECK(file.filename() == "frobenius_1_1_-1_-1_0_1.tsv");

  bool cached = true;
  auto first = frobenius_records(q, 5000, file, &cached);
  CHECK(!cached);
  CHECK(slurp(file).rfind("# s5artin frobenius cache v1 poly=1,1,-1,-1,0,1\n", 0) == 0);
  auto second = frobenius_records(q, 5000, file, &cached);
  CHECK(cached);
  REQUIRE(second.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].p == second[i].p);
    CHECK(first[i].partition == second[i].partition);
  }
  // extending the bound appends
  auto longer = frobenius_records(q, 8000, file, &cached);
  CHECK(!cached);
  CHECK(frobenius_records(q, 8000, file, &cached).size() == longer.size());
  CHECK(cached);

  // a damaged line forces a full recompute and a clean rewrite
  std::string text = slurp(file);
  auto pos = text.find("\t5\t5A");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 5, "\t5\t2A");
  std::ofstream(file) << text;
  auto repaired = frobenius_records(q, 8000, file, &cached);
  CHECK(!cached);
  frobenius_records(q, 8000, file, &cached);
  CHECK(cached);

  // a header for another polynomial is not reused
  Quintic other(IntPoly{-1, -1, 0, 0, 0, 1});
  auto o = frobenius_records(other, 1000, file, &cached);
  CHECK(!cached);
  CHECK(slurp(file).find("poly=-1,-1,0,0,0,1") != std::string::npos);
  fs::remove_all(dir);
}
