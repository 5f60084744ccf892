#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "s5artin/cli.hpp"

using namespace s5artin;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// re-parse and re-serialise must reproduce the bytes
void check_round_trip(const std::string& text) {
  auto j = ordered_json::parse(text);
  CHECK(j.dump(2) + "\n" == text);
}

struct CacheDir {
  std::filesystem::path dir = std::filesystem::temp_directory_path() /
                              ("s5artin_cli_cache_" + std::to_string(::getpid()));
  CacheDir() {
    std::filesystem::remove_all(dir);
    ::setenv("S5ARTIN_CACHE_DIR", dir.c_str(), 1);
  }
  ~CacheDir() { std::filesystem::remove_all(dir); }
};

}  // namespace

TEST_CASE("verify") {
  auto r = run({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("11 of 11 sections pass") != std::string::npos);
  auto j = run({"verify", "--format", "json"});
  CHECK(j.code == 0);
  check_round_trip(j.out);
  auto doc = ordered_json::parse(j.out);
  REQUIRE(doc["sections"].size() == 11);
  for (std::size_t i = 0; i < 11; ++i) {
    CHECK(doc["sections"][i]["lemma"] == verify_section_names()[i]);
    CHECK(doc["sections"][i]["pass"] == true);
  }
  auto t = run({"--format", "tsv", "verify"});
  CHECK(t.out.rfind("lemma\tpass\tchecks\tfailed\n", 0) == 0);
}

TEST_CASE("verify with an injected fault") {
  auto r = run({"verify", "--inject-fault", "corrupt-rho5"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("verify: FAIL ", 0) == 0);
  CHECK(run({"verify", "--inject-fault", "nonsense"}).code == 2);
}

TEST_CASE("tables") {
  auto r = run({"tables", "--format", "json"});
  CHECK(r.code == 0);
  check_round_trip(r.out);
  auto j = ordered_json::parse(r.out);
  CHECK(j["gl2"]["characters"].size() == 24);
  CHECK(j["na5"]["characters"].size() == 18);
  CHECK(j["s5"]["diff"].empty());
  auto rho6 = j["s5"]["characters"][6];
  CHECK(rho6["name"] == "rho6");
  std::vector<std::string> values;
  for (const auto& v : rho6["values"]) values.push_back(v["text"]);
  CHECK(values == std::vector<std::string>{"6", "0", "-2", "0", "0", "1", "0"});
  // identity column equals degrees
  for (const auto& x : j["gl2"]["characters"]) CHECK(x["values"][0]["text"].get<std::string>() != "0");
  auto text = run({"tables"});
  CHECK(text.out.find("diff: computed S5 table equals the expected table") != std::string::npos);
}

TEST_CASE("field commands") {
  CacheDir cache;
  auto p = run({"field", "profile", "--format", "json"});
  CHECK(p.code == 0);
  check_round_trip(p.out);
  auto j = ordered_json::parse(p.out);
  CHECK(j["disc"] == "1609");
  CHECK(j["signature"] == ordered_json::array({1, 2}));
  CHECK(j["conjugation"] == "2B");

  auto f = run({"field", "frobenius", "--p", "2"});
  CHECK(f.code == 0);
  CHECK(f.out.find("5A") != std::string::npos);
  auto h = run({"field", "hypotheses", "--format", "json"});
  auto hj = ordered_json::parse(h.out);
  CHECK(hj["hypothesis_1"]["pass"] == true);
  CHECK(hj["hypothesis_2"]["pass"] == false);
  CHECK(hj["hypothesis_2"]["frob5"] == "5A");

  auto c1 = run({"field", "chebotarev", "--pmax", "20000", "--format", "json"});
  CHECK(c1.code == 0);
  check_round_trip(c1.out);
  CHECK(ordered_json::parse(c1.out)["from_cache"] == false);
  auto c2 = run({"field", "chebotarev", "--pmax", "20000", "--format", "json"});
  CHECK(ordered_json::parse(c2.out)["from_cache"] == true);
  CHECK(std::filesystem::exists(cache.dir / "frobenius_1_1_-1_-1_0_1.tsv"));
  auto c3 = run({"field", "chebotarev", "--pmax", "20000", "--no-cache", "--format", "json"});
  CHECK(ordered_json::parse(c3.out)["from_cache"] == false);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"field", "profile", "--poly", "1,0,0,0,0,1"}).code == 2);  // x^5 + 1 is reducible
  CHECK(run({"field", "profile", "--poly", "1,2,x"}).code == 2);
  CHECK(run({"field", "frobenius", "--p", "4"}).code == 2);
  CHECK(run({"field", "frobenius"}).code == 2);
  CHECK(run({"lfun", "--rep", "rho7", "value"}).code == 2);
  CHECK(run({"--format", "xml", "tables"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("lfun commands") {
  CacheDir cache;
  auto s1 = run({"lfun", "value", "--s", "1"});
  CHECK(s1.code == 2);
  CHECK(s1.err.find("s > 1") != std::string::npos);

  auto v = run({"lfun", "--rep", "trivial", "--s", "2", "--pmax", "100000", "value", "--format", "json"});
  CHECK(v.code == 0);
  check_round_trip(v.out);
  auto j = ordered_json::parse(v.out);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 5) ==
        std::vector<std::string>{"s", "P", "value", "tail_bound", "digits"});
  CHECK(std::abs(std::stod(j["value"].get<std::string>()) - M_PI * M_PI / 6) < 2e-6);

  auto mu = run({"lfun", "mu-omega", "--primes", "2", "--s", "1", "--format", "json"});
  CHECK(mu.code == 0);
  CHECK(ordered_json::parse(mu.out)["value"].get<std::string>().rfind("9", 0) == 0);
  CHECK(run({"lfun", "mu-omega", "--primes", "2,4"}).code == 2);

  auto phi = run({"lfun", "phi-average", "--nu", "psi-inv", "--pmax", "20000", "--format", "json"});
  CHECK(phi.code == 0);
  CHECK(ordered_json::parse(phi.out)["value"] == "0");
  CHECK(run({"lfun", "phi-average", "--nu", "eta"}).code == 2);
}
