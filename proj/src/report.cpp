#include "s5artin/report.hpp"

#include "s5artin/error.hpp"

namespace s5artin {

std::string to_string(NuHypothesis nu) {
  return nu == NuHypothesis::PsiInverse ? "psi^-1" : "psi^-1*eta";
}

NuHypothesis parse_nu(const std::string& text) {
  if (text == "psi" || text == "psi-inv" || text == "psi^-1") return NuHypothesis::PsiInverse;
  if (text == "psi-eta" || text == "psi-inv-eta" || text == "psi^-1*eta")
    return NuHypothesis::PsiInverseEta;
  throw DomainError("unknown nu hypothesis '" + text + "' (expected psi or psi-eta)");
}

bool LemmaReport::check(bool ok, const std::string& what, const std::string& counterexample) {
  trace.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  if (!ok) {
    pass = false;
    witnesses.push_back({"counterexample: " + what,
                         counterexample.empty() ? "(no class involved)" : counterexample,
                         std::nullopt});
  }
  return ok;
}

bool LemmaReport::check_equal(const Character& a, const Character& b, const std::string& what,
                              const std::vector<std::string>& class_names) {
  auto diff = first_difference(a, b);
  if (!diff) return check(true, what);
  const size_t c = *diff;
  std::string where = c < class_names.size() ? class_names[c] : "class " + std::to_string(c);
  check(false, what, where + ": " + a[c].str() + " != " + b[c].str());
  witnesses.push_back({"lhs at " + where, a[c].str(), a[c]});
  witnesses.push_back({"rhs at " + where, b[c].str(), b[c]});
  return false;
}

nlohmann::ordered_json cyc_json(const Cyc& c) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& x : c.coeffs()) coeffs.push_back(x.str());
  return {{"exact", std::move(coeffs)}, {"text", c.str()}, {"approx", c.approx(12)}};
}

nlohmann::ordered_json multiset_json(const EigenMultiset& m) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (int e : m.exponents())
    out.push_back({{"z_exponent", e}, {"approx", Cyc::root(e).approx(12)}});
  return out;
}

nlohmann::ordered_json to_json(const ScenarioRow& row) {
  return {{"nu", to_string(row.nu)},
          {"class", row.label.name},
          {"gl2_class", row.gl2_class},
          {"nu_value", cyc_json(Cyc::root(row.nu_exponent))},
          {"S", multiset_json(row.S)},
          {"chiPi2", row.chi_pi_normsq.str()},
          {"T", multiset_json(row.T)},
          {"chiVarpi2", row.chi_varpi_sq.str()},
          {"phi", row.phi.str()}};
}

nlohmann::ordered_json to_json(const LemmaReport& report) {
  nlohmann::ordered_json w = nlohmann::ordered_json::array();
  for (const auto& x : report.witnesses) {
    nlohmann::ordered_json item = {{"name", x.name}, {"value", x.value}};
    if (x.exact) item["exact"] = cyc_json(*x.exact);
    w.push_back(std::move(item));
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) rows.push_back(to_json(r));
  return {{"lemma", report.lemma},
          {"pass", report.pass},
          {"witnesses", std::move(w)},
          {"trace", report.trace},
          {"rows", std::move(rows)}};
}

}  // namespace s5artin
