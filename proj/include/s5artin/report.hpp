#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "s5artin/chars.hpp"

namespace s5artin {

struct Witness {
  std::string name;
  std::string value;
  std::optional<Cyc> exact;
};

enum class NuHypothesis { PsiInverse, PsiInverseEta };

std::string to_string(NuHypothesis nu);
/// Accepts "psi" / "psi-inv" and "psi-eta" / "psi-inv-eta".
NuHypothesis parse_nu(const std::string& text);

/// One line of a Satake scenario table over an odd S5 class.
struct ScenarioRow {
  NuHypothesis nu;
  ClassLabel label;
  std::size_t gl2_class;
  int nu_exponent;        // nu(x) = z^nu_exponent
  EigenMultiset S;        // canonical representative of {S, -S}
  Rat chi_pi_normsq;      // |sum S|^2
  EigenMultiset T;
  Rat chi_varpi_sq;       // (sum T)^2
  Rat chi_xi_normsq;      // |trace xi|^2
  Rat chi_rho_sq;         // rho5(x)^2
  Rat phi;
};

/// Outcome of one machine-checked identity group.
struct LemmaReport {
  std::string lemma;
  bool pass = true;
  std::vector<Witness> witnesses;
  std::vector<std::string> trace;
  std::vector<ScenarioRow> rows;

  /// Records a sub-check; a failing check must name its counterexample.
  bool check(bool ok, const std::string& what, const std::string& counterexample = {});
  /// Classwise equality with the first differing class as witness on failure.
  bool check_equal(const Character& a, const Character& b, const std::string& what,
                   const std::vector<std::string>& class_names);
  /// Informational trace line; does not affect pass.
  void note(const std::string& text) { trace.push_back("note " + text); }
  void witness(std::string name, std::string value) {
    witnesses.push_back({std::move(name), std::move(value), std::nullopt});
  }
  void witness(std::string name, const Cyc& value) {
    witnesses.push_back({std::move(name), value.str(), value});
  }
};

nlohmann::ordered_json cyc_json(const Cyc& c);
nlohmann::ordered_json multiset_json(const EigenMultiset& m);
nlohmann::ordered_json to_json(const ScenarioRow& row);
nlohmann::ordered_json to_json(const LemmaReport& report);

}  // namespace s5artin
