#pragma once

#include <array>
#include <string>
#include <vector>

#include "s5artin/chars.hpp"
#include "s5artin/groups.hpp"
#include "s5artin/report.hpp"

namespace s5artin {

/// Named irreducibles of S5 = PGL2(F5).
struct S5Characters {
  Character trivial, eta, rho4, rho4_eta, rho5, rho5_eta, rho6;
};

/// Looks up "trivial", "eta", "rho4", "rho4eta", "rho5", "rho5eta", "rho6".
const Character& s5_character(const S5Characters& s5, const std::string& name);
std::vector<std::string> s5_character_names();

/// Hardcoded S5 table in the column order of s5_labels().
struct ExpectedRow {
  std::string name;
  std::array<int, 7> values;
};
const std::vector<ExpectedRow>& expected_s5_table();

struct XiData {
  Character xi;
  Character xi_eta;
  Character psi;
  std::size_t extension_count;
};

struct PaperOptions {
  /// Test hook: perturbs the computed rho5 so that identities involving it fail.
  bool corrupt_rho5 = false;
};

/// Every group, map and character the verifiers work with, built once.
struct PaperGroups {
  GroupPtr gl2, na5, delta, pgl, a5;
  ClassMap na5_in_gl2, delta_in_na5, projection, a5_in_pgl;
  std::vector<ClassLabel> pgl_labels;  // per pgl class
  std::vector<ClassLabel> gl2_labels;  // per gl2 class, label of the image
  std::vector<Character> gl2_table, na5_table, pgl_table;
  S5Characters s5;
  GroupElem iota;
  std::vector<std::size_t> iota_action;  // class permutation of na5
  std::vector<Character> faithful_deg2;
  Character rho, iota_rho, det_rho;
  XiData xi;
  Character eta_gl2;
  Character rho5_gl2;

  /// pgl class carrying the given label.
  std::size_t pgl_class(const ClassLabel& label) const;
  /// gl2 classes lying over the label, in class order.
  std::vector<std::size_t> gl2_classes_over(const ClassLabel& label) const;
  /// S5 character inflated to GL2(F5) and restricted to N.A5.
  Character inflate(const Character& s5_char) const;
  Character inflate_to_na5(const Character& s5_char) const;

  std::vector<std::string> gl2_class_names() const;
  std::vector<std::string> na5_class_names() const;
  std::vector<std::string> pgl_class_names() const;
};

PaperGroups build_paper_groups(const PaperOptions& options = {});
/// Default context, computed on first use.
const PaperGroups& paper_groups();

/// Names the S5 irreducibles from a computed PGL2(F5) table.
S5Characters name_s5_characters(const std::vector<Character>& table,
                                const std::vector<ClassLabel>& labels);

/// Extensions of Sym^3(rho) to GL2(F5), canonical choice first.
/// Throws InconsistencyError unless there are exactly two.
XiData find_xi(const PaperGroups& pg);

LemmaReport verify_s5_table(const PaperGroups& pg);
LemmaReport verify_gl2_structure(const PaperGroups& pg);
LemmaReport verify_central_extension(const PaperGroups& pg);
LemmaReport verify_lemma_group(const PaperGroups& pg);
LemmaReport verify_xi_existence(const PaperGroups& pg);
LemmaReport verify_symplectic_lemma(const PaperGroups& pg);
LemmaReport verify_lemma_char(const PaperGroups& pg);
LemmaReport verify_projective_table(const PaperGroups& pg);
LemmaReport verify_satake_tables(const PaperGroups& pg);
LemmaReport verify_density_sums(const PaperGroups& pg);

/// Twist s in {psi, psi^-1} with (ext^2 xi) * s = 1 + rho5; both candidates reported.
struct TwistResult {
  bool psi_works;
  bool psi_inverse_works;
};
TwistResult symplectic_twist(const PaperGroups& pg);

/// Scenario rows for an odd label (2A, 4A, 6A) over every GL2(F5) class above it.
/// Throws DomainError for other labels, InconsistencyError if a class admits no S.
std::vector<ScenarioRow> satake_scenarios(const PaperGroups& pg, const ClassLabel& label,
                                          NuHypothesis nu);
/// Same bookkeeping with xi replaced by an arbitrary degree-4 character.
std::vector<ScenarioRow> satake_scenarios_for(const PaperGroups& pg, const Character& xi,
                                              const ClassLabel& label, NuHypothesis nu);
/// For even labels: S is the eigenvalue multiset itself.
std::vector<ScenarioRow> even_class_rows(const PaperGroups& pg, const ClassLabel& label);

/// Forced phi per label, in s5_labels() order.
/// Throws InconsistencyError if rows over a label disagree.
std::array<Rat, 7> forced_phi(const PaperGroups& pg, NuHypothesis nu);
Rat density_sum(const PaperGroups& pg, NuHypothesis nu);

/// Reference scenario tables, with S and nu relative to the scalar zeta.
/// printed_phi is the value as printed; on 6A under psi^-1 eta it disagrees
/// with the definition of phi applied to the other printed columns.
struct ExpectedScenario {
  std::string label;
  std::vector<NuHypothesis> hypotheses;
  int nu_relative;                // nu(x) / zeta^2
  std::vector<int> s_relative;    // S / zeta
  std::vector<int> t;             // absolute exponents
  long chi_pi_normsq;
  long chi_varpi_sq;
  long printed_phi;
};

/// Reference density sums: 0 under psi^-1 and -1/3 under psi^-1 eta.
Rat printed_density_sum(NuHypothesis nu);
/// Per-class phi read from the printed tables (0 where no row is printed).
std::array<Rat, 7> printed_forced_phi(NuHypothesis nu);

/// Per scenario-table row: the computed phi and whether it was matched.
struct TableComparison {
  std::vector<bool> matched;       // rows reproduced (S, T, norms, nu)
  std::vector<std::optional<Rat>> computed_phi;
};
TableComparison compare_scenario_tables(const PaperGroups& pg);
const std::vector<ExpectedScenario>& expected_scenarios();
/// Eigenvalue shape of xi over each odd label, up to the scalar zeta.
const std::vector<int>& xi_shape(const std::string& label);

}  // namespace s5artin
