#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "s5artin/cli.hpp"
#include "s5artin/error.hpp"

namespace py = pybind11;
using namespace s5artin;
using nlohmann::ordered_json;

namespace {

IntPoly poly_from(const std::vector<long>& coeffs) { return IntPoly::from_longs(coeffs); }

std::vector<std::string> rat_strings(const std::vector<Rat>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

ordered_json record_json(const FrobeniusRecord& r) {
  return {{"p", r.p},
          {"ramified", r.ramified},
          {"partition", r.partition},
          {"class", r.label ? ordered_json(r.label->name) : ordered_json(nullptr)}};
}

}  // namespace

PYBIND11_MODULE(_s5artin, m) {
  m.doc() = "Exact S5 character computations, quintic field data and partial Euler products";

  // translators are tried newest first, so the base class goes in first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("verify_json", [] {
    ordered_json j = ordered_json::array();
    for (const auto& r : verify_suite(paper_groups())) j.push_back(to_json(r));
    return j.dump();
  });
  m.def("section_names", &verify_section_names);

  m.def("s5_table", [] {
    const PaperGroups& pg = paper_groups();
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& n : s5_character_names()) {
      std::vector<std::string> row;
      for (const auto& l : s5_labels()) row.push_back(s5_character(pg.s5, n)[pg.pgl_class(l)].str());
      out.emplace_back(n, row);
    }
    return out;
  });
  m.def("s5_labels", [] {
    std::vector<std::string> out;
    for (const auto& l : s5_labels()) out.push_back(l.name);
    return out;
  });
  m.def("gl2_class_count", [] { return paper_groups().gl2->num_classes(); });

  m.def("local_factor", [](const std::string& rep, const std::string& label) {
    return rat_strings(local_factor(s5_character(paper_groups().s5, rep), label_by_name(label)).rational());
  });
  m.def("taylor_coefficients", [](int n) { return rat_strings(taylor_coefficients(n)); });

  m.def("scenarios_json", [](const std::string& label, const std::string& nu) {
    ordered_json j = ordered_json::array();
    for (const auto& row : satake_scenarios(paper_groups(), label_by_name(label), parse_nu(nu)))
      j.push_back(to_json(row));
    return j.dump();
  });
  m.def("density_sum", [](const std::string& nu) { return density_sum(paper_groups(), parse_nu(nu)).str(); });

  m.def("field_profile_json", [](const std::vector<long>& coeffs) {
    auto p = field_profile(poly_from(coeffs));
    std::vector<std::string> ram;
    for (const auto& r : p.ramified_primes) ram.push_back(r.get_str());
    ordered_json j{{"disc", p.disc.get_str()},
                   {"signature", {p.r1, p.r2}},
                   {"conjugation", p.conjugation.name},
                   {"ramified_primes", ram}};
    return j.dump();
  });
  m.def("frobenius_json", [](const std::vector<long>& coeffs, std::uint32_t p) {
    return record_json(frobenius_class(poly_from(coeffs), p)).dump();
  });
  m.def("chebotarev_counts", [](const std::vector<long>& coeffs, std::uint64_t bound) {
    auto st = chebotarev_stats(Quintic(poly_from(coeffs)), bound);
    return std::make_tuple(std::vector<std::uint64_t>(st.counts.begin(), st.counts.end()), st.processed,
                           st.within_tolerance());
  });

  m.def(
      "partial_L_json",
      [](const std::string& rep, const std::vector<long>& coeffs, double s, std::uint64_t bound) {
        auto v = partial_L(s5_character(paper_groups().s5, rep), Quintic(poly_from(coeffs)), s, bound);
        return to_json(v).dump();
      },
      py::arg("rep"), py::arg("coeffs"), py::arg("s"), py::arg("bound"));
  m.def(
      "phi_average",
      [](const std::vector<long>& coeffs, std::uint64_t bound, const std::string& nu, const std::string& source) {
        auto a = phi_average(paper_groups(), Quintic(poly_from(coeffs)), bound, parse_nu(nu),
                             parse_phi_source(source));
        return a.value().str();
      },
      py::arg("coeffs"), py::arg("bound"), py::arg("nu"), py::arg("source") = "computed");
  m.def("mu_omega", [](const std::vector<std::uint32_t>& primes, double s) {
    return mu_omega_partial(primes, s).value;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return std::make_tuple(code, out.str(), err.str());
  });
}
