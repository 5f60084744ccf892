#include "s5artin/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "s5artin/error.hpp"

namespace s5artin {

using nlohmann::ordered_json;

const std::vector<std::string>& verify_section_names() {
  static const std::vector<std::string> names = {
      "central_extension", "lemma_group",      "xi_existence",          "symplectic",
      "lemma_char",        "projective_table", "satake_tables",         "density_sums",
      "omega_factor_identity", "taylor_positivity", "zeta_H_factorization"};
  return names;
}

std::vector<LemmaReport> verify_suite(const PaperGroups& pg) {
  const std::vector<std::function<LemmaReport()>> runs = {
      [&] { return verify_central_extension(pg); },
      [&] { return verify_lemma_group(pg); },
      [&] { return verify_xi_existence(pg); },
      [&] { return verify_symplectic_lemma(pg); },
      [&] { return verify_lemma_char(pg); },
      [&] { return verify_projective_table(pg); },
      [&] { return verify_satake_tables(pg); },
      [&] { return verify_density_sums(pg); },
      [&] { return omega_factor_identity_check(pg); },
      [] { return taylor_positivity_check(50); },
      [&] { return verify_zeta_H_factorization(pg); },
  };
  std::vector<LemmaReport> out;
  const auto& names = verify_section_names();
  for (std::size_t i = 0; i < runs.size(); ++i) {
    try {
      out.push_back(runs[i]());
    } catch (const std::exception& e) {
      LemmaReport r{names[i]};
      r.check(false, "section raised an error", e.what());
      out.push_back(std::move(r));
    }
    out.back().lemma = names[i];
  }
  return out;
}

std::optional<std::filesystem::path> default_cache_dir() {
  if (auto dir = cache_dir_from_env()) return dir;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::filesystem::path(x) / "s5artin";
  if (const char* h = std::getenv("HOME"); h && *h)
    return std::filesystem::path(h) / ".cache" / "s5artin";
  return std::nullopt;
}

namespace {

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

/// Left-aligned table with a header row.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i)
      line += i + 1 == r.size() ? r[i] : pad(r[i], width[i] + 2);
    out << line << '\n';
  }
}

std::string first_failure(const LemmaReport& r) {
  for (const auto& t : r.trace)
    if (t.rfind("FAIL", 0) == 0) return t.substr(5);
  return "unknown";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err, bool verbose) {
  PaperOptions options;
  options.corrupt_rho5 = cfg.inject_fault == "corrupt-rho5";
  std::optional<PaperGroups> faulty;
  if (options.corrupt_rho5) faulty = build_paper_groups(options);
  const PaperGroups* pg = faulty ? &*faulty : &paper_groups();
  auto reports = verify_suite(*pg);
  bool all = std::all_of(reports.begin(), reports.end(), [](const LemmaReport& r) { return r.pass; });

  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["pass"] = all;
    j["sections"] = ordered_json::array();
    for (const auto& r : reports) j["sections"].push_back(to_json(r));
    emit_json(out, j);
  } else if (cfg.format == OutputFormat::Tsv) {
    out << "lemma\tpass\tchecks\tfailed\n";
    for (const auto& r : reports) {
      auto failed = std::count_if(r.trace.begin(), r.trace.end(),
                                  [](const std::string& t) { return t.rfind("FAIL", 0) == 0; });
      auto checks = std::count_if(r.trace.begin(), r.trace.end(), [](const std::string& t) {
        return t.rfind("FAIL", 0) == 0 || t.rfind("ok", 0) == 0;
      });
      out << r.lemma << '\t' << (r.pass ? "pass" : "fail") << '\t' << checks << '\t' << failed << '\n';
    }
  } else {
    std::size_t passed = 0;
    for (const auto& r : reports) {
      passed += r.pass;
      out << (r.pass ? "pass  " : "FAIL  ") << r.lemma << '\n';
      if (verbose || !r.pass) {
        for (const auto& t : r.trace) out << "      " << t << '\n';
        for (const auto& w : r.witnesses) out << "      witness " << w.name << " = " << w.value << '\n';
      }
    }
    out << passed << " of " << reports.size() << " sections pass\n";
  }
  for (const auto& r : reports)
    if (!r.pass) {
      err << "verify: FAIL " << r.lemma << ": " << first_failure(r) << '\n';
      break;
    }
  return all ? 0 : 1;
}

ordered_json table_json(const std::vector<std::string>& classes, const std::vector<Character>& table,
                        const std::vector<std::string>& names) {
  ordered_json j;
  j["classes"] = classes;
  j["characters"] = ordered_json::array();
  for (std::size_t k = 0; k < table.size(); ++k) {
    ordered_json row;
    row["name"] = names[k];
    row["values"] = ordered_json::array();
    for (const auto& v : table[k].values()) row["values"].push_back(cyc_json(v));
    j["characters"].push_back(row);
  }
  return j;
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

int cmd_tables(const RunConfig& cfg, std::ostream& out) {
  const PaperGroups& pg = paper_groups();
  const auto& labels = s5_labels();
  std::vector<std::string> label_names;
  for (const auto& l : labels) label_names.push_back(l.name);

  // S5 in label order, computed and expected
  std::vector<Character> s5_rows;
  std::vector<std::string> s5_names = s5_character_names();
  for (const auto& n : s5_names) {
    const Character& x = s5_character(pg.s5, n);
    std::vector<Cyc> v;
    for (const auto& l : labels) v.push_back(x[pg.pgl_class(l)]);
    s5_rows.emplace_back(pg.pgl, v);
  }
  struct Diff {
    std::string character, cls, computed, expected;
  };
  std::vector<Diff> diffs;
  for (const auto& row : expected_s5_table()) {
    const Character& x = s5_character(pg.s5, row.name);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Cyc& got = x[pg.pgl_class(labels[i])];
      if (!(got == Cyc(static_cast<long>(row.values[i]))))
        diffs.push_back({row.name, labels[i].name, got.str(), std::to_string(row.values[i])});
    }
  }
  const auto na5_names = numbered("chi", pg.na5_table.size());
  const auto gl2_names = numbered("chi", pg.gl2_table.size());

  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["s5"] = table_json(label_names, s5_rows, s5_names);
    ordered_json expected = ordered_json::array();
    for (const auto& row : expected_s5_table()) expected.push_back({{"name", row.name}, {"values", row.values}});
    j["s5"]["expected"] = expected;
    j["s5"]["diff"] = ordered_json::array();
    for (const auto& d : diffs)
      j["s5"]["diff"].push_back(
          {{"character", d.character}, {"class", d.cls}, {"computed", d.computed}, {"expected", d.expected}});
    j["na5"] = table_json(pg.na5_class_names(), pg.na5_table, na5_names);
    j["gl2"] = table_json(pg.gl2_class_names(), pg.gl2_table, gl2_names);
    emit_json(out, j);
    return 0;
  }

  auto rows_of = [](const std::vector<std::string>& classes, const std::vector<Character>& table,
                    const std::vector<std::string>& names) {
    std::vector<std::vector<std::string>> rows{{""}};
    rows[0].insert(rows[0].end(), classes.begin(), classes.end());
    for (std::size_t k = 0; k < table.size(); ++k) {
      std::vector<std::string> r{names[k]};
      for (const auto& v : table[k].values()) r.push_back(v.str());
      rows.push_back(r);
    }
    return rows;
  };
  std::vector<std::vector<std::string>> expected_rows{{""}};
  expected_rows[0].insert(expected_rows[0].end(), label_names.begin(), label_names.end());
  for (const auto& row : expected_s5_table()) {
    std::vector<std::string> r{row.name};
    for (int v : row.values) r.push_back(std::to_string(v));
    expected_rows.push_back(r);
  }

  const std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> blocks = {
      {"S5 = PGL2(F5), computed", rows_of(label_names, s5_rows, s5_names)},
      {"S5, expected", expected_rows},
      {"N.A5 (" + std::to_string(pg.na5->order()) + " elements)",
       rows_of(pg.na5_class_names(), pg.na5_table, na5_names)},
      {"GL2(F5) (" + std::to_string(pg.gl2->order()) + " elements)",
       rows_of(pg.gl2_class_names(), pg.gl2_table, gl2_names)},
  };
  if (cfg.format == OutputFormat::Tsv) {
    for (const auto& [title, rows] : blocks) {
      out << "# " << title << '\n';
      for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "\t" : "") << r[i];
        out << '\n';
      }
    }
    out << "# diff\n";
    for (const auto& d : diffs) out << d.character << '\t' << d.cls << '\t' << d.computed << '\t' << d.expected << '\n';
    return 0;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    out << blocks[b].first << '\n';
    print_table(out, blocks[b].second);
    out << '\n';
    if (b == 1) {
      if (diffs.empty()) out << "diff: computed S5 table equals the expected table\n\n";
      for (const auto& d : diffs)
        out << "diff: " << d.character << " on " << d.cls << ": computed " << d.computed << ", expected "
            << d.expected << "\n";
      if (!diffs.empty()) out << '\n';
    }
  }
  return 0;
}

std::string big_str(const BigInt& b) { return b.get_str(); }

void key_values(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv,
                OutputFormat format) {
  std::size_t w = 0;
  for (const auto& [k, v] : kv) w = std::max(w, k.size());
  for (const auto& [k, v] : kv) {
    if (format == OutputFormat::Tsv) out << k << '\t' << v << '\n';
    else out << pad(k, w + 2) << v << '\n';
  }
}

int cmd_field_profile(const RunConfig& cfg, const Quintic& q, std::ostream& out) {
  auto p = field_profile(q.poly());
  std::vector<std::string> ram;
  for (const auto& r : p.ramified_primes) ram.push_back(big_str(r));
  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["poly"] = q.poly().coeff_list();
    j["polynomial"] = q.poly().str();
    j["disc"] = big_str(p.disc);
    j["signature"] = {p.r1, p.r2};
    j["conjugation"] = p.conjugation.name;
    j["ramified_primes"] = ram;
    j["cofactor"] = big_str(p.cofactor);
    j["irreducibility"] = {{"no_linear_factor_mod", q.certificate().no_linear_factor},
                           {"no_quadratic_factor_mod", q.certificate().no_quadratic_factor}};
    emit_json(out, j);
    return 0;
  }
  std::string ram_s;
  for (const auto& r : ram) ram_s += (ram_s.empty() ? "" : ",") + r;
  std::vector<std::pair<std::string, std::string>> kv = {
      {"polynomial", q.poly().str()},
      {"coefficients", q.poly().coeff_list()},
      {"discriminant", big_str(p.disc)},
      {"signature", "(" + std::to_string(p.r1) + "," + std::to_string(p.r2) + ")"},
      {"conjugation", p.conjugation.name},
      {"ramified_primes", ram_s},
      {"irreducible", "no root mod " + std::to_string(q.certificate().no_linear_factor) +
                          ", no quadratic factor mod " + std::to_string(q.certificate().no_quadratic_factor)}};
  if (p.cofactor != 1) kv.emplace_back("unfactored_cofactor", big_str(p.cofactor));
  key_values(out, kv, cfg.format);
  return 0;
}

int cmd_field_frobenius(const RunConfig& cfg, const Quintic& q, std::ostream& out) {
  auto r = q.frobenius(*cfg.prime);
  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["poly"] = q.poly().coeff_list();
    j["p"] = r.p;
    j["ramified"] = r.ramified;
    j["partition"] = r.partition;
    j["class"] = r.label ? ordered_json(r.label->name) : ordered_json(nullptr);
    emit_json(out, j);
    return 0;
  }
  key_values(out,
             {{"p", std::to_string(r.p)},
              {"partition", r.ramified ? "-" : partition_str(r.partition)},
              {"class", r.ramified ? "ramified" : r.label->name}},
             cfg.format);
  return 0;
}

int cmd_field_hypotheses(const RunConfig& cfg, const Quintic& q, std::ostream& out) {
  auto h = check_theorem_hypotheses(q.poly());
  const std::string frob5 = h.frob5 ? h.frob5->name : "ramified";
  const auto& ev = h.evidence;
  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["poly"] = q.poly().coeff_list();
    j["hypothesis_1"] = {{"statement", "complex conjugation lies in 2B"},
                         {"conjugation", h.profile.conjugation.name},
                         {"pass", h.conjugation_is_2b}};
    j["hypothesis_2"] = {{"statement", "5 is unramified and Frob_5 lies in 2B"},
                         {"frob5", frob5},
                         {"pass", h.five_unramified && h.frob5_is_2b}};
    j["galois_group"] = {
        {"s5_certified", ev.certifies_s5()},
        {"five_cycle_prime", ev.five_cycle_prime ? ordered_json(*ev.five_cycle_prime) : ordered_json(nullptr)},
        {"transposition_prime",
         ev.transposition_prime ? ordered_json(*ev.transposition_prime) : ordered_json(nullptr)},
        {"transposition_class", ev.transposition_label},
        {"search_bound", ev.search_bound}};
    emit_json(out, j);
    return 0;
  }
  std::string gal = ev.certifies_s5()
                        ? "S5 (5-cycle at p=" + std::to_string(*ev.five_cycle_prime) + ", " +
                              ev.transposition_label + " at p=" + std::to_string(*ev.transposition_prime) + ")"
                        : "not certified up to " + std::to_string(ev.search_bound);
  key_values(out,
             {{"hypothesis_1", std::string(h.conjugation_is_2b ? "pass" : "fail") +
                                   " (complex conjugation in " + h.profile.conjugation.name + ")"},
              {"hypothesis_2", std::string(h.five_unramified && h.frob5_is_2b ? "pass" : "fail") +
                                   " (Frob_5 = " + frob5 + ")"},
              {"galois_group", gal}},
             cfg.format);
  return 0;
}

int cmd_field_chebotarev(const RunConfig& cfg, const Quintic& q, std::ostream& out) {
  auto st = chebotarev_stats(q, cfg.pmax, cfg.cache);
  const auto& labels = s5_labels();
  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["poly"] = q.poly().coeff_list();
    j["P"] = st.bound;
    j["primes"] = st.primes_total;
    j["ramified"] = st.ramified;
    j["processed"] = st.processed;
    j["cache"] = cfg.cache ? ordered_json(cfg.cache->string()) : ordered_json(nullptr);
    j["from_cache"] = st.from_cache;
    j["classes"] = ordered_json::array();
    for (std::size_t i = 0; i < labels.size(); ++i)
      j["classes"].push_back({{"class", labels[i].name},
                              {"count", st.counts[i]},
                              {"frequency", st.frequency(i)},
                              {"density", ChebotarevStats::density(i).str()},
                              {"tolerance", st.tolerance(i)},
                              {"within", std::abs(st.frequency(i) - ChebotarevStats::density(i).to_double()) <
                                             st.tolerance(i)}});
    j["within_tolerance"] = st.within_tolerance();
    emit_json(out, j);
  } else {
    std::vector<std::vector<std::string>> rows{{"class", "count", "frequency", "density", "tolerance"}};
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::ostringstream f, d, t;
      f << std::fixed << std::setprecision(6) << st.frequency(i);
      d << std::fixed << std::setprecision(6) << ChebotarevStats::density(i).to_double();
      t << std::fixed << std::setprecision(6) << st.tolerance(i);
      rows.push_back({labels[i].name, std::to_string(st.counts[i]), f.str(), d.str(), t.str()});
    }
    if (cfg.format == OutputFormat::Tsv) {
      for (const auto& r : rows) out << r[0] << '\t' << r[1] << '\t' << r[2] << '\t' << r[3] << '\t' << r[4] << '\n';
    } else {
      out << "P = " << st.bound << ", primes " << st.primes_total << ", ramified " << st.ramified
          << ", processed " << st.processed << (st.from_cache ? " (from cache)" : "") << '\n';
      print_table(out, rows);
      out << (st.within_tolerance() ? "all classes within tolerance" : "some class outside tolerance") << '\n';
    }
  }
  return st.within_tolerance() ? 0 : 1;
}

int cmd_lfun_value(const RunConfig& cfg, const Quintic& q, std::ostream& out) {
  if (!(cfg.s > 1.0))
    throw DomainError("the Euler product is only evaluated for s > 1; got s = " + std::to_string(cfg.s) +
                      " (no analytic continuation is attempted)");
  const Character& a = s5_character(paper_groups().s5, cfg.rep);
  auto v = partial_L(a, frobenius_records(q, cfg.pmax, cfg.cache), cfg.s, cfg.pmax);
  if (cfg.format == OutputFormat::Json) {
    ordered_json j = to_json(v);
    j["rep"] = cfg.rep;
    j["poly"] = q.poly().coeff_list();
    j["primes_used"] = v.primes_used;
    emit_json(out, j);
    return 0;
  }
  std::ostringstream s, tail;
  s << v.s;
  tail << std::scientific << std::setprecision(6) << v.tail_bound;
  key_values(out,
             {{"rep", cfg.rep},
              {"poly", q.poly().coeff_list()},
              {"s", s.str()},
              {"P", std::to_string(v.bound)},
              {"primes_used", std::to_string(v.primes_used)},
              {"value", v.value},
              {"tail_bound", tail.str()},
              {"digits", std::to_string(v.digits)}},
             cfg.format);
  return 0;
}

int cmd_lfun_phi_average(const RunConfig& cfg, const Quintic& q, std::ostream& out) {
  auto avg = phi_average(paper_groups(), frobenius_records(q, cfg.pmax, cfg.cache), cfg.nu, cfg.phi_source);
  Rat v = avg.value();
  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["poly"] = q.poly().coeff_list();
    j["P"] = cfg.pmax;
    j["nu"] = to_string(cfg.nu);
    j["phi_source"] = to_string(cfg.phi_source);
    j["processed"] = avg.processed;
    j["sum"] = avg.sum.str();
    j["value"] = v.str();
    j["approx"] = v.to_double();
    emit_json(out, j);
    return 0;
  }
  std::ostringstream approx;
  approx << std::fixed << std::setprecision(6) << v.to_double();
  key_values(out,
             {{"poly", q.poly().coeff_list()},
              {"P", std::to_string(cfg.pmax)},
              {"nu", to_string(cfg.nu)},
              {"phi_source", to_string(cfg.phi_source)},
              {"processed", std::to_string(avg.processed)},
              {"sum", avg.sum.str()},
              {"value", approx.str()}},
             cfg.format);
  return 0;
}

int cmd_lfun_mu_omega(const RunConfig& cfg, std::ostream& out) {
  auto mu = mu_omega_partial(cfg.omega, cfg.s);
  const std::string note = "Omega is a hypothetical prime set supplied by the user";
  if (cfg.format == OutputFormat::Json) {
    ordered_json j;
    j["primes"] = cfg.omega;
    j["s"] = cfg.s;
    j["value"] = mu.value;
    j["approx"] = mu.value_approx;
    j["note"] = note;
    emit_json(out, j);
    return 0;
  }
  std::string primes;
  for (auto p : cfg.omega) primes += (primes.empty() ? "" : ",") + std::to_string(p);
  std::ostringstream s;
  s << cfg.s;
  key_values(out, {{"primes", primes}, {"s", s.str()}, {"value", mu.value}, {"note", note}}, cfg.format);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format = "text", nu = "psi-eta", phi_source = "computed";
  std::optional<std::string> cache_path;
  bool no_cache = false, verbose = false;

  CLI::App app{"Verifier and calculator for S5 Artin representations and quintic fields", "s5artin"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run every lemma check; exit 0 iff all pass");
  verify->add_flag("--verbose,-v", verbose, "Print the full trace of every section");
  verify->add_option("--inject-fault", cfg.inject_fault)->check(CLI::IsMember({"corrupt-rho5"}))->group("");

  auto* tables = app.add_subcommand("tables", "Print the S5, N.A5 and GL2(F5) character tables");

  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("--poly", cfg.polynomial, "Coefficients c0,...,c5, low degree first")->capture_default_str();
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache", cache_path, "Frobenius cache file (default: under S5ARTIN_CACHE_DIR)");
    sub->add_flag("--no-cache", no_cache, "Do not read or write a cache file");
  };
  auto* field = app.add_subcommand("field", "Number field data for a monic quintic");
  field->require_subcommand(1);
  field->fallthrough();
  add_poly(field);
  auto* f_profile = field->add_subcommand("profile", "Discriminant, signature, complex conjugation");
  auto* f_frob = field->add_subcommand("frobenius", "Frobenius class at one prime");
  std::uint32_t prime = 0;
  f_frob->add_option("--p", prime, "Prime")->required();
  auto* f_cheb = field->add_subcommand("chebotarev", "Frobenius class frequencies for p <= pmax");
  f_cheb->add_option("--pmax", cfg.pmax, "Prime bound")->capture_default_str();
  add_cache(f_cheb);
  auto* f_hyp = field->add_subcommand("hypotheses", "Check the complex conjugation and Frob_5 hypotheses");

  auto* lfun = app.add_subcommand("lfun", "Partial Euler products and phi averages");
  lfun->require_subcommand(1);
  lfun->fallthrough();
  add_poly(lfun);
  lfun->add_option("--rep", cfg.rep, "S5 representation")
      ->check(CLI::IsMember(s5_character_names()))
      ->capture_default_str();
  lfun->add_option("--s", cfg.s, "Real s")->capture_default_str();
  lfun->add_option("--pmax", cfg.pmax, "Prime bound")->capture_default_str();
  add_cache(lfun);
  auto* l_value = lfun->add_subcommand("value", "Partial L-value over unramified p <= pmax (s > 1)");
  auto* l_phi = lfun->add_subcommand("phi-average", "Mean of the forced phi over unramified p <= pmax");
  l_phi->add_option("--nu", nu, "psi-inv or psi-inv-eta (also psi, psi-eta)")->capture_default_str();
  l_phi->add_option("--phi-source", phi_source, "computed: phi from its definition; printed: reference table values")
      ->check(CLI::IsMember({"computed", "printed"}))
      ->capture_default_str();
  auto* l_mu = lfun->add_subcommand("mu-omega", "prod over a hypothetical prime set of ((1+p^-s)/(1-p^-s))^2");
  l_mu->add_option("--primes", cfg.omega, "Comma-separated primes")->delimiter(',')->required();

  for (auto* sub : {verify, tables, field, f_profile, f_frob, f_cheb, f_hyp, lfun, l_value, l_phi, l_mu})
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.format = format == "json" ? OutputFormat::Json : format == "tsv" ? OutputFormat::Tsv : OutputFormat::Text;
    cfg.nu = parse_nu(nu);
    cfg.phi_source = parse_phi_source(phi_source);
    if (f_frob->parsed()) cfg.prime = prime;

    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err, verbose);
    }
    if (tables->parsed()) {
      cfg.command = "tables";
      return cmd_tables(cfg, out);
    }
    if (l_mu->parsed()) {
      cfg.command = "lfun mu-omega";
      return cmd_lfun_mu_omega(cfg, out);
    }
    if (l_value->parsed() && !(cfg.s > 1.0))
      throw DomainError("the Euler product is only evaluated for s > 1; got s = " + std::to_string(cfg.s) +
                        " (no analytic continuation is attempted)");

    Quintic q(parse_coefficients(cfg.polynomial));
    if (!no_cache) {
      if (cache_path) cfg.cache = std::filesystem::path(*cache_path);
      else if (auto dir = default_cache_dir()) cfg.cache = cache_file(*dir, q.poly());
    }
    if (f_profile->parsed()) return cmd_field_profile(cfg, q, out);
    if (f_frob->parsed()) return cmd_field_frobenius(cfg, q, out);
    if (f_hyp->parsed()) return cmd_field_hypotheses(cfg, q, out);
    if (f_cheb->parsed()) return cmd_field_chebotarev(cfg, q, out);
    if (l_value->parsed()) return cmd_lfun_value(cfg, q, out);
    if (l_phi->parsed()) return cmd_lfun_phi_average(cfg, q, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << "error: no command given\n";
  return 2;
}

}  // namespace s5artin
