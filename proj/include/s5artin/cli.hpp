#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "s5artin/lfun.hpp"

namespace s5artin {

enum class OutputFormat { Text, Json, Tsv };

/// Parsed and validated command line.
struct RunConfig {
  std::string command;     // "verify", "tables", "field profile", "lfun value", ...
  std::string polynomial = "1,1,-1,-1,0,1";
  std::uint64_t pmax = 100'000;
  std::optional<std::uint32_t> prime;
  double s = 2.0;
  std::string rep = "trivial";
  NuHypothesis nu = NuHypothesis::PsiInverseEta;
  PhiSource phi_source = PhiSource::Computed;
  std::vector<std::uint32_t> omega;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::filesystem::path> cache;  // resolved cache file, if caching
  std::string inject_fault;
};

/// Names of the verify sections, in run order.
const std::vector<std::string>& verify_section_names();
/// Runs every section against `pg`.
std::vector<LemmaReport> verify_suite(const PaperGroups& pg);

/// Default cache directory: S5ARTIN_CACHE_DIR, else $XDG_CACHE_HOME/s5artin,
/// else $HOME/.cache/s5artin. Empty when none of these is set.
std::optional<std::filesystem::path> default_cache_dir();

/// Exit status: 0 success, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s5artin
