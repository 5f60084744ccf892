#include "s5artin/quintic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "s5artin/error.hpp"
#include "s5artin/finite_field.hpp"
#include "s5artin/sieve.hpp"

namespace s5artin {

namespace {

bool is_prime32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool has_subsum(const std::vector<int>& parts, int target) {
  std::vector<bool> reach(target + 1, false);
  reach[0] = true;
  for (int x : parts)
    for (int s = target; s >= x; --s)
      if (reach[s - x]) reach[s] = true;
  return reach[target];
}

FrobeniusRecord record_at(const IntPoly& f, const BigInt& disc, std::uint32_t p) {
  FrobeniusRecord r{p};
  if (mpz_fdiv_ui(disc.get_mpz_t(), p) == 0) {
    r.ramified = true;
    return r;
  }
  r.partition = factor_degrees_mod_p(f, p, disc);
  r.label = cycle_type_label(r.partition);
  return r;
}

std::string cache_header(const IntPoly& f) {
  return "# s5artin frobenius cache v" + std::to_string(kCacheFormatVersion) +
         " poly=" + f.coeff_list();
}

std::string cache_line(const FrobeniusRecord& r) {
  if (r.ramified) return std::to_string(r.p) + "\tramified\t-";
  return std::to_string(r.p) + "\t" + partition_str(r.partition) + "\t" + r.label->name;
}

std::optional<FrobeniusRecord> parse_cache_line(const std::string& line) {
  std::istringstream in(line);
  std::string p, part, label;
  if (!std::getline(in, p, '\t') || !std::getline(in, part, '\t') || !std::getline(in, label))
    return std::nullopt;
  try {
    FrobeniusRecord r{static_cast<std::uint32_t>(std::stoul(p))};
    if (part == "ramified") {
      if (label != "-") return std::nullopt;
      r.ramified = true;
      return r;
    }
    std::istringstream ps(part);
    std::string x;
    while (std::getline(ps, x, ',')) r.partition.push_back(std::stoi(x));
    r.label = cycle_type_label(r.partition);
    if (r.label->name != label) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// Records cached for f, if the file is intact and lists exactly the first
/// primes in order; otherwise nothing.
std::optional<std::vector<FrobeniusRecord>> read_cache(const std::filesystem::path& path,
                                                       const IntPoly& f) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != cache_header(f)) return std::nullopt;
  std::vector<FrobeniusRecord> out;
  while (std::getline(in, line)) {
    auto r = parse_cache_line(line);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  if (!out.empty()) {
    auto primes = primes_up_to(out.back().p);
    if (primes.size() != out.size()) return std::nullopt;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (primes[i] != out[i].p) return std::nullopt;
  }
  return out;
}

}  // namespace

IntPoly default_quintic() { return IntPoly{1, 1, -1, -1, 0, 1}; }

IntPoly parse_coefficients(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw DomainError("empty coefficient in '" + text + "'");
    std::string s = item.substr(b, e - b + 1);
    if (s.front() == '+') s.erase(0, 1);
    BigInt v;
    if (s.empty() || v.set_str(s, 10) != 0)
      throw DomainError("bad coefficient '" + item + "' in '" + text + "'");
    coeffs.push_back(v);
  }
  if (coeffs.empty()) throw DomainError("no coefficients given");
  return IntPoly(coeffs);
}

std::string partition_str(const std::vector<int>& partition) {
  std::string s;
  for (int x : partition) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Quintic::Quintic(IntPoly f) : f_(std::move(f)) {
  if (f_.degree() != 5 || !f_.is_monic())
    throw DomainError("expected a monic quintic, got " + f_.str());
  disc_ = disc_quintic(f_);
  if (disc_ == 0) throw DomainError(f_.str() + " is not squarefree (discriminant 0)");

  std::optional<std::uint32_t> linear, quadratic;
  for (std::uint32_t p : primes_up_to(100'000)) {
    if (divides_disc(p)) continue;
    auto parts = factor_degrees_mod_p(f_, p, disc_);
    if (!linear && !has_subsum(parts, 1)) linear = p;
    if (!quadratic && !has_subsum(parts, 2)) quadratic = p;
    if (linear && quadratic) break;
  }
  if (!linear || !quadratic)
    throw DomainError(f_.str() + " is reducible over Q (no prime up to 100000 rules out a " +
                      std::string(!linear ? "linear" : "quadratic") + " factor)");
  cert_ = {*linear, *quadratic};
}

bool Quintic::divides_disc(std::uint32_t p) const {
  return mpz_fdiv_ui(disc_.get_mpz_t(), p) == 0;
}

FrobeniusRecord Quintic::frobenius(std::uint32_t p) const {
  if (!is_prime32(p)) throw DomainError(std::to_string(p) + " is not prime");
  return record_at(f_, disc_, p);
}

FrobeniusRecord frobenius_class(const IntPoly& f, std::uint32_t p) {
  return Quintic(f).frobenius(p);
}

FieldProfile field_profile(const IntPoly& f) {
  Quintic q(f);
  FieldProfile out;
  out.f = f;
  out.disc = q.disc();
  out.r1 = real_root_count(f);
  out.r2 = (5 - out.r1) / 2;
  std::vector<int> type(out.r1, 1);
  type.insert(type.end(), out.r2, 2);
  out.conjugation = cycle_type_label(type);

  BigInt rest = abs(q.disc());
  for (std::uint32_t p : primes_up_to(out.trial_bound)) {
    BigInt pp = BigInt(p) * p;
    if (pp > rest) break;
    if (mpz_fdiv_ui(rest.get_mpz_t(), p) != 0) continue;
    out.ramified_primes.push_back(BigInt(p));
    while (mpz_fdiv_ui(rest.get_mpz_t(), p) == 0) rest /= p;
  }
  if (rest > 1) {
    BigInt bound2 = BigInt(out.trial_bound) * out.trial_bound;
    if (rest < bound2) out.ramified_primes.push_back(rest);  // no factor below its square root
    else out.cofactor = rest;
  }
  return out;
}

HypothesisReport check_theorem_hypotheses(const IntPoly& f) {
  HypothesisReport r;
  r.profile = field_profile(f);
  Quintic q(f);
  r.conjugation_is_2b = r.profile.conjugation.name == "2B";
  auto f5 = q.frobenius(5);
  r.five_unramified = !f5.ramified;
  r.frob5 = f5.label;
  r.frob5_is_2b = f5.label && f5.label->name == "2B";

  for (std::uint32_t bound : {10'000u, 1'000'000u}) {
    r.evidence.search_bound = bound;
    for (std::uint32_t p : primes_up_to(bound)) {
      if (q.divides_disc(p)) continue;
      auto rec = record_at(f, q.disc(), p);
      const std::string& name = rec.label->name;
      if (!r.evidence.five_cycle_prime && name == "5A") r.evidence.five_cycle_prime = p;
      if (!r.evidence.transposition_prime && (name == "2A" || name == "6A")) {
        r.evidence.transposition_prime = p;
        r.evidence.transposition_label = name;
      }
      if (r.evidence.certifies_s5()) return r;
    }
  }
  return r;
}

double ChebotarevStats::frequency(std::size_t i) const {
  return processed == 0 ? 0.0 : static_cast<double>(counts[i]) / static_cast<double>(processed);
}

Rat ChebotarevStats::density(std::size_t i) {
  return Rat(s5_class_sizes().at(i)) / Rat(120);
}

double ChebotarevStats::tolerance(std::size_t i) const {
  double n = static_cast<double>(std::max<std::uint64_t>(primes_total, 1));
  return 3.0 * std::sqrt(density(i).to_double() / n) + 0.005;
}

bool ChebotarevStats::within_tolerance() const {
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (!(std::abs(frequency(i) - density(i).to_double()) < tolerance(i))) return false;
  return true;
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const IntPoly& f) {
  std::string name = f.coeff_list();
  std::replace(name.begin(), name.end(), ',', '_');
  return dir / ("frobenius_" + name + ".tsv");
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* v = std::getenv("S5ARTIN_CACHE_DIR");
  if (!v || !*v) return std::nullopt;
  return std::filesystem::path(v);
}

std::vector<FrobeniusRecord> frobenius_records(const Quintic& q, std::uint64_t bound,
                                               const std::optional<std::filesystem::path>& cache,
                                               bool* from_cache) {
  auto primes = primes_up_to(bound);
  std::vector<FrobeniusRecord> out;
  std::optional<std::vector<FrobeniusRecord>> cached;
  if (cache) cached = read_cache(*cache, q.poly());
  if (cached) {
    for (const auto& r : *cached) {
      if (r.p > bound) break;
      out.push_back(r);
    }
  }
  const std::size_t reused = out.size();
  if (from_cache) *from_cache = reused > 0 && reused == primes.size();
  for (std::size_t i = out.size(); i < primes.size(); ++i)
    out.push_back(record_at(q.poly(), q.disc(), primes[i]));

  if (cache) {
    const bool append = cached.has_value();
    const std::size_t have = append ? cached->size() : 0;
    if (out.size() > have || !append) {
      if (cache->has_parent_path()) std::filesystem::create_directories(cache->parent_path());
      std::ofstream file(*cache, append ? std::ios::app : std::ios::trunc);
      if (!file) throw DomainError("cannot write cache file " + cache->string());
      if (!append) file << cache_header(q.poly()) << '\n';
      for (std::size_t i = have; i < out.size(); ++i) file << cache_line(out[i]) << '\n';
    }
  }
  return out;
}

ChebotarevStats chebotarev_stats(const Quintic& q, std::uint64_t bound,
                                 const std::optional<std::filesystem::path>& cache) {
  ChebotarevStats s;
  s.bound = bound;
  auto records = frobenius_records(q, bound, cache, &s.from_cache);
  s.primes_total = records.size();
  for (const auto& r : records) {
    if (r.ramified) {
      ++s.ramified;
      continue;
    }
    ++s.processed;
    ++s.counts[label_index(*r.label)];
  }
  return s;
}

}  // namespace s5artin
