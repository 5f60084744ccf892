#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "s5artin/groups.hpp"
#include "s5artin/polynomial.hpp"
#include "s5artin/rat.hpp"

namespace s5artin {

/// x^5 - x^3 - x^2 + x + 1
IntPoly default_quintic();
/// Parses "c0,c1,...,c5" (low to high).
IntPoly parse_coefficients(const std::string& text);

struct FrobeniusRecord {
  std::uint32_t p;
  bool ramified = false;
  std::vector<int> partition;       // empty when ramified
  std::optional<ClassLabel> label;  // absent when ramified
};

/// Primes witnessing that f has no factor of degree 1 and none of degree 2.
struct IrreducibilityCertificate {
  std::uint32_t no_linear_factor;     // partition mod p has no part summing to 1
  std::uint32_t no_quadratic_factor;  // partition mod p has no sub-multiset summing to 2
};

/// A monic squarefree quintic with certified irreducibility.
class Quintic {
 public:
  /// Throws DomainError unless f is monic of degree 5 with nonzero discriminant
  /// and irreducibility is certified by splitting data mod small primes.
  explicit Quintic(IntPoly f);

  const IntPoly& poly() const { return f_; }
  const BigInt& disc() const { return disc_; }
  const IrreducibilityCertificate& certificate() const { return cert_; }
  bool divides_disc(std::uint32_t p) const;
  FrobeniusRecord frobenius(std::uint32_t p) const;

 private:
  IntPoly f_;
  BigInt disc_;
  IrreducibilityCertificate cert_{};
};

/// Frobenius data at p. Ramified primes come back flagged, not as errors.
FrobeniusRecord frobenius_class(const IntPoly& f, std::uint32_t p);

constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

struct FieldProfile {
  IntPoly f;
  BigInt disc;
  int r1 = 0;
  int r2 = 0;
  ClassLabel conjugation;
  std::vector<BigInt> ramified_primes;  // prime factors of disc up to the trial bound
  BigInt cofactor{1};                   // part of |disc| left unfactored (1 if none)
  std::uint32_t trial_bound = kTrialDivisionBound;
};

FieldProfile field_profile(const IntPoly& f);

/// Observed splitting types that force the Galois group to be S5: a 5-cycle
/// together with a transposition (2A) or an element of type 6A, whose cube is one.
struct GaloisEvidence {
  std::optional<std::uint32_t> five_cycle_prime;
  std::optional<std::uint32_t> transposition_prime;
  std::string transposition_label;
  std::uint32_t search_bound = 0;
  bool certifies_s5() const { return five_cycle_prime && transposition_prime; }
};

struct HypothesisReport {
  FieldProfile profile;
  bool conjugation_is_2b = false;  // hypothesis (1)
  bool five_unramified = false;
  std::optional<ClassLabel> frob5;
  bool frob5_is_2b = false;        // hypothesis (2)
  GaloisEvidence evidence;
};

HypothesisReport check_theorem_hypotheses(const IntPoly& f);

struct ChebotarevStats {
  std::uint64_t bound = 0;
  std::uint64_t primes_total = 0;
  std::uint64_t ramified = 0;
  std::uint64_t processed = 0;
  std::array<std::uint64_t, 7> counts{};  // in s5_labels() order
  bool from_cache = false;

  double frequency(std::size_t i) const;
  static Rat density(std::size_t i);
  /// 3 sqrt(density / pi(P)) + 0.005
  double tolerance(std::size_t i) const;
  bool within_tolerance() const;
};

/// Class counts over unramified p <= bound. With a cache path, records are read
/// from and appended to that file.
ChebotarevStats chebotarev_stats(const Quintic& q, std::uint64_t bound,
                                 const std::optional<std::filesystem::path>& cache = std::nullopt);

/// Frobenius records for every prime p <= bound, ramified ones flagged.
std::vector<FrobeniusRecord> frobenius_records(const Quintic& q, std::uint64_t bound,
                                               const std::optional<std::filesystem::path>& cache =
                                                   std::nullopt,
                                               bool* from_cache = nullptr);

/// Cache file name for a polynomial inside `dir`.
std::filesystem::path cache_file(const std::filesystem::path& dir, const IntPoly& f);
/// Directory from S5ARTIN_CACHE_DIR, if set.
std::optional<std::filesystem::path> cache_dir_from_env();
constexpr int kCacheFormatVersion = 1;

std::string partition_str(const std::vector<int>& partition);

}  // namespace s5artin
