#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "s5artin/quintic.hpp"
#include "s5artin/report.hpp"
#include "s5artin/s5paper.hpp"

namespace s5artin {

/// Dense polynomial in X with rational coefficients, low degree first.
using RatPoly = std::vector<Rat>;
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_trim(RatPoly a);
/// "1 - 2*X + X^2"
std::string poly_str(const RatPoly& a);

/// prod over eigenvalues lambda of (1 - lambda X) on the labelled class.
struct LocalFactor {
  ClassLabel label;
  std::vector<Cyc> coeffs;  // coeffs[0] = 1, degree = character degree

  /// Throws DomainError unless every coefficient is rational.
  RatPoly rational() const;
  std::string str() const;
};

/// S5 label of a class of PGL2(F5) from element order and sign on P^1(F5).
ClassLabel pgl_label_of_class(const Group& pgl, std::size_t c);

/// `a` must be a character of PGL2(F5).
LocalFactor local_factor(const Character& a, const ClassLabel& label);
/// prod (1 - t X) for a multiset of roots of unity.
std::vector<Cyc> factor_from_eigenvalues(const EigenMultiset& e);

constexpr int kAccumulatorDigits = 64;

struct PartialLValue {
  double s = 0;
  std::uint64_t bound = 0;
  std::string value;        // decimal, 40 significant digits
  double value_approx = 0;
  std::string log_value;    // decimal, 40 significant digits
  double tail_bound = 0;    // d P^(1-s) / ((s-1) ln P)
  int digits = kAccumulatorDigits;
  std::uint64_t primes_used = 0;
};

/// prod over unramified p <= bound of 1 / local_factor(a, Frob_p)(p^-s), summed in
/// log space. Throws DomainError for s <= 1.
PartialLValue partial_L(const Character& a, const Quintic& q, double s, std::uint64_t bound);
/// Same over precomputed Frobenius records.
PartialLValue partial_L(const Character& a, const std::vector<FrobeniusRecord>& records, double s,
                        std::uint64_t bound);
nlohmann::ordered_json to_json(const PartialLValue& v);

struct PhiAverage {
  Rat sum;
  std::uint64_t processed = 0;
  Rat value() const { return processed == 0 ? Rat(0) : sum / Rat(static_cast<long>(processed)); }
};
/// Computed: phi from its definition (forced_phi). Printed: the per-class values
/// from the reference table, which puts +2 on 6A under psi^-1 eta.
enum class PhiSource { Computed, Printed };
std::string to_string(PhiSource s);
/// Throws DomainError unless "computed" or "printed".
PhiSource parse_phi_source(const std::string& text);

/// Mean of the forced phi over unramified p <= bound.
PhiAverage phi_average(const PaperGroups& pg, const std::vector<FrobeniusRecord>& records,
                       NuHypothesis nu, PhiSource source = PhiSource::Computed);
PhiAverage phi_average(const PaperGroups& pg, const Quintic& q, std::uint64_t bound,
                       NuHypothesis nu, PhiSource source = PhiSource::Computed);

/// prod over omega of ((1 + p^-s) / (1 - p^-s))^2, as a decimal string and a double.
/// Throws DomainError for s <= 0 or a non-prime entry.
struct MuOmega {
  std::string value;
  double value_approx;
};
MuOmega mu_omega_partial(const std::vector<std::uint32_t>& omega, double s);

LemmaReport omega_factor_identity_check(const PaperGroups& pg);
/// Throws DomainError for n_max < 1.
LemmaReport taylor_positivity_check(int n_max);
/// Coefficients of (1 + x)^2 / (1 - x)^2 up to x^n_max.
std::vector<Rat> taylor_coefficients(int n_max);
LemmaReport verify_zeta_H_factorization(const PaperGroups& pg);

/// Decomposition of perm_F (Borel of order 20) into named S5 irreducibles.
std::vector<std::pair<std::string, Rat>> borel_decomposition(const PaperGroups& pg);

}  // namespace s5artin
