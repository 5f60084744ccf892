#pragma once

#include <cstdint>
#include <vector>

namespace s5artin {

/// Flat sieve up to this bound; segmented above.
inline constexpr std::uint64_t kFlatSieveLimit = 1'000'000;

/// All primes <= bound in ascending order. Empty for bound < 2.
std::vector<std::uint32_t> primes_up_to(std::uint64_t bound);

/// Segmented sieve over [lo, hi], independent of the flat path above the limit.
std::vector<std::uint32_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

}  // namespace s5artin
