#include "s5artin/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "s5artin/error.hpp"

namespace s5artin {
namespace {

constexpr std::uint64_t kSegmentOdds = 1u << 18;

// Odd-only Eratosthenes: slot i stands for 2i + 1.
std::vector<std::uint32_t> flat_sieve(std::uint64_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  out.push_back(2);
  const std::uint64_t slots = (bound + 1) / 2;
  std::vector<std::uint8_t> composite(slots, 0);
  for (std::uint64_t i = 1; i < slots; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    out.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t m = p * p; m <= bound; m += 2 * p) composite[m / 2] = 1;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

std::vector<std::uint32_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint32_t> out;
  if (hi > UINT32_MAX) throw DomainError("primes_in_range: bound exceeds 32 bits");
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (lo == 2) out.push_back(2);
  const auto base = flat_sieve(isqrt(hi));

  std::uint64_t start = lo | 1;  // first odd >= lo
  if (start < 3) start = 3;
  std::vector<std::uint8_t> composite;
  for (std::uint64_t seg = start; seg <= hi; seg += 2 * kSegmentOdds) {
    const std::uint64_t seg_end = std::min(hi, seg + 2 * kSegmentOdds - 1);
    const std::uint64_t slots = (seg_end - seg) / 2 + 1;
    composite.assign(slots, 0);
    for (std::uint32_t p : base) {
      if (p == 2) continue;
      const std::uint64_t pp = std::uint64_t(p) * p;
      if (pp > seg_end) break;
      std::uint64_t first = std::max(pp, (seg + p - 1) / p * p);
      if (first % 2 == 0) first += p;
      for (std::uint64_t m = first; m <= seg_end; m += 2 * p) composite[(m - seg) / 2] = 1;
    }
    for (std::uint64_t i = 0; i < slots; ++i)
      if (!composite[i]) out.push_back(static_cast<std::uint32_t>(seg + 2 * i));
  }
  return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t bound) {
  if (bound <= kFlatSieveLimit) return flat_sieve(bound);
  return primes_in_range(2, bound);
}

}  // namespace s5artin
