#pragma once

#include <cstdint>
#include <optional>

namespace towers {

// Shared append-only table of primes in ascending order, grown by trial
// division on demand. Indices are 1-based: prime(1) == 2. All entry points
// lock internally, so concurrent readers are fine.
class PrimeTable {
 public:
  [[nodiscard]] static std::uint64_t prime(std::size_t index);

  // Position of p in the prime sequence, nullopt when p is not prime.
  // Counting requires every prime below p, so expect this to be slow for
  // large arguments.
  [[nodiscard]] static std::optional<std::size_t> index_of(std::uint64_t p);

  // Deterministic for the full 64-bit range (Miller-Rabin with fixed bases).
  [[nodiscard]] static bool is_prime(std::uint64_t n);
};

}  // namespace towers
