#pragma once

// Exact Goldbach counts for one even E, by enumeration.
//
//   G1  N in [1, E-1] with N and E-N indivisible by every P(i)
//   G2  primes q < E with E-q prime (E/2 counted once when prime)
//   GP  unordered prime pairs {q, E-q} = ceil(G2 / 2)
//   GR  GP / NPE, NPE = pi(PE), PE = largest prime < E

#include <cstdint>

#include "goldbach/prime_table.hpp"
#include "goldbach/rational.hpp"
#include "goldbach/symmetry.hpp"

namespace goldbach {

struct PartitionStats {
  std::uint64_t E = 0;
  std::uint64_t G1 = 0;
  std::uint64_t G2 = 0;
  std::uint64_t GP = 0;
  std::uint64_t PE = 0;
  std::uint64_t NPE = 0;
  Rational GR;

  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

// Per-divisor filtering over [1, E-1]; O(E log log E) time and O(E) memory.
std::uint64_t g1_count(const DivisorProfile& profile);

// G1 from the prime table: an N < E with no prime factor <= P(m) is 1 or a
// prime above P(m). O(pi(E)) time.
std::uint64_t g1_count(const PrimeTable& table, std::uint64_t E);

// Both require E - 1 <= table.limit(); std::out_of_range otherwise.
std::uint64_t g2_count(const PrimeTable& table, std::uint64_t E);
std::uint64_t gp_count(const PrimeTable& table, std::uint64_t E);

Rational goldbach_ratio(const PartitionStats& stats);

// Fills every field and checks GP = ceil(G2/2), (G2 odd <=> E/2 prime) and
// GR <= 1/2. A breach throws std::logic_error. With include_g1 = false the
// G1 enumeration is skipped and G1 is left at 0.
PartitionStats compute_stats(const PrimeTable& table, std::uint64_t E, bool include_g1 = true);

void require_coverage(const PrimeTable& table, std::uint64_t E);

}  // namespace goldbach
