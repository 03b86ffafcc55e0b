#include "goldbach/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldbach {

void require_coverage(const PrimeTable& table, std::uint64_t E) {
  require_even_target(E);
  if (E - 1 > table.limit()) {
    throw std::out_of_range("E=" + std::to_string(E) + " needs a sieve covering " +
                            std::to_string(E - 1) + ", table limit is " +
                            std::to_string(table.limit()));
  }
}

std::uint64_t g1_count(const DivisorProfile& profile) {
  const std::uint64_t E = profile.E;
  require_even_target(E);
  std::vector<std::uint8_t> alive(E, 1);
  alive[0] = 0;
  for (const auto& d : profile.divisors) {
    const std::uint64_t p = d.p;
    for (std::uint64_t n = p; n < E; n += p) alive[n] = 0;
    // p | (E - n)  <=>  n == E (mod p)
    const std::uint64_t r = E % p == 0 ? p : E % p;
    for (std::uint64_t n = r; n < E; n += p) alive[n] = 0;
  }
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n < E; ++n) count += alive[n];
  return count;
}

namespace {

// Number of odd primes q in [lo, hi] with E - q prime. Branch-free in the hot loop.
std::uint64_t pair_hits(const PrimeTable& table, std::uint64_t E, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t* bits = table.odd_bits().data();
  std::uint64_t hits = 0;
  table.for_each_odd_prime(lo, hi, [&](std::uint64_t q) {
    const std::uint64_t i = (E - q) >> 1;
    hits += (bits[i >> 6] >> (i & 63)) & 1U;
  });
  return hits;
}

std::uint64_t sieve_bound(const PrimeTable& table, std::uint64_t E) {
  return E == 4 ? 2 : table.prev_prime_below(isqrt(E - 1) + 1);
}

// N is counted when N and E - N are both 1 or a prime above P(m). For q > P(m)
// with q <= E/2, E - q >= E/2 > P(m), so only primality of E - q matters.
std::uint64_t g1_from_hits(const PrimeTable& table, std::uint64_t E, std::uint64_t p_m,
                           std::uint64_t large_hits) {
  const std::uint64_t half = E / 2;
  const std::uint64_t ends = table.test(E - 1) ? 2 : 0;  // N = 1 and N = E - 1
  return ends + 2 * large_hits - ((half > p_m && table.test(half)) ? 1 : 0);
}

}  // namespace

std::uint64_t g1_count(const PrimeTable& table, std::uint64_t E) {
  require_coverage(table, E);
  const std::uint64_t p_m = sieve_bound(table, E);
  return g1_from_hits(table, E, p_m, pair_hits(table, E, p_m + 1, E / 2));
}

std::uint64_t g2_count(const PrimeTable& table, std::uint64_t E) {
  require_coverage(table, E);
  if (E == 4) return 1;  // 2 + 2; the only even prime summand
  const std::uint64_t half = E / 2;
  // q = E/2 pairs with itself and is an ordered pair only once.
  return 2 * pair_hits(table, E, 3, half) - (table.test(half) ? 1 : 0);
}

std::uint64_t gp_count(const PrimeTable& table, std::uint64_t E) {
  return (g2_count(table, E) + 1) / 2;
}

Rational goldbach_ratio(const PartitionStats& stats) {
  if (stats.NPE == 0) throw std::domain_error("goldbach_ratio: NPE is zero");
  return Rational(static_cast<std::int64_t>(stats.GP), static_cast<std::int64_t>(stats.NPE));
}

PartitionStats compute_stats(const PrimeTable& table, std::uint64_t E, bool include_g1) {
  require_coverage(table, E);
  PartitionStats s;
  s.E = E;
  if (E == 4) {
    s.G1 = include_g1 ? g1_count(table, E) : 0;
    s.G2 = g2_count(table, E);
  } else {
    const std::uint64_t p_m = sieve_bound(table, E);
    const std::uint64_t half = E / 2;
    const std::uint64_t small = pair_hits(table, E, 3, std::min(p_m, half));
    const std::uint64_t large = pair_hits(table, E, p_m + 1, half);
    if (include_g1) s.G1 = g1_from_hits(table, E, p_m, large);
    s.G2 = 2 * (small + large) - (table.test(half) ? 1 : 0);
  }
  s.GP = (s.G2 + 1) / 2;
  s.PE = largest_prime_below(table, E);
  s.NPE = prime_count_up_to(table, s.PE);
  s.GR = goldbach_ratio(s);

  const bool half_prime = table.test(E / 2);
  if (((s.G2 & 1) == 1) != half_prime) {
    throw std::logic_error("G2 parity disagrees with primality of E/2 at E=" + std::to_string(E));
  }
  if (s.GR > Rational(1, 2)) {
    throw std::logic_error("Goldbach ratio above 1/2 at E=" + std::to_string(E));
  }
  return s;
}

}  // namespace goldbach
