#pragma once

// E/2 symmetry of the sieving divisors P(i) <= sqrt(E-1).
//
// A divisor p cancels N and E-N on the two lines 1..E-1 and E-1..1. For odd
// p dividing E/2 the cancellations coincide (one lost couple per p), otherwise
// they are offset (two lost couples per p). p = 2 always loses one in two.

#include <cstdint>
#include <vector>

#include "goldbach/prime_table.hpp"
#include "goldbach/rational.hpp"

namespace goldbach {

struct Divisor {
  std::uint64_t p = 0;
  bool symmetric = false;
  Rational frequency;  // fraction of couples (N, E-N) surviving cancellation by p

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

struct DivisorProfile {
  std::uint64_t E = 0;
  std::vector<Divisor> divisors;  // ascending by p; divisors.front().p == 2
  std::uint64_t p_m = 0;          // largest divisor

  std::uint64_t half() const { return E / 2; }
};

// True iff p = 2 or p divides E/2. Throws std::domain_error unless p is a
// prime in divisor_set(E).
bool classify_divisor(std::uint64_t E, std::uint64_t p);

// 1/2 for p = 2, (p-1)/p for a symmetric odd p, (p-2)/p otherwise.
Rational remainder_frequency(std::uint64_t E, std::uint64_t p);

DivisorProfile build_profile(const PrimeTable& table, std::uint64_t E);

// "P(i)-prime": p does not divide n. 1 qualifies, p itself does not.
constexpr bool is_pi_prime(std::uint64_t n, std::uint64_t p) { return n % p != 0; }

// Number of N in [1, E-1] with both N and E-N p-prime, by direct scan. p may be
// any prime below E.
std::uint64_t count_symmetric_pi_primes(std::uint64_t E, std::uint64_t p);

// Same count restricted to the window N in [first, first + p - 1].
// Throws std::domain_error if the window leaves [1, E-1].
std::uint64_t count_window_survivors(std::uint64_t E, std::uint64_t p, std::uint64_t first);

}  // namespace goldbach
