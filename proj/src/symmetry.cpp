#include "goldbach/symmetry.hpp"

#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void require_divisor(std::uint64_t E, std::uint64_t p) {
  require_even_target(E);
  const bool in_range = (E == 4) ? p == 2 : p * p <= E - 1;
  if (!in_range || !is_small_prime(p)) {
    throw std::domain_error(std::to_string(p) + " is not a sieving divisor of E=" +
                            std::to_string(E));
  }
}

Rational frequency_for(std::uint64_t p, bool symmetric) {
  const auto q = static_cast<std::int64_t>(p);
  if (p == 2) return Rational(1, 2);
  return symmetric ? Rational(q - 1, q) : Rational(q - 2, q);
}

}  // namespace

bool classify_divisor(std::uint64_t E, std::uint64_t p) {
  require_divisor(E, p);
  return p == 2 || (E / 2) % p == 0;
}

Rational remainder_frequency(std::uint64_t E, std::uint64_t p) {
  return frequency_for(p, classify_divisor(E, p));
}

DivisorProfile build_profile(const PrimeTable& table, std::uint64_t E) {
  DivisorProfile profile;
  profile.E = E;
  const auto primes = divisor_set(table, E);
  profile.divisors.reserve(primes.size());
  for (std::uint64_t p : primes) {
    const bool symmetric = p == 2 || (E / 2) % p == 0;
    profile.divisors.push_back({p, symmetric, frequency_for(p, symmetric)});
  }
  profile.p_m = primes.back();
  return profile;
}

std::uint64_t count_symmetric_pi_primes(std::uint64_t E, std::uint64_t p) {
  // Any prime modulus below E is accepted; the count is defined without the sqrt cutoff.
  require_even_target(E);
  if (p >= E || !is_small_prime(p)) {
    throw std::domain_error(std::to_string(p) + " is not a prime below E=" + std::to_string(E));
  }
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n < E; ++n) {
    if (is_pi_prime(n, p) && is_pi_prime(E - n, p)) ++count;
  }
  return count;
}

std::uint64_t count_window_survivors(std::uint64_t E, std::uint64_t p, std::uint64_t first) {
  require_divisor(E, p);
  if (first < 1 || first + p - 1 > E - 1) {
    throw std::domain_error("window [" + std::to_string(first) + ", " +
                            std::to_string(first + p - 1) + "] leaves [1, E-1]");
  }
  std::uint64_t count = 0;
  for (std::uint64_t n = first; n < first + p; ++n) {
    if (is_pi_prime(n, p) && is_pi_prime(E - n, p)) ++count;
  }
  return count;
}

}  // namespace goldbach
