#pragma once

// Odd-only sieve of Eratosthenes with O(1) primality and prime-count queries.
//
// Encoding: bit i of the bitset stands for the odd number 2*i + 1, so bit 0
// (the number 1) is always clear. 2 is handled outside the bitset. A prefix
// popcount per 64-bit word makes pi(x) a single lookup plus one popcount.

#include <bit>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace goldbach {

class PrimeTable {
 public:
  // Sieves [0, limit]. Segments are distributed over `threads` workers.
  // Throws std::domain_error when limit < 2.
  static PrimeTable build(std::uint64_t limit, unsigned threads = 1);

  // Binary cache file: see save()/load() in prime_table.cpp for the layout.
  // load() throws std::runtime_error on malformed or corrupt files and
  // std::out_of_range when the cached limit is below min_limit.
  void save(const std::filesystem::path& path) const;
  static PrimeTable load(const std::filesystem::path& path, std::uint64_t min_limit = 2);

  std::uint64_t limit() const { return limit_; }

  // Throws std::out_of_range when n > limit().
  bool is_prime(std::uint64_t n) const {
    check_covered(n);
    return test(n);
  }

  // Unchecked probe; caller guarantees n <= limit().
  bool test(std::uint64_t n) const {
    if ((n & 1) == 0) return n == 2;
    std::uint64_t i = n >> 1;
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  // Number of primes <= x. Throws std::out_of_range when x > limit().
  std::uint64_t count_up_to(std::uint64_t x) const;

  // Largest prime strictly below n, or 0 when there is none.
  // Throws std::out_of_range when n - 1 > limit().
  std::uint64_t prev_prime_below(std::uint64_t n) const;

  // All primes in [lo, hi], ascending. hi must be covered.
  std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) const;

  // Calls f(q) for every odd prime q in [lo, hi] in ascending order, without
  // allocating. hi must be covered.
  template <typename F>
  void for_each_odd_prime(std::uint64_t lo, std::uint64_t hi, F&& f) const {
    if (lo < 3) lo = 3;
    if (hi < lo) return;
    check_covered(hi);
    const std::uint64_t i0 = lo >> 1;
    const std::uint64_t i1 = (hi - 1) >> 1;
    const std::uint64_t w0 = i0 >> 6;
    const std::uint64_t w1 = i1 >> 6;
    for (std::uint64_t w = w0; w <= w1; ++w) {
      std::uint64_t word = words_[w];
      if (w == w0) word &= ~std::uint64_t{0} << (i0 & 63);
      if (w == w1 && (i1 & 63) != 63) word &= (std::uint64_t{1} << ((i1 & 63) + 1)) - 1;
      while (word != 0) {
        const std::uint64_t bit = w * 64 + static_cast<std::uint64_t>(std::countr_zero(word));
        word &= word - 1;
        f(2 * bit + 1);
      }
    }
  }

  std::uint64_t prime_count() const { return count_up_to(limit_); }

  // Raw odd-only bitset, bit i <-> 2i+1. Bits above limit() are clear.
  std::span<const std::uint64_t> odd_bits() const { return words_; }

 private:
  PrimeTable() = default;
  void check_covered(std::uint64_t n) const;
  void finish();

  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> rank_;  // primes among odd numbers in words [0, k)
};

// Operations on the prime sequence used by the Goldbach analysis.

// PE: the largest prime strictly less than E. Requires E > 2 and E <= limit + 1.
std::uint64_t largest_prime_below(const PrimeTable& table, std::uint64_t E);

// NPE when x = PE: number of primes <= x. Requires x <= limit.
std::uint64_t prime_count_up_to(const PrimeTable& table, std::uint64_t x);

// P(1)=2 ... P(m): primes <= floor(sqrt(E-1)). E=4 yields {2}.
// Throws std::domain_error for odd E or E <= 2.
std::vector<std::uint64_t> divisor_set(const PrimeTable& table, std::uint64_t E);

// Same as divisor_set but sieves the (small) range itself.
std::vector<std::uint64_t> divisor_set(std::uint64_t E);

std::uint64_t isqrt(std::uint64_t n);

// Throws std::domain_error unless E is even and > 2.
void require_even_target(std::uint64_t E);

}  // namespace goldbach
