#pragma once

// Step-truncated series product and the lower-bound chain built on it.
//
// Starting from E-1, multiply by one frequency per divisor from P(m) down to
// P(1) = 2, flooring after every step: T(1), ..., T(m). With worst-case
// frequencies ((p-2)/p for odd p, 1/2 for 2) the chain is claimed to satisfy
//   T(n) >= P(m) * (P(m-n+1) - 2),   T(m) >= floor(P(m)/2),
// which gives min G1 = floor(P(m)/2), min G2 = min G1 - 2 and
// min GP = ceil(min G2 / 2). verify_bounds() checks all of it against the
// exact counts and records the outcome rather than assuming it.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "goldbach/partitions.hpp"
#include "goldbach/prime_table.hpp"
#include "goldbach/rational.hpp"
#include "goldbach/symmetry.hpp"

namespace goldbach {

struct StspResult {
  std::vector<std::int64_t> chain;  // T(1) .. T(m)
  std::int64_t result = 0;          // T(m)
};

struct BoundVerdicts {
  bool g1_ge_stsp = false;         // (a) G1 >= T(m)
  bool g1_ge_closed_form = false;  // (b) G1 >= floor(P(m)/2)
  bool g2_ge_min_g2 = false;       // (c)
  bool gp_ge_min_gp = false;       // (d)
  bool chain_floor_holds = false;  // (e) every T(n) >= P(m)(P(m-n+1)-2)
  bool chain_preconditions = false;  // E-1 >= P(m)^2 and P(i) <= P(i+1)-2 for i >= 2
  double magnitude_gap = 0.0;      // (f) |min_gp - sqrt(E)/4| / (sqrt(E)/4)

  bool all_hold() const {
    return g1_ge_stsp && g1_ge_closed_form && g2_ge_min_g2 && gp_ge_min_gp && chain_floor_holds;
  }
};

struct BoundReport {
  std::uint64_t E = 0;
  std::uint64_t p_m = 0;
  std::vector<std::int64_t> t_chain;
  std::vector<std::int64_t> chain_floor;  // P(m) * (P(m-n+1) - 2), n = 1..m
  std::int64_t stsp_min_g1 = 0;
  std::int64_t closed_form_min_g1 = 0;
  std::int64_t min_g2 = 0;  // may be negative for small E
  std::int64_t min_gp = 0;
  // E < 50: min_gp is floored at 1 on the strength of direct enumeration,
  // not derived from the chain.
  bool small_e_floor = false;

  std::optional<PartitionStats> actual;
  std::optional<BoundVerdicts> verdicts;
};

// (p-2)/p for odd p and 1/2 for 2, regardless of the actual symmetry.
std::vector<Rational> min_frequencies(const DivisorProfile& profile);

// freqs are ordered by ascending divisor; they are applied in reverse.
StspResult stsp(std::uint64_t E, std::span<const Rational> freqs);

// Closed-form fields plus the worst-case chain. E = 4 takes the degenerate
// path with divisor set {2}.
BoundReport min_gp_bound(std::uint64_t E);

// min_gp_bound() plus exact counts and verdicts.
BoundReport verify_bounds(const PrimeTable& table, std::uint64_t E);

// Same, reusing stats already computed with G1 included.
BoundReport verify_bounds(const PrimeTable& table, const PartitionStats& stats);

// floor(a*b/c) >= b whenever 0 < c <= a.
constexpr bool truncation_lemma_holds(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return static_cast<unsigned __int128>(a) * b / c >= b;
}

}  // namespace goldbach
