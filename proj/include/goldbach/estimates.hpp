#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "goldbach/prime_table.hpp"
#include "goldbach/rational.hpp"
#include "goldbach/symmetry.hpp"

namespace goldbach {

// ((E-1)/2) * prod r.f.P(i) with the profile's actual frequencies.
double product_estimate(const DivisorProfile& profile);

// The same product rounded to the nearest integer (halves round up). Decided
// exactly: a long double evaluation is used unless it lands within rounding
// noise of a half, in which case the product is redone in big integers.
std::int64_t product_estimate_rounded(const DivisorProfile& profile);

// E / (2 (ln E)^2).
double hl_estimate(std::uint64_t E);

// round(100 * (estimate - observed) / observed), halves away from zero.
// Empty when observed is 0.
std::optional<std::int64_t> error_percent(std::int64_t estimate, std::int64_t observed);

// round(100 * r), halves away from zero.
std::int64_t percent_nearest(const Rational& r);

inline const std::vector<std::uint64_t> kDefaultBandPrimes{3, 5, 7};

struct BandClass {
  std::uint64_t E = 0;
  std::vector<std::uint64_t> symmetric_small_divisors;  // ascending
  Rational multiplier{1};                               // prod (p-1)/(p-2)

  // "3,5" style; empty for the lowest band.
  std::string signature() const;
};

// small_set must hold odd primes; std::domain_error otherwise.
BandClass band_class(std::uint64_t E, std::span<const std::uint64_t> small_set = kDefaultBandPrimes);

struct EstimateRecord {
  std::uint64_t E = 0;
  double product_estimate = 0.0;
  std::int64_t product_estimate_int = 0;
  double hl_estimate = 0.0;
  std::uint64_t observed_gp = 0;
  std::optional<std::int64_t> error_pct;
  double observed_over_hl = 0.0;
  BandClass band;
};

EstimateRecord estimate_record(const PrimeTable& table, std::uint64_t E);

// Comet data for every even E in [e_min, e_max]:
//   E,GP,band_signature,multiplier_num,multiplier_den
// band_signature is quoted when it holds a comma and empty for the lowest band.
void write_comet_csv(std::ostream& out, const PrimeTable& table, std::uint64_t e_min,
                     std::uint64_t e_max,
                     std::span<const std::uint64_t> small_set = kDefaultBandPrimes);

}  // namespace goldbach
