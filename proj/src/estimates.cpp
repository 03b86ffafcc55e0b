#include "goldbach/estimates.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "goldbach/partitions.hpp"

namespace goldbach {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t rounded_exact(const DivisorProfile& profile) {
  BigInt num = profile.E - 1;
  BigInt den = 2;
  for (const auto& d : profile.divisors) {
    num *= d.frequency.num();
    den *= d.frequency.den();
  }
  BigInt q = (2 * num + den) / (2 * den);
  return q.convert_to<std::int64_t>();
}

long double product_ld(const DivisorProfile& profile) {
  long double v = static_cast<long double>(profile.E - 1) / 2.0L;
  for (const auto& d : profile.divisors) {
    v *= static_cast<long double>(d.frequency.num()) / static_cast<long double>(d.frequency.den());
  }
  return v;
}

// Halves away from zero for num/den with den > 0.
std::int64_t round_ratio(__int128 num, __int128 den) {
  const bool neg = num < 0;
  if (neg) num = -num;
  const auto q = static_cast<std::int64_t>((2 * num + den) / (2 * den));
  return neg ? -q : q;
}

}  // namespace

double product_estimate(const DivisorProfile& profile) {
  require_even_target(profile.E);
  return static_cast<double>(product_ld(profile));
}

std::int64_t product_estimate_rounded(const DivisorProfile& profile) {
  require_even_target(profile.E);
  const long double v = product_ld(profile);
  const long double frac = v - std::floor(v);
  if (std::fabs(frac - 0.5L) < 1e-9L * std::max(1.0L, v)) return rounded_exact(profile);
  return static_cast<std::int64_t>(std::floor(v + 0.5L));
}

double hl_estimate(std::uint64_t E) {
  if (E < 4) throw std::domain_error("hl_estimate requires E >= 4");
  const double l = std::log(static_cast<double>(E));
  return static_cast<double>(E) / (2.0 * l * l);
}

std::optional<std::int64_t> error_percent(std::int64_t estimate, std::int64_t observed) {
  if (observed == 0) return std::nullopt;
  __int128 num = static_cast<__int128>(estimate - observed) * 100;
  __int128 den = observed;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return round_ratio(num, den);
}

std::int64_t percent_nearest(const Rational& r) {
  return round_ratio(static_cast<__int128>(r.num()) * 100, r.den());
}

std::string BandClass::signature() const {
  std::string s;
  for (std::uint64_t p : symmetric_small_divisors) {
    if (!s.empty()) s += ',';
    s += std::to_string(p);
  }
  return s;
}

BandClass band_class(std::uint64_t E, std::span<const std::uint64_t> small_set) {
  require_even_target(E);
  BandClass b;
  b.E = E;
  std::vector<std::uint64_t> sorted(small_set.begin(), small_set.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::uint64_t p : sorted) {
    if (p < 3 || p % 2 == 0) {
      throw std::domain_error("band primes must be odd primes, got " + std::to_string(p));
    }
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
      if (p % d == 0) throw std::domain_error("band prime " + std::to_string(p) + " is composite");
    }
    if ((E / 2) % p == 0) {
      b.symmetric_small_divisors.push_back(p);
      const auto q = static_cast<std::int64_t>(p);
      b.multiplier *= Rational(q - 1, q - 2);
    }
  }
  return b;
}

EstimateRecord estimate_record(const PrimeTable& table, std::uint64_t E) {
  require_coverage(table, E);
  EstimateRecord r;
  r.E = E;
  const auto profile = build_profile(table, E);
  r.product_estimate = product_estimate(profile);
  r.product_estimate_int = product_estimate_rounded(profile);
  r.hl_estimate = hl_estimate(E);
  r.observed_gp = gp_count(table, E);
  r.error_pct = error_percent(r.product_estimate_int, static_cast<std::int64_t>(r.observed_gp));
  r.observed_over_hl = static_cast<double>(r.observed_gp) / r.hl_estimate;
  r.band = band_class(E);
  return r;
}

void write_comet_csv(std::ostream& out, const PrimeTable& table, std::uint64_t e_min,
                     std::uint64_t e_max, std::span<const std::uint64_t> small_set) {
  require_even_target(e_min);
  require_coverage(table, e_max);
  out << "E,GP,band_signature,multiplier_num,multiplier_den\n";
  for (std::uint64_t E = e_min; E <= e_max; E += 2) {
    const auto band = band_class(E, small_set);
    const std::string sig = band.signature();
    out << E << ',' << gp_count(table, E) << ',';
    if (sig.find(',') != std::string::npos) {
      out << '"' << sig << '"';
    } else {
      out << sig;
    }
    out << ',' << band.multiplier.num() << ',' << band.multiplier.den() << '\n';
  }
  if (!out) throw std::runtime_error("comet export: write failed");
}

}  // namespace goldbach
