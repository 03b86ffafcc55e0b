#include "goldbach/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace goldbach {

namespace {

std::vector<Rational> worst_case(std::span<const std::uint64_t> primes) {
  std::vector<Rational> out;
  out.reserve(primes.size());
  for (std::uint64_t p : primes) {
    const auto q = static_cast<std::int64_t>(p);
    out.push_back(p == 2 ? Rational(1, 2) : Rational(q - 2, q));
  }
  return out;
}

}  // namespace

std::vector<Rational> min_frequencies(const DivisorProfile& profile) {
  if (profile.divisors.empty()) throw std::domain_error("min_frequencies: empty profile");
  std::vector<std::uint64_t> primes;
  for (const auto& d : profile.divisors) primes.push_back(d.p);
  return worst_case(primes);
}

StspResult stsp(std::uint64_t E, std::span<const Rational> freqs) {
  StspResult r;
  r.chain.reserve(freqs.size());
  auto value = static_cast<std::int64_t>(E - 1);
  for (auto it = freqs.rbegin(); it != freqs.rend(); ++it) {
    value = it->scale_floor(value);
    r.chain.push_back(value);
  }
  r.result = value;
  return r;
}

BoundReport min_gp_bound(std::uint64_t E) {
  require_even_target(E);
  const auto primes = divisor_set(E);
  const std::size_t m = primes.size();

  BoundReport b;
  b.E = E;
  b.p_m = primes.back();
  const auto pm = static_cast<std::int64_t>(b.p_m);

  const auto freqs = worst_case(primes);
  auto chain = stsp(E, freqs);
  b.t_chain = std::move(chain.chain);
  b.stsp_min_g1 = chain.result;
  b.chain_floor.reserve(m);
  for (std::size_t n = 1; n <= m; ++n) {
    b.chain_floor.push_back(pm * (static_cast<std::int64_t>(primes[m - n]) - 2));
  }

  b.closed_form_min_g1 = pm / 2;
  b.min_g2 = b.closed_form_min_g1 - 2;
  b.min_gp = b.min_g2 > 0 ? (b.min_g2 + 1) / 2 : 0;
  if (E < 50) {
    b.small_e_floor = true;
    b.min_gp = std::max<std::int64_t>(b.min_gp, 1);
  }
  return b;
}

BoundReport verify_bounds(const PrimeTable& table, std::uint64_t E) {
  return verify_bounds(table, compute_stats(table, E));
}

BoundReport verify_bounds(const PrimeTable& table, const PartitionStats& s) {
  const std::uint64_t E = s.E;
  BoundReport b = min_gp_bound(E);
  const auto primes = divisor_set(table, E);

  BoundVerdicts v;
  const auto g1 = static_cast<std::int64_t>(s.G1);
  v.g1_ge_stsp = g1 >= b.stsp_min_g1;
  v.g1_ge_closed_form = g1 >= b.closed_form_min_g1;
  v.g2_ge_min_g2 = static_cast<std::int64_t>(s.G2) >= b.min_g2;
  v.gp_ge_min_gp = static_cast<std::int64_t>(s.GP) >= b.min_gp;

  v.chain_floor_holds = true;
  for (std::size_t n = 0; n < b.t_chain.size(); ++n) {
    if (b.t_chain[n] < b.chain_floor[n]) v.chain_floor_holds = false;
  }
  v.chain_preconditions = E - 1 >= b.p_m * b.p_m;  // false only for the degenerate E = 4
  for (std::size_t i = 1; i + 1 < primes.size(); ++i) {
    if (primes[i] > primes[i + 1] - 2) v.chain_preconditions = false;
  }

  const double scale = std::sqrt(static_cast<double>(E)) / 4.0;
  v.magnitude_gap = std::abs(static_cast<double>(b.min_gp) - scale) / scale;

  b.actual = s;
  b.verdicts = v;
  return b;
}

}  // namespace goldbach
