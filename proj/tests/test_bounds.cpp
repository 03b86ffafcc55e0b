#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "goldbach/bounds.hpp"
#include "oracles.hpp"

using goldbach::PrimeTable;
using goldbach::Rational;

namespace {
const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(20'000);
  return t;
}

// Floor-after-every-step product, written out independently.
std::int64_t chain_oracle(std::uint64_t E, const std::vector<std::uint64_t>& primes,
                          std::vector<std::int64_t>* steps = nullptr) {
  auto v = static_cast<std::int64_t>(E - 1);
  for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
    const auto p = static_cast<std::int64_t>(*it);
    v = (p == 2) ? v / 2 : v * (p - 2) / p;
    if (steps) steps->push_back(v);
  }
  return v;
}
}  // namespace

TEST_CASE("min_frequencies") {
  const auto f = goldbach::min_frequencies(goldbach::build_profile(table(), 128));
  CHECK(f == std::vector<Rational>{{1, 2}, {1, 3}, {3, 5}, {5, 7}, {9, 11}});
  CHECK(goldbach::min_frequencies(goldbach::build_profile(table(), 6)) == std::vector<Rational>{{1, 2}});
  // Independent of the actual symmetry: 210 has 3 | 105 but still gets 1/3.
  CHECK(goldbach::min_frequencies(goldbach::build_profile(table(), 210))[1] == Rational(1, 3));
  CHECK_THROWS_AS(goldbach::min_frequencies(goldbach::DivisorProfile{}), std::domain_error);
}

TEST_CASE("stsp worked chain for E=128") {
  const auto f = goldbach::min_frequencies(goldbach::build_profile(table(), 128));
  const auto r = goldbach::stsp(128, f);
  CHECK(r.chain == std::vector<std::int64_t>{103, 73, 43, 14, 7});
  CHECK(r.result == 7);
  const std::vector<Rational> half{{1, 2}};
  CHECK(goldbach::stsp(6, half).chain == std::vector<std::int64_t>{2});
}

TEST_CASE("stsp matches the written-out recurrence") {
  for (std::uint64_t E = 6; E <= 20'000; E += 2) {
    const auto primes = oracle::trial_divisor_set(E);
    std::vector<std::int64_t> steps;
    const auto expect = chain_oracle(E, primes, &steps);
    const auto b = goldbach::min_gp_bound(E);
    REQUIRE(b.t_chain == steps);
    REQUIRE(b.stsp_min_g1 == expect);
  }
}

TEST_CASE("stsp order matters under truncation") {
  // Same multiset of factors, different order, different result.
  const std::vector<Rational> asc{{1, 3}, {3, 5}};
  const std::vector<Rational> desc{{3, 5}, {1, 3}};
  CHECK(goldbach::stsp(12, asc).result != goldbach::stsp(12, desc).result);
}

TEST_CASE("min_gp_bound closed form") {
  auto b = goldbach::min_gp_bound(128);
  CHECK(b.p_m == 11);
  CHECK(b.closed_form_min_g1 == 5);
  CHECK(b.min_g2 == 3);
  CHECK(b.min_gp == 2);
  CHECK(b.chain_floor == std::vector<std::int64_t>{99, 55, 33, 11, 0});
  CHECK_FALSE(b.small_e_floor);

  b = goldbach::min_gp_bound(50);
  CHECK(b.p_m == 7);
  CHECK(b.closed_form_min_g1 == 3);
  CHECK(b.min_g2 == 1);
  CHECK(b.min_gp == 1);
  CHECK_FALSE(b.small_e_floor);

  b = goldbach::min_gp_bound(9998);
  CHECK(b.closed_form_min_g1 == 48);
  CHECK(b.min_g2 == 46);
  CHECK(b.min_gp == 23);

  b = goldbach::min_gp_bound(12);
  CHECK(b.p_m == 3);
  CHECK(b.min_g2 == -1);  // kept raw
  CHECK(b.min_gp == 1);   // floored, E < 50
  CHECK(b.small_e_floor);

  CHECK_THROWS_AS(goldbach::min_gp_bound(51), std::domain_error);
}

TEST_CASE("verify_bounds") {
  auto b = goldbach::verify_bounds(table(), 128);
  REQUIRE(b.verdicts);
  CHECK(b.actual->GP == 3);
  CHECK(b.verdicts->g1_ge_closed_form);
  CHECK(b.verdicts->g2_ge_min_g2);
  CHECK(b.verdicts->gp_ge_min_gp);
  CHECK(b.verdicts->chain_floor_holds);
  CHECK(b.verdicts->chain_preconditions);
  CHECK(b.verdicts->magnitude_gap == doctest::Approx(std::abs(2.0 - std::sqrt(128.0) / 4) / (std::sqrt(128.0) / 4)));

  b = goldbach::verify_bounds(table(), 50);
  CHECK(b.actual->GP == 4);
  CHECK(b.verdicts->gp_ge_min_gp);

  b = goldbach::verify_bounds(table(), 4);
  CHECK(b.small_e_floor);
  CHECK(b.min_gp == 1);
  CHECK(b.actual->GP == 1);
  CHECK(b.verdicts->gp_ge_min_gp);
  CHECK_FALSE(b.verdicts->chain_preconditions);  // 3 < 2^2
}

TEST_CASE("small E are covered by enumeration, not assumption") {
  for (std::uint64_t E = 4; E <= 48; E += 2) {
    std::uint64_t pairs = 0;
    for (std::uint64_t q = 2; q <= E / 2; ++q) pairs += oracle::trial_is_prime(q) && oracle::trial_is_prime(E - q);
    REQUIRE(pairs >= 1);
    REQUIRE(goldbach::verify_bounds(table(), E).actual->GP == pairs);
  }
}

TEST_CASE("verdicts over [4, 20000]") {
  for (std::uint64_t E = 4; E <= 20'000; E += 2) {
    const auto b = goldbach::verify_bounds(table(), E);
    const auto& v = *b.verdicts;
    REQUIRE_MESSAGE(v.gp_ge_min_gp, "E=" << E);
    REQUIRE_MESSAGE(v.g2_ge_min_g2, "E=" << E);
    REQUIRE_MESSAGE(v.chain_floor_holds, "E=" << E);
    if (E > 4) REQUIRE(v.chain_preconditions);
  }
}

TEST_CASE("stsp is monotone in each frequency") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::uint64_t E = 2 * (3 + rng() % 500'000);
    const auto primes = oracle::trial_divisor_set(E);
    std::vector<Rational> f;
    for (std::uint64_t p : primes) {
      const auto q = static_cast<std::int64_t>(p);
      f.push_back(p == 2 ? Rational(1, 2) : Rational(q - 2, q));
    }
    const auto base = goldbach::stsp(E, f).result;
    const std::size_t i = rng() % f.size();
    const auto q = static_cast<std::int64_t>(primes[i]);
    auto g = f;
    g[i] = primes[i] == 2 ? Rational(2, 3) : Rational(q - 1, q);
    REQUIRE(goldbach::stsp(E, g).result >= base);
  }
}

TEST_CASE("truncation lemma on random triples") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100'000; ++trial) {
    const std::uint64_t a = 1 + rng() % 1'000'000'000;
    const std::uint64_t c = 1 + rng() % a;
    const std::uint64_t b = 1 + rng() % 1'000'000'000;
    REQUIRE(goldbach::truncation_lemma_holds(a, b, c));
  }
  CHECK(goldbach::truncation_lemma_holds(5, 3, 5));
  CHECK(goldbach::truncation_lemma_holds(7, 1, 7));
}
