// Acceptance suite. Prints one PASS/FAIL line per criterion; exits nonzero if
// any selected criterion fails. `acceptance --criterion N` runs one.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "goldbach/bounds.hpp"
#include "goldbach/estimates.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/report.hpp"
#include "oracles.hpp"

using goldbach::PrimeTable;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Criterion 1: GP, PE, P(m), GR% (and NPE) reproduce exactly; every mismatch
// is flagged and the recomputed value is confirmed by an independent oracle.
Outcome appendix_reproduction() {
  const auto t0 = Clock::now();
  const auto table = PrimeTable::build(10'000);
  const auto rows = goldbach::appendix_a_audit(table);
  const double elapsed = seconds_since(t0);

  Outcome o{true, ""};
  bool npe_9014 = false, factors_222 = false;
  int exceptions = 0;
  for (const auto& r : rows) {
    const auto& c = r.values;
    const auto& p = *r.paper_values;
    for (const auto& field : r.mismatches) {
      bool proven = false;
      if (field == "NPE") {
        proven = c.NPE == oracle::trial_prime_count(c.PE);
        npe_9014 |= c.E == 9014;
      } else if (field == "half_factors") {
        std::string expect;
        if (oracle::trial_is_prime(c.half)) {
          expect = "P";
        } else {
          for (auto f : oracle::trial_prime_factors(c.half)) {
            if (f > c.P_m) continue;
            expect += (expect.empty() ? "" : ",") + std::to_string(f);
          }
        }
        proven = c.half_factors == expect;
        factors_222 |= c.E == 222;
      } else if (field == "calc_GP" || field == "error_pct") {
        proven = true;  // derived columns; judged by criterion 2
      }
      if (!proven) {
        o.pass = false;
        o.detail += fmt(" E=%llu:%s unproven", static_cast<unsigned long long>(c.E), field.c_str());
      } else if (field != "calc_GP" && field != "error_pct") {
        ++exceptions;
        std::printf("    flagged E=%llu %s: published %s, recomputed %s\n", static_cast<unsigned long long>(c.E),
                    field.c_str(),
                    field == "NPE" ? std::to_string(p.NPE).c_str() : p.half_factors.c_str(),
                    field == "NPE" ? std::to_string(c.NPE).c_str() : c.half_factors.c_str());
      }
    }
    if (c.GP != p.GP || c.PE != p.PE || c.P_m != p.P_m || c.GR_pct != p.GR_pct) o.pass = false;
  }
  if (rows.size() != 29 || !npe_9014 || !factors_222 || elapsed >= 5.0) o.pass = false;
  o.detail = fmt("29 rows, GP/PE/P(m)/GR%% exact, %d proven errors in the published table flagged, %.3f s (< 5 s)", exceptions,
                 elapsed) + o.detail;
  return o;
}

// Product using the published (possibly wrong) E/2 factor column.
double product_with_listed_factors(const goldbach::RowValues& published) {
  std::vector<std::uint64_t> listed;
  if (published.half_factors != "P") {
    std::size_t pos = 0;
    while (pos <= published.half_factors.size()) {
      const auto next = published.half_factors.find(',', pos);
      listed.push_back(std::stoull(published.half_factors.substr(pos, next - pos)));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  oracle::Rational v(published.E - 1, 2);
  for (auto q : oracle::trial_divisor_set(published.E)) {
    if (q == 2) {
      v *= oracle::Rational(1, 2);
    } else if (std::find(listed.begin(), listed.end(), q) != listed.end()) {
      v *= oracle::Rational(q - 1, q);
    } else {
      v *= oracle::Rational(q - 2, q);
    }
  }
  return v.convert_to<double>();
}

// Criterion 2: calc GP within +-1 for all 29 rows, exact for 2490 and 3022.
Outcome calculated_gp() {
  const auto table = PrimeTable::build(10'000);
  Outcome o{true, ""};
  int within = 0;
  for (const auto& ref : goldbach::appendix_a_reference()) {
    const auto calc = goldbach::product_estimate_rounded(goldbach::build_profile(table, ref.E));
    if (std::llabs(calc - ref.calc_GP) <= 1) {
      ++within;
    } else {
      o.pass = false;
      o.detail += fmt(" E=%llu computed %lld vs published %lld;", static_cast<unsigned long long>(ref.E),
                      static_cast<long long>(calc), static_cast<long long>(ref.calc_GP));
      std::printf("    E=%llu: computed %lld, published %lld; with the published factor column \"%s\" the "
                  "product is %.4f\n",
                  static_cast<unsigned long long>(ref.E), static_cast<long long>(calc),
                  static_cast<long long>(ref.calc_GP), ref.half_factors.c_str(), product_with_listed_factors(ref));
    }
    if ((ref.E == 2490 && calc != 85) || (ref.E == 3022 && calc != 37)) {
      o.pass = false;
      o.detail += " worked sample mismatch;";
    }
  }
  o.detail = fmt("%d/29 rows within +-1, E=2490 -> 85 and E=3022 -> 37 checked;", within) + o.detail;
  return o;
}

// Criterion 3: GP >= 1 and GP >= min_gp for every even E in [4, 1e6].
Outcome bound_audit() {
  constexpr std::uint64_t kMax = 1'000'000;
  const auto table = PrimeTable::build(kMax);
  Outcome o{true, ""};

  auto run = [&](unsigned threads, double budget) {
    goldbach::ScanConfig cfg;
    cfg.e_min = 4;
    cfg.e_max = kMax;
    cfg.threads = threads;
    cfg.audit_bounds = true;
    std::uint64_t closed_form_misses = 0;
    const auto t0 = Clock::now();
    const auto s = goldbach::scan(table, cfg, [&](const goldbach::RowValues& r, const goldbach::BoundReport* b) {
      if (r.E < 50) return;
      const auto half_pm = static_cast<std::int64_t>(r.P_m / 2);
      const std::int64_t expect = half_pm - 2 > 0 ? (half_pm - 2 + 1) / 2 : 0;
      if (b->min_gp != expect || static_cast<std::int64_t>(r.GP) < expect) ++closed_form_misses;
    });
    const double elapsed = seconds_since(t0);
    const bool ok = s.rows == kMax / 2 - 1 && s.gp_at_least_one == s.rows && s.violations_gp == 0 &&
                    closed_form_misses == 0 && elapsed < budget;
    std::printf("    %u thread(s): %llu rows, GP>=1 on all: %s, (d) violations %llu, closed-form misses %llu, "
                "%.1f s (budget %.0f s)\n",
                threads, static_cast<unsigned long long>(s.rows), s.gp_at_least_one == s.rows ? "yes" : "NO",
                static_cast<unsigned long long>(s.violations_gp),
                static_cast<unsigned long long>(closed_form_misses), elapsed, budget);
    std::printf("    informational verdicts: (a) %llu  (b) %llu  (c) %llu  (e) %llu  preconditions %llu, "
                "GP min/mean/max %llu/%.1f/%llu\n",
                static_cast<unsigned long long>(s.violations_g1_stsp),
                static_cast<unsigned long long>(s.violations_g1_closed_form),
                static_cast<unsigned long long>(s.violations_g2),
                static_cast<unsigned long long>(s.violations_chain),
                static_cast<unsigned long long>(s.precondition_failures),
                static_cast<unsigned long long>(s.gp_min), s.gp_mean,
                static_cast<unsigned long long>(s.gp_max));
    o.detail += fmt(" %u-thread %.1f s;", threads, elapsed);
    return ok;
  };
  o.pass = run(1, 600.0);
  o.pass = run(8, 120.0) && o.pass;
  o.detail = "all even E in [4, 1e6]:" + o.detail;
  return o;
}

// Criterion 4: window law on 1e4 random aligned windows.
Outcome window_law() {
  std::mt19937_64 rng(20'240'901);
  int failures = 0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const std::uint64_t E = 2 * (2 + rng() % 49'999);  // [4, 1e5]
    const auto divisors = oracle::trial_divisor_set(E);
    const std::uint64_t p = divisors[rng() % divisors.size()];
    const std::uint64_t windows = (E - 1) / p;
    const std::uint64_t first = (rng() % windows) * p + 1;
    const auto survivors = goldbach::count_window_survivors(E, p, first);
    std::uint64_t direct = 0;
    for (std::uint64_t n = first; n < first + p; ++n) direct += (n % p != 0) && ((E - n) % p != 0);
    const bool symmetric = goldbach::classify_divisor(E, p);
    const std::uint64_t expect = p == 2 ? 1 : (symmetric ? p - 1 : p - 2);
    if (survivors != expect || direct != expect) ++failures;
  }
  return {failures == 0, fmt("10000 random windows, %d failures", failures)};
}

// Criterion 5: chain floors on 1e3 random E <= 1e6; truncation lemma on 1e5 triples.
Outcome stsp_chain() {
  std::mt19937_64 rng(77);
  int chain_failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t E = 2 * (3 + rng() % 499'998);  // [6, 1e6]
    const auto b = goldbach::min_gp_bound(E);
    const auto primes = oracle::trial_divisor_set(E);
    const std::size_t m = primes.size();
    bool ok = b.t_chain.size() == m;
    for (std::size_t n = 1; ok && n <= m; ++n) {
      const auto floor_n = static_cast<std::int64_t>(b.p_m) * (static_cast<std::int64_t>(primes[m - n]) - 2);
      ok = b.t_chain[n - 1] >= floor_n;
    }
    ok = ok && b.t_chain.back() >= static_cast<std::int64_t>(b.p_m / 2);
    chain_failures += !ok;
  }
  int lemma_failures = 0;
  for (int trial = 0; trial < 100'000; ++trial) {
    const std::uint64_t a = 1 + rng() % 1'000'000'000'000ULL;
    const std::uint64_t c = 1 + rng() % a;
    const std::uint64_t b = 1 + rng() % 1'000'000'000'000ULL;
    lemma_failures += !goldbach::truncation_lemma_holds(a, b, c);
  }
  return {chain_failures == 0 && lemma_failures == 0,
          fmt("1000 chains: %d failures; 100000 lemma triples: %d failures", chain_failures, lemma_failures)};
}

// Criterion 6: comet band ratios over E in [1e4, 1e5].
Outcome band_model() {
  const auto table = PrimeTable::build(100'000);
  std::map<std::string, std::pair<double, std::uint64_t>> bands;
  for (std::uint64_t E = 10'000; E <= 100'000; E += 2) {
    auto& acc = bands[goldbach::band_class(E).signature()];
    acc.first += static_cast<double>(goldbach::gp_count(table, E));
    ++acc.second;
  }
  auto mean = [&](const std::string& k) { return bands[k].first / static_cast<double>(bands[k].second); };
  const double r3 = mean("3") / mean("");
  const double r35 = mean("3,5") / mean("");
  const bool pass = r3 >= 1.8 && r3 <= 2.2 && r35 >= 2.4 && r35 <= 2.9;
  return {pass, fmt("{3}/{} = %.4f in [1.8, 2.2]; {3,5}/{} = %.4f in [2.4, 2.9]", r3, r35)};
}

// Criterion 7: two independent routes agree.
Outcome oracle_equivalence() {
  const auto table = PrimeTable::build(100'000);
  const oracle::HalfLineCounter half(100'000);
  std::uint64_t gp_diff = 0, g1_diff = 0;
  for (std::uint64_t E = 4; E <= 100'000; E += 2) gp_diff += goldbach::gp_count(table, E) != half.gp(E);
  for (std::uint64_t E = 4; E <= 10'000; E += 2) {
    g1_diff += goldbach::g1_count(goldbach::build_profile(table, E)) != oracle::g1_predicate(E);
  }
  return {gp_diff == 0 && g1_diff == 0,
          fmt("GP pair scan vs half-line bitset, E <= 1e5: %llu differences; G1 filter vs predicate, "
              "E <= 1e4: %llu differences",
              static_cast<unsigned long long>(gp_diff), static_cast<unsigned long long>(g1_diff))};
}

// Criterion 8: estimate error shrinks with E.
Outcome error_trend() {
  const auto table = PrimeTable::build(10'000);
  auto median_abs_error = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int64_t> errs;
    for (std::uint64_t E = lo; E <= hi; E += 2) {
      const auto calc = goldbach::product_estimate_rounded(goldbach::build_profile(table, E));
      errs.push_back(std::llabs(*goldbach::error_percent(calc, static_cast<std::int64_t>(goldbach::gp_count(table, E)))));
    }
    std::sort(errs.begin(), errs.end());
    const std::size_t n = errs.size();
    return n % 2 ? static_cast<double>(errs[n / 2]) : (errs[n / 2 - 1] + errs[n / 2]) / 2.0;
  };
  const double high = median_abs_error(9000, 10'000);
  const double low = median_abs_error(500, 1500);
  return {high < low, fmt("median |error%%| over [9000,10000] = %.1f < over [500,1500] = %.1f", high, low)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Appendix A reproduction", appendix_reproduction},
      {"Calculated-GP column", calculated_gp},
      {"Bound audit to 1e6", bound_audit},
      {"Frequency window law", window_law},
      {"stsp chain and truncation lemma", stsp_chain},
      {"Band model ratios", band_model},
      {"Oracle equivalence", oracle_equivalence},
      {"Error trend", error_trend},
  };

  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--criterion") only = std::atoi(argv[i + 1]);
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "criterion must be 1..%zu\n", criteria.size());
    return 2;
  }

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const auto t0 = Clock::now();
    const Outcome o = criteria[i].second();
    std::printf("[%s] %zu. %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
