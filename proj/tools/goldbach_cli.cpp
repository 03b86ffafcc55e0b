// goldbach: Goldbach partition counts, bound audit and reference-table check.
//
// Exit codes: 0 success, 1 usage, 2 coverage/resource/I-O, 3 internal
// inconsistency. Bound violations and reference mismatches are reported in
// the output, never through the exit code.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "goldbach/goldbach.h"

namespace {

constexpr const char* kCacheEnv = "GOLDBACH_SIEVE_CACHE";

int exit_code(gb_status s) {
  switch (s) {
    case GB_OK:
      return 0;
    case GB_ERR_USAGE:
      return 1;
    case GB_ERR_RANGE:
    case GB_ERR_IO:
      return 2;
    default:
      return 3;
  }
}

struct Failure {
  gb_status status;
};

void check(gb_status s) {
  if (s != GB_OK) throw Failure{s};
}

struct TableDeleter {
  void operator()(gb_table* t) const { gb_table_free(t); }
};
using TablePtr = std::unique_ptr<gb_table, TableDeleter>;

TablePtr acquire_table(std::uint64_t limit, unsigned threads) {
  gb_table* t = nullptr;
  check(gb_table_acquire(limit < 2 ? 2 : limit, std::getenv(kCacheEnv), threads, &t));
  return TablePtr(t);
}

void require_even(std::uint64_t e) {
  if (e <= 2 || e % 2 != 0) {
    std::fprintf(stderr, "error: E must be an even integer > 2 (got %" PRIu64 ")\n", e);
    throw Failure{GB_ERR_USAGE};
  }
}

std::string render(const gb_row* row, bool csv) {
  char buf[512];
  check(gb_format_row(row, csv ? 1 : 0, buf, sizeof buf));
  return buf;
}

int cmd_row(std::uint64_t e, bool csv, unsigned threads) {
  require_even(e);
  auto table = acquire_table(e - 1, threads);
  gb_row r{};
  check(gb_row_compute(table.get(), e, &r));
  std::printf("%s\n%s\n", render(nullptr, csv).c_str(), render(&r, csv).c_str());
  return 0;
}

struct ScanPrinter {
  bool to_stdout = false;
};

void print_row(const gb_row* row, const gb_bound_summary*, void* user) {
  if (!static_cast<ScanPrinter*>(user)->to_stdout) return;
  std::printf("%s\n", render(row, false).c_str());
}

int cmd_scan(std::uint64_t lo, std::uint64_t hi, std::uint64_t step, const std::string& csv_path,
             bool audit, unsigned threads) {
  if (lo < 4 || lo % 2 != 0 || step == 0 || step % 2 != 0 || hi < lo) {
    std::fprintf(stderr, "error: scan needs even min >= 4, max >= min and an even step\n");
    return 1;
  }
  auto table = acquire_table(hi, threads);
  gb_scan_config cfg{};
  cfg.e_min = lo;
  cfg.e_max = hi;
  cfg.step = step;
  cfg.threads = threads;
  cfg.output_path = csv_path.empty() ? nullptr : csv_path.c_str();
  cfg.csv = csv_path.empty() ? 0 : 1;
  cfg.audit_bounds = audit ? 1 : 0;

  ScanPrinter printer{csv_path.empty()};
  if (printer.to_stdout) std::printf("%s\n", render(nullptr, false).c_str());
  gb_scan_summary s{};
  check(gb_scan(table.get(), &cfg, print_row, &printer, &s));

  std::printf("rows: %" PRIu64 "\n", s.rows);
  std::printf("GP min/mean/max: %" PRIu64 " / %.3f / %" PRIu64 "\n", s.gp_min, s.gp_mean, s.gp_max);
  std::printf("GP >= 1: %" PRIu64 " of %" PRIu64 "\n", s.gp_at_least_one, s.rows);
  if (s.audited) {
    std::printf("bound violations: %" PRIu64 "\n", s.total_violations);
    std::printf("  (a) G1 >= stsp:            %" PRIu64 "\n", s.violations_g1_stsp);
    std::printf("  (b) G1 >= floor(P(m)/2):   %" PRIu64 "\n", s.violations_g1_closed_form);
    std::printf("  (c) G2 >= min G2:          %" PRIu64 "\n", s.violations_g2);
    std::printf("  (d) GP >= min GP:          %" PRIu64 "\n", s.violations_gp);
    std::printf("  (e) T(n) chain floor:      %" PRIu64 "\n", s.violations_chain);
    std::printf("  chain precondition misses: %" PRIu64 "\n", s.precondition_failures);
  }
  if (!csv_path.empty()) std::printf("csv: %s\n", csv_path.c_str());
  return 0;
}

int cmd_appendix(unsigned threads) {
  auto table = acquire_table(10000, threads);
  gb_audit* raw = nullptr;
  check(gb_audit_run(table.get(), &raw));
  std::unique_ptr<gb_audit, decltype(&gb_audit_free)> audit(raw, gb_audit_free);

  std::printf("%s  mismatches\n", render(nullptr, false).c_str());
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < gb_audit_size(audit.get()); ++i) {
    gb_row computed{}, published{};
    char mism[256];
    check(gb_audit_row(audit.get(), i, &computed, &published));
    check(gb_audit_mismatches(audit.get(), i, mism, sizeof mism));
    std::printf("%s  %s\n", render(&computed, false).c_str(), *mism ? mism : "-");
    if (*mism) {
      ++flagged;
      std::printf("%s  (published)\n", render(&published, false).c_str());
    }
  }
  std::printf("rows: %zu, rows with mismatches: %zu\n", gb_audit_size(audit.get()), flagged);
  return 0;
}

int cmd_comet(std::uint64_t max, const std::string& out, unsigned threads) {
  if (max < 4) {
    std::fprintf(stderr, "error: comet needs max >= 4\n");
    return 1;
  }
  auto table = acquire_table(max, threads);
  check(gb_comet_export(table.get(), 4, max, out.c_str()));
  std::printf("wrote %s\n", out.c_str());
  return 0;
}

int cmd_estimate(std::uint64_t e, unsigned threads) {
  require_even(e);
  auto table = acquire_table(e - 1, threads);
  gb_estimate r{};
  check(gb_estimate_compute(table.get(), e, &r));
  std::printf("E:                 %" PRIu64 "\n", r.e);
  std::printf("observed GP:       %" PRIu64 "\n", r.observed_gp);
  std::printf("product estimate:  %.6f (rounded %" PRId64 ")\n", r.product_estimate, r.product_estimate_int);
  if (r.has_error_pct) {
    std::printf("error %%:           %" PRId64 "\n", r.error_pct);
  } else {
    std::printf("error %%:           NA\n");
  }
  std::printf("E/(2 ln^2 E):      %.6f\n", r.hl_estimate);
  std::printf("observed / that:   %.6f\n", r.observed_over_hl);
  std::printf("band:              {%s} x %" PRId64 "/%" PRId64 "\n", r.band_signature,
              r.band_multiplier_num, r.band_multiplier_den);
  return 0;
}

int cmd_bound(std::uint64_t e, unsigned threads) {
  require_even(e);
  auto table = acquire_table(e - 1, threads);
  gb_bound_report* raw = nullptr;
  check(gb_bound_compute(table.get(), e, &raw));
  std::unique_ptr<gb_bound_report, decltype(&gb_bound_free)> report(raw, gb_bound_free);
  gb_bound_summary s{};
  check(gb_bound_get_summary(report.get(), &s));

  auto yn = [](int v) { return v ? "holds" : "VIOLATED"; };
  std::printf("E: %" PRIu64 "  P(m): %" PRIu64 "\n", s.e, s.pm);
  std::printf("%4s %14s %14s\n", "n", "T(n)", "floor");
  for (std::size_t n = 0; n < s.chain_length; ++n) {
    std::int64_t t = 0, f = 0;
    check(gb_bound_chain_step(report.get(), n, &t, &f));
    std::printf("%4zu %14" PRId64 " %14" PRId64 "%s\n", n + 1, t, f, t < f ? "  <" : "");
  }
  std::printf("stsp min G1:         %" PRId64 "\n", s.stsp_min_g1);
  std::printf("floor(P(m)/2):       %" PRId64 "\n", s.closed_form_min_g1);
  std::printf("min G2:              %" PRId64 "\n", s.min_g2);
  std::printf("min GP:              %" PRId64 "%s\n", s.min_gp,
              s.small_e_floor ? "  (E < 50: floored at 1, checked by enumeration)" : "");
  std::printf("G1 / G2 / GP:        %" PRIu64 " / %" PRIu64 " / %" PRIu64 "\n", s.g1, s.g2, s.gp);
  std::printf("(a) G1 >= stsp:      %s\n", yn(s.g1_ge_stsp));
  std::printf("(b) G1 >= P(m)/2:    %s\n", yn(s.g1_ge_closed_form));
  std::printf("(c) G2 >= min G2:    %s\n", yn(s.g2_ge_min_g2));
  std::printf("(d) GP >= min GP:    %s\n", yn(s.gp_ge_min_gp));
  std::printf("(e) chain floor:     %s (preconditions %s)\n", yn(s.chain_floor_holds),
              s.chain_preconditions ? "met" : "not met");
  std::printf("(f) |min GP - sqrt(E)/4| / (sqrt(E)/4): %.4f\n", s.magnitude_gap);
  std::printf("G1 - G2:             %" PRId64 "\n",
              static_cast<std::int64_t>(s.g1) - static_cast<std::int64_t>(s.g2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goldbach partition counts, bound audit and reference-table reproduction"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("-j,--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.footer(std::string("Environment: ") + kCacheEnv + "=PATH caches the sieve between runs.");

  std::uint64_t e = 0;
  bool row_csv = false;
  auto* row = app.add_subcommand("row", "One reference-table style row for E");
  row->add_option("E", e, "Even number > 2")->required();
  row->add_flag("--csv", row_csv, "Print as CSV");

  std::uint64_t lo = 0, hi = 0, step = 2;
  std::string csv_path;
  bool audit = false;
  auto* scan = app.add_subcommand("scan", "Rows for every E in [min, max]");
  scan->add_option("min", lo)->required();
  scan->add_option("max", hi)->required();
  scan->add_option("--step", step, "Even stride between targets");
  scan->add_option("--csv", csv_path, "Write rows as CSV to PATH");
  scan->add_flag("--audit-bounds", audit, "Check the lower-bound chain against exact counts");

  auto* appendix = app.add_subcommand("appendix-a", "Recompute the 29 reference rows and flag mismatches");

  std::uint64_t comet_max = 0;
  std::string comet_out;
  auto* comet = app.add_subcommand("comet", "Export GP vs E with band classes");
  comet->add_option("max", comet_max)->required();
  comet->add_option("--out", comet_out, "Output CSV path")->required();

  auto* estimate = app.add_subcommand("estimate", "Product and asymptotic estimates for E");
  estimate->add_option("E", e)->required();

  auto* bound = app.add_subcommand("bound", "Truncated-product chain and bound verdicts for E");
  bound->add_option("E", e)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return 1;
  }

  try {
    if (*row) return cmd_row(e, row_csv, threads);
    if (*scan) return cmd_scan(lo, hi, step, csv_path, audit, threads);
    if (*appendix) return cmd_appendix(threads);
    if (*comet) return cmd_comet(comet_max, comet_out, threads);
    if (*estimate) return cmd_estimate(e, threads);
    if (*bound) return cmd_bound(e, threads);
  } catch (const Failure& f) {
    const char* msg = gb_last_error();
    if (msg && *msg) std::fprintf(stderr, "error: %s\n", msg);
    return exit_code(f.status);
  }
  return 1;
}
