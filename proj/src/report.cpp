#include "goldbach/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "goldbach/estimates.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/symmetry.hpp"

namespace goldbach {

std::string half_factors(const PrimeTable& table, std::uint64_t E) {
  require_coverage(table, E);
  const std::uint64_t half = E / 2;
  if (table.test(half)) return "P";
  std::string out;
  for (std::uint64_t p : divisor_set(table, E)) {
    if (half % p != 0) continue;
    if (!out.empty()) out += ',';
    out += std::to_string(p);
  }
  return out;
}

RowValues row(const PrimeTable& table, const PartitionStats& stats) {
  const std::uint64_t E = stats.E;
  const auto profile = build_profile(table, E);
  RowValues r;
  r.E = E;
  r.PE = stats.PE;
  r.NPE = stats.NPE;
  r.P_m = profile.p_m;
  r.half = E / 2;
  r.half_factors = half_factors(table, E);
  r.GP = stats.GP;
  r.GR_pct = percent_nearest(stats.GR);
  r.calc_GP = product_estimate_rounded(profile);
  r.error_pct = error_percent(r.calc_GP, static_cast<std::int64_t>(r.GP));
  return r;
}

RowValues row(const PrimeTable& table, std::uint64_t E) {
  return row(table, compute_stats(table, E, /*include_g1=*/false));
}

std::vector<std::string> compare_rows(const RowValues& c, const RowValues& ref) {
  std::vector<std::string> m;
  if (c.E != ref.E) m.emplace_back("E");
  if (c.PE != ref.PE) m.emplace_back("PE");
  if (c.NPE != ref.NPE) m.emplace_back("NPE");
  if (c.P_m != ref.P_m) m.emplace_back("Pm");
  if (c.half != ref.half) m.emplace_back("half");
  if (c.half_factors != ref.half_factors) m.emplace_back("half_factors");
  if (c.GP != ref.GP) m.emplace_back("GP");
  if (c.GR_pct != ref.GR_pct) m.emplace_back("GR_pct");
  if (c.calc_GP != ref.calc_GP) m.emplace_back("calc_GP");
  if (c.error_pct != ref.error_pct) m.emplace_back("error_pct");
  return m;
}

std::vector<TableRow> appendix_a_audit(const PrimeTable& table) {
  std::vector<TableRow> out;
  for (const auto& ref : appendix_a_reference()) {
    TableRow t;
    t.values = row(table, ref.E);
    t.paper_values = ref;
    t.mismatches = compare_rows(t.values, ref);
    out.push_back(std::move(t));
  }
  return out;
}

void validate(const ScanConfig& c) {
  if (c.e_min < 4 || c.e_min % 2 != 0) throw std::domain_error("scan: minimum must be even and >= 4");
  if (c.step == 0 || c.step % 2 != 0) throw std::domain_error("scan: step must be even and > 0");
  if (c.e_max < c.e_min) throw std::domain_error("scan: maximum is below minimum");
  if (c.threads == 0) throw std::domain_error("scan: need at least one thread");
}

namespace {

struct ScanItem {
  RowValues row;
  std::optional<BoundReport> bound;
};

ScanItem compute_item(const PrimeTable& table, std::uint64_t E, bool audit) {
  ScanItem item;
  const PartitionStats stats = compute_stats(table, E, audit);
  item.row = row(table, stats);
  if (audit) item.bound = verify_bounds(table, stats);
  return item;
}

void tally(ScanSummary& s, const ScanItem& item, double& gp_sum) {
  const std::uint64_t gp = item.row.GP;
  if (s.rows == 0 || gp < s.gp_min) s.gp_min = gp;
  if (s.rows == 0 || gp > s.gp_max) s.gp_max = gp;
  ++s.rows;
  gp_sum += static_cast<double>(gp);
  if (gp >= 1) ++s.gp_at_least_one;
  if (!item.bound) return;

  const BoundVerdicts& v = *item.bound->verdicts;
  s.violations_g1_stsp += !v.g1_ge_stsp;
  s.violations_g1_closed_form += !v.g1_ge_closed_form;
  s.violations_g2 += !v.g2_ge_min_g2;
  s.violations_gp += !v.gp_ge_min_gp;
  s.violations_chain += !v.chain_floor_holds;
  s.precondition_failures += !v.chain_preconditions;
  if ((!v.all_hold() || gp == 0) && s.violating_E.size() < 32) s.violating_E.push_back(item.row.E);
}

}  // namespace

ScanSummary scan(const PrimeTable& table, const ScanConfig& config, const RowSink& sink) {
  validate(config);
  require_coverage(table, config.e_max - (config.e_max - config.e_min) % config.step);

  ScanSummary summary;
  summary.audited = config.audit_bounds;
  double gp_sum = 0.0;

  const std::uint64_t total = (config.e_max - config.e_min) / config.step + 1;
  constexpr std::uint64_t kChunk = 16;
  const std::uint64_t batch = std::uint64_t{config.threads} * 64 * kChunk;

  std::vector<ScanItem> items;
  for (std::uint64_t start = 0; start < total; start += batch) {
    const std::uint64_t n = std::min(batch, total - start);
    items.assign(n, {});
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};

    auto work = [&] {
      try {
        for (std::uint64_t c = next.fetch_add(kChunk); c < n && !failed; c = next.fetch_add(kChunk)) {
          for (std::uint64_t k = c; k < std::min(n, c + kChunk); ++k) {
            items[k] = compute_item(table, config.e_min + (start + k) * config.step, config.audit_bounds);
          }
        }
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    };
    if (config.threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < config.threads; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& item : items) {
      tally(summary, item, gp_sum);
      if (sink) sink(item.row, item.bound ? &*item.bound : nullptr);
    }
  }
  summary.gp_mean = summary.rows ? gp_sum / static_cast<double>(summary.rows) : 0.0;
  return summary;
}

ScanSummary scan_to_stream(const PrimeTable& table, const ScanConfig& config, std::ostream& out,
                           const RowSink& also) {
  const bool csv = config.format == OutputFormat::Csv;
  out << (csv ? std::string(kCsvHeader) : format_table_header()) << '\n';
  auto summary = scan(table, config, [&](const RowValues& r, const BoundReport* b) {
    out << (csv ? format_csv_row(r) : format_table_row(r)) << '\n';
    if (!out) throw std::runtime_error("scan: write failed");
    if (also) also(r, b);
  });
  out.flush();
  if (!out) throw std::runtime_error("scan: write failed");
  return summary;
}

ScanSummary scan_to_file(const PrimeTable& table, const ScanConfig& config, const RowSink& also) {
  if (!config.output) throw std::domain_error("scan_to_file: no output path");
  const std::filesystem::path target = *config.output;
  std::filesystem::path tmp = target;
  tmp += ".partial";
  try {
    ScanSummary summary;
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
      summary = scan_to_stream(table, config, out, also);
    }
    std::filesystem::rename(tmp, target);
    return summary;
  } catch (const std::runtime_error& e) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error(target.string() + ": " + e.what());
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

std::string format_csv_row(const RowValues& r) {
  std::string s;
  s += std::to_string(r.E) + ',' + std::to_string(r.PE) + ',' + std::to_string(r.NPE) + ',' +
       std::to_string(r.P_m) + ',' + std::to_string(r.half) + ',';
  if (r.half_factors.find(',') != std::string::npos) {
    s += '"' + r.half_factors + '"';
  } else {
    s += r.half_factors;
  }
  s += ',' + std::to_string(r.GP) + ',' + std::to_string(r.GR_pct) + ',' + std::to_string(r.calc_GP) +
       ',' + (r.error_pct ? std::to_string(*r.error_pct) : std::string("NA"));
  return s;
}

std::string format_table_header() {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%10s %10s %8s %6s %10s  %-16s %8s %5s %8s %6s", "E", "PE", "NPE",
                "P(m)", "E/2", "E/2 factors", "GP", "GR%", "calc.GP", "err%");
  return buf;
}

std::string format_table_row(const RowValues& r) {
  char buf[256];
  const std::string err = r.error_pct ? std::to_string(*r.error_pct) : "NA";
  std::snprintf(buf, sizeof buf, "%10llu %10llu %8llu %6llu %10llu  %-16s %8llu %5lld %8lld %6s",
                static_cast<unsigned long long>(r.E), static_cast<unsigned long long>(r.PE),
                static_cast<unsigned long long>(r.NPE), static_cast<unsigned long long>(r.P_m),
                static_cast<unsigned long long>(r.half), r.half_factors.c_str(),
                static_cast<unsigned long long>(r.GP), static_cast<long long>(r.GR_pct),
                static_cast<long long>(r.calc_GP), err.c_str());
  return buf;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ',' && !quoted) {
      fields.emplace_back();
    } else {
      fields.back() += ch;
    }
  }
  if (quoted) throw std::runtime_error("csv: unterminated quote");
  return fields;
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t pos = 0;
  const auto v = std::stoull(s, &pos);
  if (pos != s.size() || s.empty() || s[0] == '-') throw std::runtime_error("csv: bad integer '" + s + "'");
  return v;
}

std::int64_t to_i64(const std::string& s) {
  std::size_t pos = 0;
  const auto v = std::stoll(s, &pos);
  if (pos != s.size()) throw std::runtime_error("csv: bad integer '" + s + "'");
  return v;
}

}  // namespace

std::vector<RowValues> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("csv: missing or wrong header");
  std::vector<RowValues> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 10) throw std::runtime_error("csv: expected 10 fields, got " + std::to_string(f.size()));
    try {
      RowValues r;
      r.E = to_u64(f[0]);
      r.PE = to_u64(f[1]);
      r.NPE = to_u64(f[2]);
      r.P_m = to_u64(f[3]);
      r.half = to_u64(f[4]);
      r.half_factors = f[5];
      r.GP = to_u64(f[6]);
      r.GR_pct = to_i64(f[7]);
      r.calc_GP = to_i64(f[8]);
      if (f[9] != "NA") r.error_pct = to_i64(f[9]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw std::runtime_error("csv: bad number in line '" + line + "'");
    }
  }
  return rows;
}

}  // namespace goldbach
