#pragma once

// Reference-table rows, the reference-table audit, range scans and CSV I/O.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goldbach/bounds.hpp"
#include "goldbach/prime_table.hpp"

namespace goldbach {

struct RowValues {
  std::uint64_t E = 0;
  std::uint64_t PE = 0;
  std::uint64_t NPE = 0;
  std::uint64_t P_m = 0;
  std::uint64_t half = 0;
  std::string half_factors;
  std::uint64_t GP = 0;
  std::int64_t GR_pct = 0;
  std::int64_t calc_GP = 0;
  std::optional<std::int64_t> error_pct;

  friend bool operator==(const RowValues&, const RowValues&) = default;
};

struct TableRow {
  RowValues values;
  std::optional<RowValues> paper_values;
  std::vector<std::string> mismatches;  // field names; only set with paper_values
};

inline constexpr const char* kCsvHeader = "E,PE,NPE,Pm,half,half_factors,GP,GR_pct,calc_GP,error_pct";

// "P" when E/2 is prime, otherwise every prime <= P(m) dividing E/2, ascending.
std::string half_factors(const PrimeTable& table, std::uint64_t E);

RowValues row(const PrimeTable& table, std::uint64_t E);
RowValues row(const PrimeTable& table, const PartitionStats& stats);

// The 29 reference rows, transcribed as published.
std::span<const RowValues> appendix_a_reference();

// Field names where computed and reference rows differ.
std::vector<std::string> compare_rows(const RowValues& computed, const RowValues& reference);

// Recomputes every reference row. Needs a table covering 9998.
std::vector<TableRow> appendix_a_audit(const PrimeTable& table);

enum class OutputFormat { Table, Csv };

struct ScanConfig {
  std::uint64_t e_min = 4;
  std::uint64_t e_max = 100;
  std::uint64_t step = 2;
  unsigned threads = 1;
  std::optional<std::filesystem::path> output;
  OutputFormat format = OutputFormat::Table;
  bool audit_bounds = false;
};

struct ScanSummary {
  std::uint64_t rows = 0;
  std::uint64_t gp_min = 0;
  std::uint64_t gp_max = 0;
  double gp_mean = 0.0;
  std::uint64_t gp_at_least_one = 0;

  // Populated with audit_bounds.
  bool audited = false;
  std::uint64_t violations_g1_stsp = 0;         // (a)
  std::uint64_t violations_g1_closed_form = 0;  // (b)
  std::uint64_t violations_g2 = 0;              // (c)
  std::uint64_t violations_gp = 0;              // (d)
  std::uint64_t violations_chain = 0;           // (e)
  std::uint64_t precondition_failures = 0;
  std::vector<std::uint64_t> violating_E;       // first few offenders

  std::uint64_t total_violations() const {
    return violations_g1_stsp + violations_g1_closed_form + violations_g2 + violations_gp +
           violations_chain;
  }
};

using RowSink = std::function<void(const RowValues&, const BoundReport*)>;

// Throws std::domain_error for a malformed config.
void validate(const ScanConfig& config);

// Rows are delivered to `sink` in ascending E on the calling thread, however
// many workers compute them. config.output is ignored here.
ScanSummary scan(const PrimeTable& table, const ScanConfig& config, const RowSink& sink);

// scan() writing config.output (or `out` when no path is set) in the chosen
// format. File output goes through a temporary that replaces the target only
// after the last row is written; on failure no partial file is left behind.
// `also`, when set, sees every row after it has been written.
ScanSummary scan_to_stream(const PrimeTable& table, const ScanConfig& config, std::ostream& out,
                           const RowSink& also = {});
ScanSummary scan_to_file(const PrimeTable& table, const ScanConfig& config, const RowSink& also = {});

std::string format_csv_row(const RowValues& r);
std::string format_table_header();
std::string format_table_row(const RowValues& r);

// Parses CSV produced by format_csv_row (header line required).
// Throws std::runtime_error on malformed input.
std::vector<RowValues> parse_csv(std::istream& in);

}  // namespace goldbach
