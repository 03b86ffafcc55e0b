#include "goldbach/goldbach.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <new>
#include <stdexcept>
#include <string>

#include "goldbach/bounds.hpp"
#include "goldbach/estimates.hpp"
#include "goldbach/partitions.hpp"
#include "goldbach/prime_table.hpp"
#include "goldbach/report.hpp"

struct gb_table {
  goldbach::PrimeTable rep;
};

struct gb_bound_report {
  goldbach::BoundReport rep;
};

struct gb_audit {
  std::vector<goldbach::TableRow> rep;
};

namespace {

thread_local std::string last_error;

template <typename F>
gb_status guard(F&& f) {
  last_error.clear();
  try {
    f();
    return GB_OK;
  } catch (const std::domain_error& e) {
    last_error = e.what();
    return GB_ERR_USAGE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return GB_ERR_USAGE;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return GB_ERR_RANGE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GB_ERR_RANGE;
  } catch (const std::overflow_error& e) {
    last_error = e.what();
    return GB_ERR_INTERNAL;
  } catch (const std::logic_error& e) {
    last_error = e.what();
    return GB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GB_ERR_IO;
  } catch (...) {
    last_error = "unknown error";
    return GB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is NULL");
}

void copy_string(const std::string& s, char* dst, std::size_t cap) {
  if (s.size() + 1 > cap) throw std::out_of_range("string does not fit output buffer");
  std::memcpy(dst, s.c_str(), s.size() + 1);
}

gb_row to_c(const goldbach::RowValues& r) {
  gb_row out{};
  out.e = r.E;
  out.pe = r.PE;
  out.npe = r.NPE;
  out.pm = r.P_m;
  out.half = r.half;
  copy_string(r.half_factors, out.half_factors, sizeof out.half_factors);
  out.gp = r.GP;
  out.gr_pct = r.GR_pct;
  out.calc_gp = r.calc_GP;
  out.has_error_pct = r.error_pct.has_value();
  out.error_pct = r.error_pct.value_or(0);
  return out;
}

goldbach::RowValues from_c(const gb_row& r) {
  goldbach::RowValues out;
  out.E = r.e;
  out.PE = r.pe;
  out.NPE = r.npe;
  out.P_m = r.pm;
  out.half = r.half;
  out.half_factors.assign(r.half_factors, strnlen(r.half_factors, sizeof r.half_factors));
  out.GP = r.gp;
  out.GR_pct = r.gr_pct;
  out.calc_GP = r.calc_gp;
  if (r.has_error_pct) out.error_pct = r.error_pct;
  return out;
}

gb_bound_summary summarize(const goldbach::BoundReport& b) {
  gb_bound_summary s{};
  s.e = b.E;
  s.pm = b.p_m;
  s.chain_length = b.t_chain.size();
  s.stsp_min_g1 = b.stsp_min_g1;
  s.closed_form_min_g1 = b.closed_form_min_g1;
  s.min_g2 = b.min_g2;
  s.min_gp = b.min_gp;
  s.small_e_floor = b.small_e_floor;
  if (b.actual && b.verdicts) {
    s.has_actual = 1;
    s.g1 = b.actual->G1;
    s.g2 = b.actual->G2;
    s.gp = b.actual->GP;
    const auto& v = *b.verdicts;
    s.g1_ge_stsp = v.g1_ge_stsp;
    s.g1_ge_closed_form = v.g1_ge_closed_form;
    s.g2_ge_min_g2 = v.g2_ge_min_g2;
    s.gp_ge_min_gp = v.gp_ge_min_gp;
    s.chain_floor_holds = v.chain_floor_holds;
    s.chain_preconditions = v.chain_preconditions;
    s.magnitude_gap = v.magnitude_gap;
  }
  return s;
}

}  // namespace

extern "C" {

const char* gb_version(void) { return "1.0.0"; }

const char* gb_last_error(void) { return last_error.c_str(); }

gb_status gb_table_build(uint64_t limit, unsigned threads, gb_table** out) {
  return guard([&] {
    require(out, "out");
    *out = new gb_table{goldbach::PrimeTable::build(limit, threads == 0 ? 1 : threads)};
  });
}

gb_status gb_table_load(const char* path, uint64_t min_limit, gb_table** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new gb_table{goldbach::PrimeTable::load(path, min_limit)};
  });
}

gb_status gb_table_save(const gb_table* table, const char* path) {
  return guard([&] {
    require(table, "table");
    require(path, "path");
    table->rep.save(path);
  });
}

gb_status gb_table_acquire(uint64_t min_limit, const char* cache_path, unsigned threads,
                           gb_table** out) {
  return guard([&] {
    require(out, "out");
    if (cache_path != nullptr && *cache_path != '\0') {
      try {
        *out = new gb_table{goldbach::PrimeTable::load(cache_path, min_limit)};
        return;
      } catch (const std::bad_alloc&) {
        throw;
      } catch (const std::exception&) {
        // Missing, stale or corrupt cache: rebuild below.
      }
    }
    auto* t = new gb_table{goldbach::PrimeTable::build(min_limit, threads == 0 ? 1 : threads)};
    if (cache_path != nullptr && *cache_path != '\0') {
      try {
        t->rep.save(cache_path);
      } catch (const std::exception&) {
      }
    }
    *out = t;
  });
}

void gb_table_free(gb_table* table) { delete table; }

uint64_t gb_table_limit(const gb_table* table) { return table ? table->rep.limit() : 0; }

gb_status gb_is_prime(const gb_table* table, uint64_t n, int* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = table->rep.is_prime(n) ? 1 : 0;
  });
}

gb_status gb_largest_prime_below(const gb_table* table, uint64_t e, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = goldbach::largest_prime_below(table->rep, e);
  });
}

gb_status gb_prime_count_up_to(const gb_table* table, uint64_t x, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = goldbach::prime_count_up_to(table->rep, x);
  });
}

gb_status gb_g1_count(const gb_table* table, uint64_t e, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = goldbach::g1_count(table->rep, e);
  });
}

gb_status gb_g2_count(const gb_table* table, uint64_t e, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = goldbach::g2_count(table->rep, e);
  });
}

gb_status gb_gp_count(const gb_table* table, uint64_t e, uint64_t* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = goldbach::gp_count(table->rep, e);
  });
}

gb_status gb_row_compute(const gb_table* table, uint64_t e, gb_row* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = to_c(goldbach::row(table->rep, e));
  });
}

gb_status gb_estimate_compute(const gb_table* table, uint64_t e, gb_estimate* out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    const auto r = goldbach::estimate_record(table->rep, e);
    gb_estimate c{};
    c.e = r.E;
    c.product_estimate = r.product_estimate;
    c.product_estimate_int = r.product_estimate_int;
    c.hl_estimate = r.hl_estimate;
    c.observed_gp = r.observed_gp;
    c.has_error_pct = r.error_pct.has_value();
    c.error_pct = r.error_pct.value_or(0);
    c.observed_over_hl = r.observed_over_hl;
    copy_string(r.band.signature(), c.band_signature, sizeof c.band_signature);
    c.band_multiplier_num = r.band.multiplier.num();
    c.band_multiplier_den = r.band.multiplier.den();
    *out = c;
  });
}

gb_status gb_bound_compute(const gb_table* table, uint64_t e, gb_bound_report** out) {
  return guard([&] {
    require(out, "out");
    auto report = table ? goldbach::verify_bounds(table->rep, e) : goldbach::min_gp_bound(e);
    *out = new gb_bound_report{std::move(report)};
  });
}

void gb_bound_free(gb_bound_report* report) { delete report; }

gb_status gb_bound_get_summary(const gb_bound_report* report, gb_bound_summary* out) {
  return guard([&] {
    require(report, "report");
    require(out, "out");
    *out = summarize(report->rep);
  });
}

gb_status gb_bound_chain_step(const gb_bound_report* report, size_t n, int64_t* t_value,
                              int64_t* floor_value) {
  return guard([&] {
    require(report, "report");
    if (n >= report->rep.t_chain.size()) throw std::out_of_range("chain index out of range");
    if (t_value) *t_value = report->rep.t_chain[n];
    if (floor_value) *floor_value = report->rep.chain_floor[n];
  });
}

gb_status gb_audit_run(const gb_table* table, gb_audit** out) {
  return guard([&] {
    require(table, "table");
    require(out, "out");
    *out = new gb_audit{goldbach::appendix_a_audit(table->rep)};
  });
}

void gb_audit_free(gb_audit* audit) { delete audit; }

size_t gb_audit_size(const gb_audit* audit) { return audit ? audit->rep.size() : 0; }

gb_status gb_audit_row(const gb_audit* audit, size_t i, gb_row* computed, gb_row* published) {
  return guard([&] {
    require(audit, "audit");
    if (i >= audit->rep.size()) throw std::out_of_range("audit row index out of range");
    const auto& row = audit->rep[i];
    if (computed) *computed = to_c(row.values);
    if (published) *published = row.paper_values ? to_c(*row.paper_values) : gb_row{};
  });
}

gb_status gb_audit_mismatches(const gb_audit* audit, size_t i, char* buf, size_t cap) {
  return guard([&] {
    require(audit, "audit");
    require(buf, "buf");
    if (i >= audit->rep.size()) throw std::out_of_range("audit row index out of range");
    std::string joined;
    for (const auto& m : audit->rep[i].mismatches) {
      if (!joined.empty()) joined += ',';
      joined += m;
    }
    copy_string(joined, buf, cap);
  });
}

gb_status gb_scan(const gb_table* table, const gb_scan_config* config, gb_row_callback cb,
                  void* user, gb_scan_summary* out) {
  return guard([&] {
    require(table, "table");
    require(config, "config");
    goldbach::ScanConfig c;
    c.e_min = config->e_min;
    c.e_max = config->e_max;
    c.step = config->step == 0 ? 2 : config->step;
    c.threads = config->threads == 0 ? 1 : config->threads;
    c.format = config->csv ? goldbach::OutputFormat::Csv : goldbach::OutputFormat::Table;
    c.audit_bounds = config->audit_bounds != 0;

    auto forward = [&](const goldbach::RowValues& r, const goldbach::BoundReport* b) {
      if (cb == nullptr) return;
      const gb_row row = to_c(r);
      gb_bound_summary bs{};
      if (b) bs = summarize(*b);
      cb(&row, b ? &bs : nullptr, user);
    };
    goldbach::ScanSummary s;
    if (config->output_path != nullptr) {
      c.output = config->output_path;
      s = goldbach::scan_to_file(table->rep, c, forward);
    } else {
      s = goldbach::scan(table->rep, c, forward);
    }

    if (out) {
      gb_scan_summary o{};
      o.rows = s.rows;
      o.gp_min = s.gp_min;
      o.gp_max = s.gp_max;
      o.gp_mean = s.gp_mean;
      o.gp_at_least_one = s.gp_at_least_one;
      o.audited = s.audited;
      o.violations_g1_stsp = s.violations_g1_stsp;
      o.violations_g1_closed_form = s.violations_g1_closed_form;
      o.violations_g2 = s.violations_g2;
      o.violations_gp = s.violations_gp;
      o.violations_chain = s.violations_chain;
      o.precondition_failures = s.precondition_failures;
      o.total_violations = s.total_violations();
      *out = o;
    }
  });
}

gb_status gb_comet_export(const gb_table* table, uint64_t e_min, uint64_t e_max, const char* path) {
  return guard([&] {
    require(table, "table");
    require(path, "path");
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    try {
      {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        goldbach::write_comet_csv(out, table->rep, e_min, e_max);
        out.close();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
      }
      std::filesystem::rename(tmp, target);
    } catch (...) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw;
    }
  });
}

gb_status gb_format_row(const gb_row* row, int csv, char* buf, size_t cap) {
  return guard([&] {
    require(buf, "buf");
    std::string s;
    if (row == nullptr) {
      s = csv ? std::string(goldbach::kCsvHeader) : goldbach::format_table_header();
    } else {
      const auto r = from_c(*row);
      s = csv ? goldbach::format_csv_row(r) : goldbach::format_table_row(r);
    }
    copy_string(s, buf, cap);
  });
}

}  // extern "C"
