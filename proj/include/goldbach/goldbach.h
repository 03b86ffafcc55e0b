/*
 * C interface to the Goldbach partition toolkit.
 *
 * Objects are opaque handles created and released through this API. Every
 * fallible call returns a gb_status; on failure gb_last_error() describes the
 * problem for the calling thread until its next API call.
 */
#ifndef GOLDBACH_GOLDBACH_H
#define GOLDBACH_GOLDBACH_H

#include <stddef.h>
#include <stdint.h>

#if defined(GOLDBACH_BUILDING_LIBRARY)
#define GB_API __attribute__((visibility("default")))
#else
#define GB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes (I/O maps to 2 as well). */
typedef enum gb_status {
  GB_OK = 0,
  GB_ERR_USAGE = 1,    /* invalid argument: odd E, E <= 2, bad config */
  GB_ERR_RANGE = 2,    /* sieve coverage or resource limit */
  GB_ERR_INTERNAL = 3, /* invariant breach */
  GB_ERR_IO = 4        /* file could not be read, written or validated */
} gb_status;

#define GB_FACTORS_MAX 256
#define GB_SIGNATURE_MAX 128

typedef struct gb_table gb_table;
typedef struct gb_bound_report gb_bound_report;
typedef struct gb_audit gb_audit;

typedef struct gb_row {
  uint64_t e;
  uint64_t pe;
  uint64_t npe;
  uint64_t pm;
  uint64_t half;
  char half_factors[GB_FACTORS_MAX];
  uint64_t gp;
  int64_t gr_pct;
  int64_t calc_gp;
  int64_t error_pct;
  int has_error_pct;
} gb_row;

typedef struct gb_estimate {
  uint64_t e;
  double product_estimate;
  int64_t product_estimate_int;
  double hl_estimate;
  uint64_t observed_gp;
  int64_t error_pct;
  int has_error_pct;
  double observed_over_hl;
  char band_signature[GB_SIGNATURE_MAX];
  int64_t band_multiplier_num;
  int64_t band_multiplier_den;
} gb_estimate;

typedef struct gb_bound_summary {
  uint64_t e;
  uint64_t pm;
  size_t chain_length;
  int64_t stsp_min_g1;
  int64_t closed_form_min_g1;
  int64_t min_g2;
  int64_t min_gp;
  int small_e_floor;
  /* Exact counts and verdicts; valid when has_actual is nonzero. */
  int has_actual;
  uint64_t g1, g2, gp;
  int g1_ge_stsp, g1_ge_closed_form, g2_ge_min_g2, gp_ge_min_gp;
  int chain_floor_holds, chain_preconditions;
  double magnitude_gap;
} gb_bound_summary;

typedef struct gb_scan_config {
  uint64_t e_min;
  uint64_t e_max;
  uint64_t step;           /* 0 selects 2 */
  unsigned threads;        /* 0 selects 1 */
  const char* output_path; /* NULL: rows go to the callback only */
  int csv;                 /* nonzero: CSV, else aligned text table */
  int audit_bounds;
} gb_scan_config;

typedef struct gb_scan_summary {
  uint64_t rows;
  uint64_t gp_min, gp_max;
  double gp_mean;
  uint64_t gp_at_least_one;
  int audited;
  uint64_t violations_g1_stsp, violations_g1_closed_form, violations_g2, violations_gp,
      violations_chain, precondition_failures;
  uint64_t total_violations;
} gb_scan_summary;

/* bound is NULL unless the scan audits bounds. */
typedef void (*gb_row_callback)(const gb_row* row, const gb_bound_summary* bound, void* user);

GB_API const char* gb_version(void);
GB_API const char* gb_last_error(void);

/* Sieve tables. */
GB_API gb_status gb_table_build(uint64_t limit, unsigned threads, gb_table** out);
GB_API gb_status gb_table_load(const char* path, uint64_t min_limit, gb_table** out);
GB_API gb_status gb_table_save(const gb_table* table, const char* path);
/* Loads cache_path when it covers min_limit, otherwise builds a table and,
 * if cache_path is non-NULL, rewrites the cache (a failed write is ignored). */
GB_API gb_status gb_table_acquire(uint64_t min_limit, const char* cache_path, unsigned threads,
                                  gb_table** out);
GB_API void gb_table_free(gb_table* table);
GB_API uint64_t gb_table_limit(const gb_table* table);

GB_API gb_status gb_is_prime(const gb_table* table, uint64_t n, int* out);
GB_API gb_status gb_largest_prime_below(const gb_table* table, uint64_t e, uint64_t* out);
GB_API gb_status gb_prime_count_up_to(const gb_table* table, uint64_t x, uint64_t* out);

/* Exact counts for one E. */
GB_API gb_status gb_g1_count(const gb_table* table, uint64_t e, uint64_t* out);
GB_API gb_status gb_g2_count(const gb_table* table, uint64_t e, uint64_t* out);
GB_API gb_status gb_gp_count(const gb_table* table, uint64_t e, uint64_t* out);

GB_API gb_status gb_row_compute(const gb_table* table, uint64_t e, gb_row* out);
GB_API gb_status gb_estimate_compute(const gb_table* table, uint64_t e, gb_estimate* out);

/* Bound chain. table may be NULL, in which case only bound fields are filled. */
GB_API gb_status gb_bound_compute(const gb_table* table, uint64_t e, gb_bound_report** out);
GB_API void gb_bound_free(gb_bound_report* report);
GB_API gb_status gb_bound_get_summary(const gb_bound_report* report, gb_bound_summary* out);
/* n is 0-based: index 0 is T(1). */
GB_API gb_status gb_bound_chain_step(const gb_bound_report* report, size_t n, int64_t* t_value,
                                     int64_t* floor_value);

/* Reference-table audit; the table must cover 9998. */
GB_API gb_status gb_audit_run(const gb_table* table, gb_audit** out);
GB_API void gb_audit_free(gb_audit* audit);
GB_API size_t gb_audit_size(const gb_audit* audit);
GB_API gb_status gb_audit_row(const gb_audit* audit, size_t i, gb_row* computed, gb_row* published);
/* Comma-separated mismatching field names ("" when the row agrees). */
GB_API gb_status gb_audit_mismatches(const gb_audit* audit, size_t i, char* buf, size_t cap);

GB_API gb_status gb_scan(const gb_table* table, const gb_scan_config* config, gb_row_callback cb,
                         void* user, gb_scan_summary* out);

/* E,GP,band_signature,multiplier_num,multiplier_den for even E in [e_min, e_max]. */
GB_API gb_status gb_comet_export(const gb_table* table, uint64_t e_min, uint64_t e_max,
                                 const char* path);

/* Renders a row (or the header when row is NULL) without a trailing newline. */
GB_API gb_status gb_format_row(const gb_row* row, int csv, char* buf, size_t cap);

#ifdef __cplusplus
}
#endif

#endif /* GOLDBACH_GOLDBACH_H */
