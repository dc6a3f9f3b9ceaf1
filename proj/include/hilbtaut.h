#ifndef HILBTAUT_H
#define HILBTAUT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HILBTAUT_BUILDING)
#define HT_API __attribute__((visibility("default")))
#else
#define HT_API
#endif

/* Status codes match the library's error tags. */
typedef enum {
  HT_OK = 0,
  HT_SYNTAX_ERROR = 10,
  HT_UNKNOWN_SYMBOL = 11,
  HT_DEGREE_MISMATCH = 12,
  HT_RING_MISMATCH = 13,
  HT_INDEX_ERROR = 14,
  HT_UNKNOWN_MAP = 15,
  HT_UNSUPPORTED = 20,
  HT_VARIETY_MISMATCH = 21,
  HT_ZERO_RANK = 22,
  HT_NOT_LOCALLY_FREE = 30,
  HT_MISSING_DATA = 31,
  HT_H2_NONZERO = 32,
  HT_K_TOO_SMALL = 33,
  HT_SHAPE_MISMATCH = 40,
  HT_CONFIG_INVALID = 50,
  HT_INVALID_ARGUMENT = 60,
  HT_INTERNAL = 99
} ht_status;

typedef struct ht_report ht_report;

/* workers = 0: HILBTAUT_WORKERS, else hardware concurrency. inject may be NULL. */
HT_API ht_status ht_verify(unsigned workers, const char* inject, ht_report** out);
/* config_json: a hilbtaut.jobconfig/1 document. */
HT_API ht_status ht_run_slope(const char* config_json, ht_report** out);
/* search_bound <= 0: the bound in the config. */
HT_API ht_status ht_run_stability(const char* config_json, int64_t search_bound, unsigned workers, ht_report** out);
HT_API ht_status ht_run_cohomology(const char* config_json, ht_report** out);
/* has_k = 0 ignores k; config_json may be NULL. */
HT_API ht_status ht_run_deform(int has_k, long k, const char* config_json, ht_report** out);
HT_API ht_status ht_eval(const char* ring, const char* expr, ht_report** out);

/* Strings stay owned by the report. */
HT_API const char* ht_report_json(const ht_report* r);
HT_API const char* ht_report_text(const ht_report* r);
HT_API int ht_report_passed(const ht_report* r);
HT_API void ht_report_free(ht_report* r);

/* Message of the last failing call on this thread, "" if none. */
HT_API const char* ht_last_error(void);
HT_API const char* ht_version(void);

#ifdef __cplusplus
}
#endif

#endif
