#ifndef BRAIDSIG_H
#define BRAIDSIG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point.
typedef enum BraidsigStatus {
  BRAIDSIG_STATUS_OK = 0,
  BRAIDSIG_STATUS_NULL_ARGUMENT = 1,
  BRAIDSIG_STATUS_INVALID_UTF8 = 2,
  BRAIDSIG_STATUS_PARSE_ERROR = 3,
  BRAIDSIG_STATUS_COMPUTE_ERROR = 4,
} BraidsigStatus;

// Opaque invariant report.
typedef struct BraidsigReport BraidsigReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Compute the full report for a word in the grammar
// `INDEX("^"EXP)? (WS INDEX("^"EXP)?)*`. `strands` of 0 infers the
// count from the word. On success `*out` owns a new report.
//
// # Safety
// `word` must be a valid NUL-terminated string and `out` a valid
// pointer.
enum BraidsigStatus braidsig_report_new(const char *word,
                                        uintptr_t strands,
                                        bool exhaustive_twist,
                                        struct BraidsigReport **out);

// Release a report handle. Null is a no-op.
//
// # Safety
// `report` must come from `braidsig_report_new` and not be used after.
void braidsig_report_free(struct BraidsigReport *report);

// First Betti number of the fiber surface. Returns 0 on a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_b1(const struct BraidsigReport *report);

// Link signature (positive for positive braid closures). Returns 0 on
// a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_sigma(const struct BraidsigReport *report);

// Signature defect b1 - sigma. Returns 0 on a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_delta_sigma(const struct BraidsigReport *report);

// Twist number. Returns 0 on a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_twist(const struct BraidsigReport *report);

// Number of link components of the closure. Returns 0 on a null
// handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_components(const struct BraidsigReport *report);

// Letter count of the word. Returns 0 on a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_letters(const struct BraidsigReport *report);

// Strand count. Returns 0 on a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_strands(const struct BraidsigReport *report);

// Disjoint alternating subwords found by the certificate. Returns 0 on
// a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_subword_count(const struct BraidsigReport *report);

// 1 when (1/2) delta sigma <= t <= (21/2) delta sigma. Returns 0 on a
// null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_thm3_ok(const struct BraidsigReport *report);

// 1 when every twist region has exponent >= 3. Returns 0 on a null
// handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_sufficiently_complicated(const struct BraidsigReport *report);

// 1 when the hyperbolicity criterion holds. Returns 0 on a null
// handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
int64_t braidsig_report_hyperbolic(const struct BraidsigReport *report);

// Serialize the report as JSON. The returned string is owned by the
// caller and must be released with `braidsig_string_free`; returns
// null on a null handle.
//
// # Safety
// `report` must be a live handle from `braidsig_report_new`.
char *braidsig_report_json(const struct BraidsigReport *report);

// Release a string returned by `braidsig_report_json`.
//
// # Safety
// `s` must come from this library and not be used after.
void braidsig_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BRAIDSIG_H */
