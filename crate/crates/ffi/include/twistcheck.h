#ifndef TWISTCHECK_H
#define TWISTCHECK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every binding.
typedef enum TcStatus {
  // Success.
  TC_OK = 0,
  // A required pointer argument was null.
  TC_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  TC_UTF8 = 2,
  // Malformed input (JSON or spec syntax).
  TC_PARSE = 3,
  // A precondition or validation failure.
  TC_PRECONDITION = 4,
  // An internal panic was caught at the boundary.
  TC_PANIC = 5,
} TcStatus;

// Opaque handle to a loaded character table.
typedef struct TcTable TcTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; do not free.
const char *tc_version(void);

// Message for the most recent failure on this thread; valid until the next
// failing call. Do not free.
const char *tc_last_error_message(void);

// Release a string returned by any report function.
//
// # Safety
// `s` must be null or a pointer previously returned by this library.
void tc_string_free(char *s);

// Parse and validate a character table document.
//
// # Safety
// `json` must be a valid NUL-terminated string and `out` a valid pointer.
enum TcStatus tc_table_load_json(const char *json, struct TcTable **out);

// Build one of the built-in tables: `s3`, `d4`, `q8`, `cyclic:N`,
// `heisenberg:P`, `product:<spec>,<spec>`.
//
// # Safety
// `spec` must be a valid NUL-terminated string and `out` a valid pointer.
enum TcStatus tc_table_builtin(const char *spec, struct TcTable **out);

// Release a table handle.
//
// # Safety
// `table` must be null or a pointer returned by a load function, not yet
// freed.
void tc_table_free(struct TcTable *table);

// Number of conjugacy classes.
//
// # Safety
// `table` must be a live handle; `out` a valid pointer.
enum TcStatus tc_table_num_classes(const struct TcTable *table, size_t *out);

// Number of irreducible characters (rows).
//
// # Safety
// `table` must be a live handle; `out` a valid pointer.
enum TcStatus tc_table_num_irreducibles(const struct TcTable *table, size_t *out);

// Number of subgroup embeddings carried by the table.
//
// # Safety
// `table` must be a live handle; `out` a valid pointer.
enum TcStatus tc_table_num_embeddings(const struct TcTable *table, size_t *out);

// Canonical JSON document of the table (byte-exact round trips).
//
// # Safety
// `table` must be a live handle; `out_json` a valid pointer. Free the result
// with [`tc_string_free`].
enum TcStatus tc_table_to_json(const struct TcTable *table, char **out_json);

// Run every invariant check; the JSON report lists each check by name.
// Returns TcOk even when checks fail (consult `all_passed` in the report).
//
// # Safety
// `table` must be a live handle; `out_json` a valid pointer. Free the result
// with [`tc_string_free`].
enum TcStatus tc_table_validate(const struct TcTable *table, char **out_json);

// Power character report; `mode` is `tensor`, `sym`, `ext` or `adjoint`.
//
// # Safety
// `table` must be a live handle; `mode` a valid string; `out_json` a valid
// pointer. Free the result with [`tc_string_free`].
enum TcStatus tc_powers_report(const struct TcTable *table,
                               size_t chi,
                               const char *mode,
                               uint32_t k,
                               char **out_json);

// Twist report for a pair of rows; `subgroup < 0` means no restriction.
//
// # Safety
// `table` must be a live handle; `out_json` a valid pointer. Free the result
// with [`tc_string_free`].
enum TcStatus tc_twist_report(const struct TcTable *table,
                              size_t chi1,
                              size_t chi2,
                              uint32_t k,
                              int64_t subgroup,
                              char **out_json);

// Clifford analysis of one row against a subgroup embedding.
//
// # Safety
// `table` must be a live handle; `out_json` a valid pointer. Free the result
// with [`tc_string_free`].
enum TcStatus tc_clifford_report(const struct TcTable *table,
                                 size_t chi,
                                 size_t subgroup,
                                 char **out_json);

// Density report for a pair of rows; `subgroup < 0` means no coset data.
//
// # Safety
// `table` must be a live handle; `out_json` a valid pointer. Free the result
// with [`tc_string_free`].
enum TcStatus tc_density_report(const struct TcTable *table,
                                size_t chi1,
                                size_t chi2,
                                int64_t subgroup,
                                char **out_json);

// Recover a weight multiset from its k-th power image; `weights_json` is a
// weight multiset document, `mode` is `tensor` or `sym`.
//
// # Safety
// `weights_json` and `mode` must be valid strings; `out_json` a valid
// pointer. Free the result with [`tc_string_free`].
enum TcStatus tc_recover_weights(const char *weights_json,
                                 const char *mode,
                                 uint32_t n,
                                 uint32_t k,
                                 char **out_json);

// Run the Heisenberg demonstration pipeline for an odd prime n. Returns
// TcOk iff the report was produced; consult `all_passed` inside.
//
// # Safety
// `out_json` must be a valid pointer. Free the result with
// [`tc_string_free`].
enum TcStatus tc_demo_heisenberg(uint64_t n, char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* TWISTCHECK_H */
