/* Copyright 2026 The estream-portfolio Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the portfolio stream ciphers, the known-answer verifier
 * and the benchmark harness.
 *
 * Functions that can fail return es_status. On failure a description is
 * available from es_last_error() on the calling thread until the next
 * failing call. Strings returned as char* are owned by the caller and must
 * be released with es_string_free().
 */
#ifndef ESTREAM_ESTREAM_H_
#define ESTREAM_ESTREAM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ESTREAM_BUILDING_DLL)
#    define ESTREAM_API __declspec(dllexport)
#  else
#    define ESTREAM_API __declspec(dllimport)
#  endif
#else
#  define ESTREAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum es_status {
  ES_OK = 0,
  ES_BAD_KEY_LENGTH = 1,
  ES_BAD_IV_LENGTH = 2,
  ES_POSITION_OVERFLOW = 3,
  ES_UNKNOWN_CIPHER_ID = 4,
  ES_UNSUPPORTED = 5,
  ES_PARSE_ERROR = 6,
  ES_BAD_HEX = 7,
  ES_INVALID_ARGUMENT = 8,
  ES_IO_ERROR = 9,
  ES_INTERNAL_ERROR = 100,
  ES_STATUS_MAX_ = 0x7FFFFFFF /* forces a 32-bit representation */
} es_status;

typedef enum es_cipher_id {
  ES_SALSA20_12 = 0,
  ES_SALSA20_8 = 1,
  ES_SALSA20_20 = 2,
  ES_RABBIT = 3,
  ES_HC128 = 4,
  ES_SOSEMANUK = 5,
  ES_CIPHER_ID_MAX_ = 0x7FFFFFFF /* forces a 32-bit representation */
} es_cipher_id;

ESTREAM_API const char* es_version(void);
ESTREAM_API const char* es_status_name(es_status status);
ESTREAM_API const char* es_last_error(void);
ESTREAM_API void es_string_free(char* s);

/* Accepts names such as "SALSA20_12", "salsa20/12", "hc-128". */
ESTREAM_API es_status es_cipher_id_parse(const char* text, es_cipher_id* out);
ESTREAM_API const char* es_cipher_id_name(es_cipher_id id);
ESTREAM_API const char* es_cipher_display_name(es_cipher_id id);

/* ---- ciphers ---------------------------------------------------------- */

typedef struct es_cipher es_cipher;

ESTREAM_API es_status es_cipher_new(es_cipher_id id, const uint8_t* key, size_t key_len, const uint8_t* iv,
                                    size_t iv_len, es_cipher** out);
/* Independent copy at the same stream position. */
ESTREAM_API es_status es_cipher_clone(const es_cipher* c, es_cipher** out);
ESTREAM_API void es_cipher_free(es_cipher* c);

ESTREAM_API es_status es_cipher_keystream(es_cipher* c, uint8_t* out, size_t n);
/* out may equal in. */
ESTREAM_API es_status es_cipher_apply(es_cipher* c, const uint8_t* in, uint8_t* out, size_t n);
ESTREAM_API es_status es_cipher_reset(es_cipher* c, const uint8_t* iv, size_t iv_len);
/* Salsa20 family only; other ciphers return ES_UNSUPPORTED. */
ESTREAM_API es_status es_cipher_seek(es_cipher* c, uint64_t offset);
ESTREAM_API es_status es_cipher_skip(es_cipher* c, uint64_t n);
ESTREAM_API uint64_t es_cipher_position(const es_cipher* c);
ESTREAM_API es_cipher_id es_cipher_get_id(const es_cipher* c);
ESTREAM_API int es_cipher_seekable(const es_cipher* c);

/* ---- known-answer verification --------------------------------------- */

typedef struct es_verify_report es_verify_report;

ESTREAM_API es_status es_verify_text(const char* text, size_t len, es_verify_report** out);
ESTREAM_API size_t es_verify_total(const es_verify_report* r);
ESTREAM_API size_t es_verify_passed(const es_verify_report* r);
ESTREAM_API size_t es_verify_failure_count(const es_verify_report* r);
ESTREAM_API es_status es_verify_failure(const es_verify_report* r, size_t index, size_t* record_index,
                                        size_t* check_index, uint64_t* offset);
ESTREAM_API char* es_verify_format(const es_verify_report* r);
ESTREAM_API void es_verify_free(es_verify_report* r);

/* ---- benchmark --------------------------------------------------------- */

typedef struct es_bench_config {
  const size_t* lengths; /* NULL selects 16, 32, ..., 2048 */
  size_t n_lengths;
  size_t iterations;
  size_t warmup_iterations;
  int include_setup;
  const es_cipher_id* ciphers; /* NULL selects the four portfolio ciphers */
  size_t n_ciphers;
  uint64_t seed;
} es_bench_config;

typedef struct es_bench_cell {
  es_cipher_id cipher;
  size_t length_bytes;
  size_t iterations;
  double mean_ms;
  double median_ms;
  double stddev_ms;
  double min_ms;
  double max_ms;
  size_t batch;
} es_bench_cell;

typedef struct es_bench_report es_bench_report;

ESTREAM_API void es_bench_config_default(es_bench_config* config);
ESTREAM_API es_status es_bench_run(const es_bench_config* config, es_bench_report** out);
ESTREAM_API size_t es_bench_cell_count(const es_bench_report* r);
ESTREAM_API es_status es_bench_cell_get(const es_bench_report* r, size_t index, es_bench_cell* out);
ESTREAM_API char* es_bench_csv(const es_bench_report* r);
/* Comparison against the bundled reference timings. */
ESTREAM_API char* es_bench_compare_reference(const es_bench_report* r);
ESTREAM_API void es_bench_free(es_bench_report* r);

/* ---- bundled reference timings ---------------------------------------- */

ESTREAM_API size_t es_reference_device_count(void);
ESTREAM_API size_t es_reference_cell_count(void);
ESTREAM_API es_status es_reference_overall_mean(es_cipher_id id, double* out);
ESTREAM_API es_status es_reference_published_average(es_cipher_id id, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ESTREAM_ESTREAM_H_ */
