/*
   Copyright 2026 the qkzpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface of the qkzpoly shared library.
 *
 * The library computes, in exact arithmetic, polynomial solutions of the
 * quantum Knizhnik-Zamolodchikov equation for the six-vertex R-matrix, the
 * XXZ spin-chain ground state at Delta = -1/2, the Temperley-Lieb loop-model
 * ground state, alternating-sign-matrix counts, and runs the verification
 * suites tying these objects together.
 *
 * All results are returned through opaque result buffers holding UTF-8 text
 * (JSON, CSV, or plain text depending on the requested format). Every entry
 * point returns a qkz_status; on failure qkz_last_error() describes the
 * problem. Buffers must be released with qkz_buf_free().
 */

#ifndef QKZPOLY_H
#define QKZPOLY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QKZ_API __declspec(dllexport)
#else
#define QKZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qkz_status {
    QKZ_OK = 0,
    QKZ_ERR_INVALID_ARGUMENT = 1,
    QKZ_ERR_DEGENERATE_PARAMETERS = 2,
    QKZ_ERR_DIVISION_BY_ZERO = 3,
    QKZ_ERR_POLE_ORDER = 4,
    QKZ_ERR_CAP_MISMATCH = 5,
    QKZ_ERR_INTERNAL = 6,
    QKZ_ERR_NOMEM = 7,
    QKZ_VERIFY_FAILED = 8
} qkz_status;

/* Opaque result buffer. */
typedef struct qkz_buf qkz_buf;

QKZ_API const char* qkz_buf_data(const qkz_buf* buf); /* NUL-terminated */
QKZ_API size_t qkz_buf_size(const qkz_buf* buf);
QKZ_API void qkz_buf_free(qkz_buf* buf);

/* Message for the most recent failure on this thread. */
QKZ_API const char* qkz_last_error(void);

QKZ_API const char* qkz_version(void);

/*
 * Ground-state component table of the odd XXZ chain, N = 2n+1.
 * tau: rational string ("1", "3/2", ...) or NULL for a symbolic table.
 * format: "json" or "pretty".
 * Sizes above n = 8 require allow_large != 0.
 */
QKZ_API qkz_status qkz_ground_state(int n, const char* tau, const char* format, int allow_large,
                                    qkz_buf** out);

/*
 * Temperley-Lieb loop-model ground state of size 2n at tau = 1, with the
 * xi_{(1,2m)} partial sums and the total. format: "json" or "pretty".
 */
QKZ_API qkz_status qkz_loop_model(int n, const char* format, int allow_large, qkz_buf** out);

/* A(n) and A(n,r) tables for n = 1..max_n. format: "json", "csv", "pretty". */
QKZ_API qkz_status qkz_asm_table(int max_n, const char* format, qkz_buf** out);

/*
 * One component of the inhomogeneous qKZ solution.
 * kind: "down" (n indices) or "up" (n+1 indices).
 * z: N rational strings (N odd); q: "omega+", "omega-", or a rational.
 */
QKZ_API qkz_status qkz_inhom_component(const char* kind, const int* indices, int index_count,
                                       const char* const* z, int z_count, const char* q,
                                       qkz_buf** out);

typedef struct qkz_verify_options {
    uint64_t seed;   /* determines every random draw */
    int trials;      /* 0 = suite default */
    int chain_size;  /* N; 0 = suite default sizes */
    int max_n;       /* 0 = suite default */
    const char* q;   /* "omega+", "omega-", rational, or NULL = suite default */
} qkz_verify_options;

/*
 * Runs a verification suite. Known names: exchange, cyclicity, yang-baxter,
 * transfer-eigen, xxz-eigen, complement, recurrence, theorem1, theorem2,
 * theorem3, loop-expansion, refined-asm, loopinter.
 * format: "json" or "pretty". Returns QKZ_OK when every case passes,
 * QKZ_VERIFY_FAILED when the suite ran but some case failed (the report is
 * still written to *out in both situations).
 */
QKZ_API qkz_status qkz_verify(const char* suite, const qkz_verify_options* options,
                              const char* format, qkz_buf** out);

#ifdef __cplusplus
}
#endif

#endif /* QKZPOLY_H */
