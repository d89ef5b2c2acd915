// Copyright 2026 The hopfkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to hopfkit.
 *
 * Every function returns an hk_status. On anything but HK_OK the message is
 * available from hk_last_error() until the next call on the same thread.
 * Failed verification checks are not errors: the call succeeds and the
 * report says which checks failed.
 *
 * Strings handed out by hk_*_json / hk_builtin_text are owned by the caller
 * and released with hk_string_free. Strings returned as const char* are
 * owned by the object they came from.
 */
#ifndef HOPFKIT_H_
#define HOPFKIT_H_

#include <stddef.h>

#if defined(_WIN32)
#define HK_API __declspec(dllexport)
#else
#define HK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_ARGUMENT = 1,   /* null pointer, bad index, unknown name */
  HK_ERR_IO = 2,         /* unreadable or unwritable file */
  HK_ERR_PARSE = 3,      /* malformed JSON or identity file; message has line:column */
  HK_ERR_SCHEMA = 4,     /* well-formed file with a bad field; message names it */
  HK_ERR_INPUT = 5,      /* other invalid input, including the dimension cap */
  HK_ERR_SHAPE = 6,
  HK_ERR_CAPABILITY = 7, /* e.g. singular antipode, missing roots of unity */
  HK_ERR_EVALUATION = 8,
  HK_ERR_INTERNAL = 9
} hk_status;

typedef struct hk_hopf hk_hopf;
typedef struct hk_report hk_report;

typedef struct hk_options {
  const char* field; /* "q", "fp:<prime>" or "fp" (prime from HOPFKIT_PRIME); NULL means "q" */
  int skip_verify;   /* nonzero: do not run the axiom suite on loaded inputs */
  int force;         /* nonzero: ignore max_dim */
  size_t max_dim;
} hk_options;

typedef struct hk_check_info {
  const char* id;
  int passed;
  const char* detail;    /* may be empty */
  const size_t* witness; /* NULL when passed or when there is none */
  size_t witness_len;
  double seconds;
} hk_check_info;

HK_API const char* hk_version(void);
HK_API const char* hk_last_error(void);
HK_API const char* hk_status_name(hk_status status);
HK_API void hk_options_default(hk_options* opts);
HK_API void hk_string_free(char* s);

HK_API hk_status hk_hopf_load(const char* path, const char* field, hk_hopf** out);
HK_API hk_status hk_hopf_builtin(const char* name, const char* field, hk_hopf** out);
HK_API size_t hk_hopf_dim(const hk_hopf* h);
HK_API hk_status hk_hopf_json(const hk_hopf* h, char** out);
HK_API hk_status hk_hopf_save(const hk_hopf* h, const char* path);
HK_API void hk_hopf_free(hk_hopf* h);

/* Definition or element file text for kz2, kz2xz2, s3, h4, bichar, r0. */
HK_API hk_status hk_builtin_text(const char* name, const char* field, char** out);

/* Commands. `opts` may be NULL for defaults. */
HK_API hk_status hk_check(const char* hopf, const hk_options* opts, hk_report** out);
HK_API hk_status hk_twist(const char* hopf, const char* cocycle, const hk_options* opts,
                          hk_report** out);
/* kind: "mirror", "twisted_mirror" (or "mirror-twisted"), "mbar"; cocycle
 * is NULL except for the twisted mirror product. */
HK_API hk_status hk_construction(const char* kind, const char* hopf, const char* cocycle,
                                 const hk_options* opts, hk_report** out);
HK_API hk_status hk_construct(const char* request, const hk_options* opts, hk_report** out);
/* bindings: "NAME=path" strings; a bare path binds the name X. */
HK_API hk_status hk_prove(const char* hopf, const char* identities, const char* const* bindings,
                          size_t n_bindings, const hk_options* opts, hk_report** out);
HK_API hk_status hk_coincide(const char* hopf, const char* rmatrix, const hk_options* opts,
                             hk_report** out);

HK_API int hk_report_passed(const hk_report* r);
HK_API const char* hk_report_construction(const hk_report* r);
HK_API size_t hk_report_check_count(const hk_report* r);
HK_API hk_status hk_report_check(const hk_report* r, size_t index, hk_check_info* out);
/* NULL when the key is absent. */
HK_API const char* hk_report_outcome(const hk_report* r, const char* key);
HK_API hk_status hk_report_json(const hk_report* r, int timings, char** out);
HK_API hk_status hk_report_write(const hk_report* r, const char* path, int timings);
/* The algebra the command produced; HK_ERR_ARGUMENT when there is none. */
HK_API hk_status hk_report_artifact(const hk_report* r, hk_hopf** out);
HK_API void hk_report_free(hk_report* r);

#ifdef __cplusplus
}
#endif

#endif /* HOPFKIT_H_ */
