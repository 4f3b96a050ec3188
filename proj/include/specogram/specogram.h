/*
 * Copyright 2026 The Specogram Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libspecogram.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching spg_*_free function. Strings returned as `char*` are released with
 * spg_string_free; `const char*` results are borrowed from the handle they
 * came from and stay valid until that handle is freed.
 *
 * Functions that accept `spg_diagnostics** diagnostics` store a new list in
 * it whenever the pointer is non-NULL, also on success (possibly empty).
 */

#ifndef SPECOGRAM_SPECOGRAM_H_
#define SPECOGRAM_SPECOGRAM_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SPECOGRAM_BUILDING_LIBRARY)
#    define SPG_API __declspec(dllexport)
#  else
#    define SPG_API __declspec(dllimport)
#  endif
#else
#  define SPG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum spg_status {
  SPG_OK = 0,
  /* A required pointer was NULL or an enum value was out of range. */
  SPG_INVALID_ARGUMENT = 1,
  /* The input was rejected; the diagnostics explain why. */
  SPG_REJECTED = 2,
  SPG_IO_ERROR = 3,
  SPG_INTERNAL_ERROR = 4
} spg_status;

typedef enum spg_severity {
  SPG_SEVERITY_ERROR = 0,
  SPG_SEVERITY_WARNING = 1
} spg_severity;

typedef enum spg_effect {
  SPG_DOES_NOT_CHANGE = 0,
  SPG_INCREMENTS = 1,
  SPG_DECREMENTS = 2
} spg_effect;

typedef enum spg_fragment_kind {
  SPG_FRAGMENT_CALL = 0,
  SPG_FRAGMENT_QUERY = 1,
  SPG_FRAGMENT_CONDITION = 2
} spg_fragment_kind;

/* View selection bits for spg_generate. */
#define SPG_VIEW_LATEX 0x1u
#define SPG_VIEW_PUTS 0x2u
#define SPG_VIEW_CONTRACTS 0x4u
#define SPG_VIEW_TRACE 0x8u

typedef struct spg_spec spg_spec;
typedef struct spg_model spg_model;
typedef struct spg_diagnostics spg_diagnostics;
typedef struct spg_artifacts spg_artifacts;

typedef struct spg_diagnostic {
  spg_severity severity;
  const char* code;
  const char* message;
  const char* file; /* empty when the input had no file name */
  size_t line;      /* 1-based */
  size_t column;    /* 1-based */
  size_t length;
  const char* formatted; /* "file:line:col: severity[code]: message" */
} spg_diagnostic;

typedef struct spg_requirement_desc {
  const char* label;
  const char* action;
  spg_effect effect;
  const char* target;
  const char* const* variables;
  const char* const* types;
  size_t binding_count;
  const char* guard; /* NULL for an unconditional requirement */
} spg_requirement_desc;

SPG_API const char* spg_version(void);
SPG_API const char* spg_status_string(spg_status status);

/* Message describing the last SPG_INVALID_ARGUMENT, SPG_IO_ERROR or
 * SPG_INTERNAL_ERROR returned on the calling thread. */
SPG_API const char* spg_last_error(void);

SPG_API void spg_string_free(char* text);

/* ---- diagnostics ---------------------------------------------------- */

SPG_API size_t spg_diagnostics_count(const spg_diagnostics* list);
SPG_API size_t spg_diagnostics_error_count(const spg_diagnostics* list);
SPG_API spg_status spg_diagnostics_get(const spg_diagnostics* list, size_t index,
                                       spg_diagnostic* out);
SPG_API void spg_diagnostics_free(spg_diagnostics* list);

/* ---- specifications ------------------------------------------------- */

SPG_API spg_status spg_spec_create(const char* name, spg_spec** out,
                                   spg_diagnostics** diagnostics);

/* Runs the requirement vocabulary on `desc`: the requirement is appended
 * only when every component is well formed. */
SPG_API spg_status spg_spec_add_requirement(spg_spec* spec, const spg_requirement_desc* desc,
                                            spg_diagnostics** diagnostics);

/* Parses a .spec document. `*out` is set only on SPG_OK. */
SPG_API spg_status spg_spec_parse(const char* text, size_t length, const char* file_name,
                                  spg_spec** out, spg_diagnostics** diagnostics);

/* Canonical key/value persistence. */
SPG_API spg_status spg_spec_from_canonical(const char* text, size_t length,
                                           const char* file_name, spg_spec** out,
                                           spg_diagnostics** diagnostics);
SPG_API spg_status spg_spec_to_canonical(const spg_spec* spec, char** out);

/* Canonical .spec layout. */
SPG_API spg_status spg_spec_format(const spg_spec* spec, char** out);

SPG_API const char* spg_spec_name(const spg_spec* spec);
SPG_API size_t spg_spec_requirement_count(const spg_spec* spec);
SPG_API const char* spg_spec_requirement_label(const spg_spec* spec, size_t index);
SPG_API void spg_spec_free(spg_spec* spec);

/* ---- fragments ------------------------------------------------------ */

/* Parses one fragment and, on success, stores its canonical rendering. */
SPG_API spg_status spg_fragment_normalize(spg_fragment_kind kind, const char* text,
                                          size_t length, char** rendered,
                                          spg_diagnostics** diagnostics);

/* ---- domain model --------------------------------------------------- */

SPG_API spg_status spg_model_parse(const char* text, size_t length, const char* file_name,
                                   spg_model** out, spg_diagnostics** diagnostics);
SPG_API void spg_model_free(spg_model* model);

/* SPG_REJECTED when at least one error-severity diagnostic is reported. */
SPG_API spg_status spg_check(const spg_spec* spec, const spg_model* model,
                             spg_diagnostics** diagnostics);

/* ---- views ---------------------------------------------------------- */

/* Parses a comma-separated list such as "latex,puts" into SPG_VIEW_* bits. */
SPG_API spg_status spg_views_parse(const char* list, unsigned* mask);

/* Artifacts come out in the order latex, puts, contracts, trace. */
SPG_API spg_status spg_generate(const spg_spec* spec, unsigned views, int frames,
                                spg_artifacts** out);
SPG_API size_t spg_artifacts_count(const spg_artifacts* artifacts);
SPG_API spg_status spg_artifact_get(const spg_artifacts* artifacts, size_t index,
                                    const char** relative_path, const char** content,
                                    size_t* length);

/* Writes all artifacts below `directory` (created when missing), or none. */
SPG_API spg_status spg_artifacts_write(const spg_artifacts* artifacts, const char* directory,
                                       spg_diagnostics** diagnostics);
SPG_API void spg_artifacts_free(spg_artifacts* artifacts);

#ifdef __cplusplus
}
#endif

#endif /* SPECOGRAM_SPECOGRAM_H_ */
