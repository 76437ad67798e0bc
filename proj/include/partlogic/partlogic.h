//  Copyright 2026 The partlogic Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef PARTLOGIC_PARTLOGIC_H_
#define PARTLOGIC_PARTLOGIC_H_

/*
 * C interface to partlogic: partitions and their ditsets, formulas in subset
 * and partition semantics, finite validity checking, lattice export, and the
 * four universal-to-particular mechanisms.
 *
 * Conventions
 *  - Every fallible call returns a pl_status. On failure the thread-local
 *    pl_last_error_* accessors describe what went wrong; output parameters are
 *    left untouched.
 *  - Objects are opaque handles released with the matching pl_*_free.
 *  - Strings returned through char** are heap-allocated and released with
 *    pl_string_free.
 *  - A NULL pl_limits* means the defaults from pl_limits_default(); a NULL
 *    pl_names* means elements are printed as integers.
 *  - Text formats: partition "0,1|2" or "rgs:0,0,1"; subset "{0,2}"; relation
 *    "0,2 2,0"; variant "010" (switch 1 is the rightmost digit).
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARTLOGIC_BUILDING)
#    define PL_API __declspec(dllexport)
#  else
#    define PL_API __declspec(dllimport)
#  endif
#else
#  define PL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes match the command-line exit codes. 1 is reserved there for an
 * "invalid" verdict and is never returned as a status. */
typedef enum pl_status {
  PL_OK = 0,
  PL_ERR_USAGE = 2,    /* malformed input: formula syntax, text formats, bad arguments */
  PL_ERR_DOMAIN = 3,   /* well-formed input the operation rejects */
  PL_ERR_RESOURCE = 4, /* a configured size or budget cap was exceeded */
  PL_ERR_INTERNAL = 5
} pl_status;

typedef enum pl_error_code {
  PL_E_NONE = 0,
  PL_E_EMPTY_BLOCK,
  PL_E_OVERLAPPING_BLOCKS,
  PL_E_MISSING_ELEMENT,
  PL_E_ELEMENT_OUT_OF_RANGE,
  PL_E_NOT_EQUIVALENCE,
  PL_E_UNIVERSE_MISMATCH,
  PL_E_UNKNOWN_CONNECTIVE,
  PL_E_ARITY_MISMATCH,
  PL_E_SYNTAX_ERROR,
  PL_E_UNBALANCED_PARENS,
  PL_E_UNBOUND_VARIABLE,
  PL_E_UNIVERSE_TOO_SMALL,
  PL_E_TOO_MANY_VARIABLES,
  PL_E_RESOURCE_LIMIT,
  PL_E_INVALID_THRESHOLD,
  PL_E_NON_POSITIVE_FITNESS,
  PL_E_INVALID_FITNESS,
  PL_E_ALREADY_SET,
  PL_E_INDEX_OUT_OF_RANGE,
  PL_E_INVALID_FORMAT,
  PL_E_INVALID_ARGUMENT,
  PL_E_INTERNAL
} pl_error_code;

typedef enum pl_logic {
  PL_LOGIC_TRUTH_TABLE = 0,
  PL_LOGIC_SUBSET = 1,
  PL_LOGIC_PARTITION = 2
} pl_logic;

typedef enum pl_lattice_kind { PL_LATTICE_SUBSET = 0, PL_LATTICE_PARTITION = 1 } pl_lattice_kind;

typedef enum pl_export_format { PL_EXPORT_JSON = 0, PL_EXPORT_DOT = 1 } pl_export_format;

typedef struct pl_limits {
  size_t max_relation_n;
  size_t max_lattice_n;
  size_t max_universe;
  size_t max_truth_table_vars;
  uint64_t partition_assignment_budget;
  uint64_t subset_assignment_budget;
  size_t max_steps;
  unsigned threads;
} pl_limits;

typedef struct pl_binding {
  const char* variable;
  const char* value; /* subset or partition text */
} pl_binding;

typedef struct pl_names pl_names;
typedef struct pl_partition pl_partition;
typedef struct pl_formula pl_formula;
typedef struct pl_verdict pl_verdict;
typedef struct pl_trace pl_trace;

PL_API const char* pl_version(void);
PL_API pl_limits pl_limits_default(void);

PL_API pl_error_code pl_last_error_code(void);
/* Name of the last error code, e.g. "OverlappingBlocks". */
PL_API const char* pl_last_error_name(void);
PL_API const char* pl_last_error_message(void);
/* 0-based offset of the last formula syntax error, or SIZE_MAX. */
PL_API size_t pl_last_error_position(void);

PL_API void pl_string_free(char* s);

/* Element names: comma-separated identifiers such as "a,b,c". */
PL_API pl_status pl_names_parse(const char* list, pl_names** out);
PL_API void pl_names_free(pl_names* names);

/* ---- partitions ---------------------------------------------------------- */

PL_API pl_status pl_partition_parse(size_t n, const char* text, const pl_names* names,
                                     pl_partition** out);
PL_API pl_status pl_partition_discrete(size_t n, pl_partition** out);
PL_API pl_status pl_partition_indiscrete(size_t n, pl_partition** out);
PL_API void pl_partition_free(pl_partition* p);

PL_API size_t pl_partition_size(const pl_partition* p);
PL_API size_t pl_partition_block_count(const pl_partition* p);
PL_API size_t pl_partition_dit_count(const pl_partition* p);
/* rgs_form != 0 selects "rgs:..." output. */
PL_API pl_status pl_partition_format(const pl_partition* p, const pl_names* names, int rgs_form,
                                     char** out);
PL_API int pl_partition_equal(const pl_partition* a, const pl_partition* b);

/* *out = 1 iff p refines q (every block of p inside a block of q). */
PL_API pl_status pl_partition_refines(const pl_partition* p, const pl_partition* q, int* out);
PL_API pl_status pl_partition_join(const pl_partition* p, const pl_partition* q,
                                   pl_partition** out);
PL_API pl_status pl_partition_meet(const pl_partition* p, const pl_partition* q,
                                   pl_partition** out);
/* connective: "top", "bottom", "not", "and", "or", "implies", "iff". n is the
 * universe size, needed for the nullary connectives. */
PL_API pl_status pl_partition_lift(const char* connective, size_t n,
                                   const pl_partition* const* operands, size_t count,
                                   pl_partition** out);
PL_API pl_status pl_partition_ditset(const pl_partition* p, const pl_names* names, char** out);

/* ---- relations ----------------------------------------------------------- */

PL_API pl_status pl_relation_closure(size_t n, const char* pairs, const pl_names* names,
                                     const pl_limits* limits, char** out);
PL_API pl_status pl_relation_interior(size_t n, const char* pairs, const pl_names* names,
                                      const pl_limits* limits, char** out);

/* ---- formulas ------------------------------------------------------------ */

PL_API pl_status pl_formula_parse(const char* text, pl_formula** out);
PL_API void pl_formula_free(pl_formula* f);
PL_API pl_status pl_formula_format(const pl_formula* f, char** out);
PL_API pl_status pl_formula_to_json(const pl_formula* f, char** out);

/* logic must be PL_LOGIC_SUBSET or PL_LOGIC_PARTITION; the result is printed
 * in that logic's canonical text form. */
PL_API pl_status pl_eval(const pl_formula* f, pl_logic logic, size_t n,
                         const pl_binding* bindings, size_t count, const pl_names* names,
                         const pl_limits* limits, char** out);

/* ---- validity ------------------------------------------------------------ */

/* n_max is ignored for truth tables. */
PL_API pl_status pl_check(const pl_formula* f, pl_logic logic, size_t n_max,
                          const pl_limits* limits, pl_verdict** out);
PL_API int pl_verdict_valid(const pl_verdict* v);
PL_API pl_status pl_verdict_to_json(const pl_verdict* v, const pl_names* names, char** out);
PL_API void pl_verdict_free(pl_verdict* v);

/* ---- lattices ------------------------------------------------------------ */

PL_API pl_status pl_lattice_export(pl_lattice_kind kind, size_t n, pl_export_format format,
                                   const pl_names* names, const pl_limits* limits, char** out);

/* ---- mechanisms ---------------------------------------------------------- */

/* threshold <= 0 picks 1/(100*2^k); max_steps == 0 uses limits->max_steps.
 * fitness_table holds lines of "variant score". */
PL_API pl_status pl_sim_select(size_t k, const char* fitness_table, double threshold,
                               size_t max_steps, const pl_limits* limits, pl_trace** out);
/* Fitness 1 + margin at target, 1 elsewhere. */
PL_API pl_status pl_sim_select_peaked(size_t k, const char* target, double margin,
                                      double threshold, size_t max_steps,
                                      const pl_limits* limits, pl_trace** out);
/* events: "1=0,2=1,3=0" (switch=side, side 0/1 or L/R). */
PL_API pl_status pl_sim_generate(size_t k, const char* events, int overwrite, pl_trace** out);
/* pairs: "0-1,1-2". */
PL_API pl_status pl_sim_identify(size_t n, const char* pairs, const pl_names* names,
                                 pl_trace** out);
/* elements: "2,0". */
PL_API pl_status pl_sim_create(size_t n, const char* elements, const pl_names* names,
                               pl_trace** out);
/* answers: "0,1,0", sides for switches 1, 2, 3... */
PL_API pl_status pl_sim_twentyq(size_t k, const char* answers, const pl_limits* limits,
                                pl_trace** out);

PL_API pl_status pl_trace_to_json(const pl_trace* t, char** out);
PL_API size_t pl_trace_step_count(const pl_trace* t);
/* *out = 1 iff re-applying the trace's events from its initial state
 * reproduces every recorded state exactly. */
PL_API pl_status pl_trace_replays(const pl_trace* t, int* out);
PL_API void pl_trace_free(pl_trace* t);

/* Runs both mechanisms towards target; writes the paired-trace JSON. */
PL_API pl_status pl_compare(size_t k, const char* target, double margin,
                            const pl_limits* limits, char** json, int* agreement);

PL_API pl_status pl_scheme_relations(char** json);

#ifdef __cplusplus
}
#endif

#endif /* PARTLOGIC_PARTLOGIC_H_ */
