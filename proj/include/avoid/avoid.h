/* Range-avoidance solver, C interface. Strings returned through char** belong to the caller and
 * are released with avoid_string_free. Every call that can fail returns an avoid_status and leaves
 * a message for avoid_last_error on the calling thread. */
#ifndef AVOID_AVOID_H
#define AVOID_AVOID_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AVOID_API __declspec(dllexport)
#else
#define AVOID_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct avoid_circuit avoid_circuit;
typedef struct avoid_report avoid_report;

typedef enum {
  AVOID_OK = 0,
  AVOID_E_ARGUMENT = 1,     /* null pointer or malformed option */
  AVOID_E_PARSE = 2,        /* circuit text, generator class, method name */
  AVOID_E_SHAPE = 3,        /* lengths, arities, indices */
  AVOID_E_STRETCH = 4,      /* m <= n where m > n is required */
  AVOID_E_PRECONDITION = 5, /* solver or reduction precondition */
  AVOID_E_INFEASIBLE = 6,   /* generator counting bound */
  AVOID_E_ORACLE_LIMIT = 7, /* n above the brute-force limit */
  AVOID_E_STRUCTURE = 8,    /* hypergraph not linear / uniform as required */
  AVOID_E_INTERNAL = 9      /* invariant breach; a bug */
} avoid_status;

typedef enum {
  AVOID_SOLVE_VERIFIED = 0,
  AVOID_SOLVE_REFUTED = 1,
  AVOID_SOLVE_UNVERIFIED = 2,
  AVOID_SOLVE_NOT_FOUND = 3,
  AVOID_SOLVE_UNSUPPORTED = 4
} avoid_solve_status;

typedef struct {
  const char* method; /* "auto" (NULL too), "xcycle", "wicket", "grid", "nc02", "andor", "depth1" */
  int oracle_limit;   /* largest n checked by brute force; 0 means the default of 22 */
} avoid_solve_options;

AVOID_API const char* avoid_last_error(void);
AVOID_API const char* avoid_version(void);
AVOID_API void avoid_string_free(char* s);

AVOID_API avoid_status avoid_circuit_parse(const char* text, avoid_circuit** out);
AVOID_API avoid_status avoid_circuit_load(const char* path, avoid_circuit** out);
/* cls as in the CLI: "mon-nc03", "one-intersect-majk:4", ... */
AVOID_API avoid_status avoid_circuit_generate(const char* cls, int n, int m, uint64_t seed, avoid_circuit** out);
AVOID_API avoid_status avoid_circuit_serialize(const avoid_circuit* c, char** text);
AVOID_API int avoid_circuit_n(const avoid_circuit* c);
AVOID_API int avoid_circuit_m(const avoid_circuit* c);
AVOID_API void avoid_circuit_free(avoid_circuit* c);

AVOID_API avoid_status avoid_solve(const avoid_circuit* c, const avoid_solve_options* opt, avoid_report** out);
AVOID_API avoid_solve_status avoid_report_status(const avoid_report* r);
AVOID_API int avoid_report_exit_code(const avoid_report* r);
/* Certificate over {0,1,*}; empty when none. Valid until the report is freed. */
AVOID_API const char* avoid_report_certificate(const avoid_report* r);
AVOID_API avoid_status avoid_report_json(const avoid_report* r, char** json);
AVOID_API avoid_status avoid_report_explain(const avoid_report* r, char** text);
AVOID_API double avoid_report_seconds(const avoid_report* r);
AVOID_API void avoid_report_free(avoid_report* r);

/* *in_range = 1 when some x maps onto y; witness then holds x as a 0/1 string, else NULL. */
AVOID_API avoid_status avoid_verify(const avoid_circuit* c, const char* y, int oracle_limit, int* in_range,
                                    char** witness);

/* JSON object describing the lexicographically least match of kind ("wicket", "grid:3", ...),
 * with "found": false when absent. */
AVOID_API avoid_status avoid_pattern_find(const avoid_circuit* c, const char* kind, char** json);

#ifdef __cplusplus
}
#endif

#endif
