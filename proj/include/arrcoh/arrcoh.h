/*
 * C API for the arrangement-cohomology engine.
 *
 * All computation is exact rational arithmetic. Handles are opaque; every
 * report is returned as a JSON document (schema_version 1, the same schema
 * the CLI emits under --json). Strings returned through char** out
 * parameters are owned by the caller and released with arrcoh_string_free.
 *
 * Thread safety: handles are immutable after creation and may be shared
 * across threads; arrcoh_last_error is thread-local.
 */
#ifndef ARRCOH_H
#define ARRCOH_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arrcoh_status {
    ARRCOH_OK = 0,
    ARRCOH_ERROR_INPUT = 1,        /* malformed input, unknown pivot, validation failure */
    ARRCOH_ERROR_LIMIT = 2,        /* a size cap was exceeded */
    ARRCOH_ERROR_PRECONDITION = 3, /* operation invoked outside its hypotheses */
    ARRCOH_ERROR_CHECK = 4,        /* a verification suite reported failures */
    ARRCOH_ERROR_INTERNAL = 5
} arrcoh_status;

typedef struct arrcoh_arrangement arrcoh_arrangement;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
const char* arrcoh_version(void);

/* Message for the most recent failure on this thread. Static storage. */
const char* arrcoh_last_error(void);

void arrcoh_string_free(char* text);

/*
 * Parse an arrangement file: {"ambient_dim": l, "subspaces": [{"name",
 * "equations" | "span"}]} with integer or "p/q" entries. When allow_family
 * is nonzero, containment pairs are accepted (general subspace families).
 */
arrcoh_status arrcoh_arrangement_parse(const char* json_text, int allow_family,
                                       arrcoh_arrangement** out);
void arrcoh_arrangement_free(arrcoh_arrangement* arr);

int arrcoh_arrangement_size(const arrcoh_arrangement* arr);
int arrcoh_arrangement_ambient_dim(const arrcoh_arrangement* arr);
/* 1 when the no-containment invariant holds. */
int arrcoh_arrangement_is_arrangement(const arrcoh_arrangement* arr);

/*
 * Report builders. max_size caps the family size of every cochain complex
 * built along the way (0 selects the default, 16). The JSON out parameter is
 * set on ARRCOH_OK; arrcoh_verify_report and arrcoh_oracle_compare_report
 * also set it when they return ARRCOH_ERROR_CHECK (the report carries the
 * failure details).
 */
arrcoh_status arrcoh_poincare_report(const arrcoh_arrangement* arr, int max_size,
                                     char** json_out);
arrcoh_status arrcoh_lattice_report(const arrcoh_arrangement* arr, char** json_out);
arrcoh_status arrcoh_triple_report(const arrcoh_arrangement* arr, const char* pivot_name,
                                   int max_size, char** json_out);
arrcoh_status arrcoh_verify_report(const arrcoh_arrangement* arr, int oracle_gate, int max_size,
                                   char** json_out);
arrcoh_status arrcoh_oracle_compare_report(const arrcoh_arrangement* arr, int oracle_gate,
                                           int max_size, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ARRCOH_H */
