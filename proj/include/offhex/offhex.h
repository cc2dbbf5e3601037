#ifndef OFFHEX_H
#define OFFHEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OFFHEX_API __declspec(dllexport)
#else
#define OFFHEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum offhex_status {
    OFFHEX_OK = 0,
    OFFHEX_E_PARSE,
    OFFHEX_E_PARITY,
    OFFHEX_E_Y_BELOW_MINIMUM,
    OFFHEX_E_FERN_OVERFLOW,
    OFFHEX_E_POSITION_UNSUPPORTED,
    OFFHEX_E_Y_NOT_MINIMAL,
    OFFHEX_E_NEGATIVE_ARGUMENT,
    OFFHEX_E_NON_INTEGRAL,
    OFFHEX_E_NO_THEOREM_ROW,
    OFFHEX_E_RESOURCE_LIMIT,
    OFFHEX_E_COLOR_PATTERN,
    OFFHEX_E_CONDITION_MISMATCH,
    OFFHEX_E_UNKNOWN_ID,
    OFFHEX_E_INVALID_ARGUMENT,
    OFFHEX_E_INTERNAL
} offhex_status;

/* Name of a status code, e.g. "FernOverflow". */
OFFHEX_API const char* offhex_status_name(offhex_status s);
/* Message of the last failed call on this thread; empty when none. */
OFFHEX_API const char* offhex_last_error(void);

/* Strings returned through char** are owned by the caller. */
OFFHEX_API void offhex_string_free(char* s);

/* 0 means the library default. */
typedef struct offhex_limits {
    uint64_t max_states;
} offhex_limits;

/* ---- region specs ---- */

typedef struct offhex_spec offhex_spec;

/* Text form: "FAMILY:POSITION x=..,y=..,z=.. a=<csv> c=<csv> b=<csv>". */
OFFHEX_API offhex_status offhex_spec_parse(const char* text, offhex_spec** out);
OFFHEX_API void offhex_spec_free(offhex_spec* s);
OFFHEX_API offhex_status offhex_spec_to_string(const offhex_spec* s, char** out);
/* x, y, z and the three fern totals (a, b, c). */
OFFHEX_API offhex_status offhex_spec_params(const offhex_spec* s, int* x, int* y, int* z, int* a, int* b, int* c);

/* Cell list of the built region as (row, col, orient) triples, orient 0 = up. */
OFFHEX_API offhex_status offhex_region_cells(const offhex_spec* s, int** cells, size_t* count);
OFFHEX_API void offhex_cells_free(int* cells);
OFFHEX_API offhex_status offhex_region_svg(const offhex_spec* s, char** svg);

/* Exact counts as decimal strings. */
OFFHEX_API offhex_status offhex_count_enumerate(const offhex_spec* s, const offhex_limits* lim, char** count);
OFFHEX_API offhex_status offhex_count_formula(const offhex_spec* s, char** count);

OFFHEX_API offhex_status offhex_normalize_zero_triangles(const offhex_spec* s, offhex_spec** out);
OFFHEX_API offhex_status offhex_reduce_y_minimal(const offhex_spec* s, offhex_spec** out);

/* Plain counters used by the self test. */
OFFHEX_API offhex_status offhex_count_hexagon(int a, int b, int c, char** count);
OFFHEX_API offhex_status offhex_pp_box(int a, int b, int c, char** count);
OFFHEX_API offhex_status offhex_clp_count(const int* seq, size_t n, char** count);
OFFHEX_API offhex_status offhex_count_semihexagon(const int* seq, size_t n, char** count);

/* ---- formula against enumeration ---- */

typedef enum offhex_check_status { OFFHEX_PASS = 0, OFFHEX_FAIL = 1, OFFHEX_SKIP = 2 } offhex_check_status;

/* Strings are valid only for the duration of the callback. */
typedef struct offhex_check_record {
    const char* spec;
    offhex_check_status status;
    const char* formula; /* empty when not evaluated */
    const char* brute;
    const char* reason;
    int pi_clean;
    double ms;
} offhex_check_record;

typedef void (*offhex_check_cb)(const offhex_check_record* rec, void* user);

OFFHEX_API offhex_status offhex_cross_check(const offhex_spec* s, const offhex_limits* lim, offhex_check_cb cb, void* user);

typedef struct offhex_grid {
    const char* families; /* comma separated names such as "E,Fbar", or "all" / NULL */
    int min_x, max_x, min_z, max_z;
    int max_fern_entry, max_fern_len;
    int y_extra;
} offhex_grid;

OFFHEX_API void offhex_grid_default(offhex_grid* g);
OFFHEX_API offhex_status offhex_sweep(const offhex_grid* g, const offhex_limits* lim, offhex_check_cb cb, void* user,
                                      int* pass, int* fail, int* skip);

/* x = 0 or z = 0: split into two dented semihexagons. */
typedef struct offhex_base_record {
    const char* whole;
    const char* upper;
    const char* lower;
    const char* upper_clp;
    const char* lower_clp;
    int factors;
    int matches;
} offhex_base_record;

typedef void (*offhex_base_cb)(const offhex_base_record* rec, void* user);
OFFHEX_API offhex_status offhex_base_case(const offhex_spec* s, const offhex_limits* lim, offhex_base_cb cb, void* user);

/* ---- recurrences ---- */

OFFHEX_API size_t offhex_recurrence_count(void);
/* Static strings; NULL when out of range. */
OFFHEX_API const char* offhex_recurrence_id(size_t i);
OFFHEX_API const char* offhex_recurrence_condition(size_t i);
OFFHEX_API const char* offhex_recurrence_variant(size_t i);
OFFHEX_API const char* offhex_recurrence_term(size_t i, int k);
OFFHEX_API const char* offhex_recurrence_note(size_t i);

typedef struct offhex_recur_record {
    const char* id;
    const char* terms[6];  /* instantiated specs */
    const char* counts[6];
    const char* lhs;
    const char* rhs;
    int equal;
} offhex_recur_record;

typedef void (*offhex_recur_cb)(const offhex_recur_record* rec, void* user);
OFFHEX_API offhex_status offhex_recurrence_check(const char* id, const offhex_spec* s, const offhex_limits* lim,
                                                 offhex_recur_cb cb, void* user);

/* Random grid graph with four boundary vertices; holds = 1 when the identity is exact. */
OFFHEX_API offhex_status offhex_kuo_random(uint64_t seed, int* holds, char** description);

#ifdef __cplusplus
}
#endif

#endif
