/*
 * kstates: Kauffman-state generating polynomials of two-bridge knot shadows.
 *
 * C interface. Every object is an opaque handle owned by the caller and
 * released with the matching *_free function. Functions that can fail
 * return a kst_status; on failure kst_last_error() describes the problem
 * (the message is thread-local and valid until the next failing call on
 * the same thread). Output handles are written only on success.
 *
 * Half-twist counts are int64_t: a nonnegative value, or KST_INF for the
 * symbolic infinity of tangle notation.
 */
#ifndef KSTATES_KSTATES_H
#define KSTATES_KSTATES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(KSTATES_BUILDING)
#    define KSTATES_API __declspec(dllexport)
#  else
#    define KSTATES_API __declspec(dllimport)
#  endif
#else
#  define KSTATES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kst_status {
    KST_OK = 0,
    KST_ERR_INVALID_ARGUMENT = 1,
    KST_ERR_OVERFLOW = 2,
    KST_ERR_NOT_DIVISIBLE = 3,
    KST_ERR_CAP_EXCEEDED = 4,
    KST_ERR_UNSUPPORTED = 5,
    KST_ERR_UNKNOWN_NAME = 6,
    KST_ERR_INTERNAL = 7
} kst_status;

#define KST_INF INT64_C(-1)

/* Splice at a free circle instead of an edge (kst_diagram_connected_sum_at). */
#define KST_FREE_CIRCLE INT64_C(-1)

typedef struct kst_poly kst_poly;
typedef struct kst_diagram kst_diagram;
typedef struct kst_table kst_table;

typedef enum kst_method {
    KST_METHOD_CLOSED = 0,
    KST_METHOD_RECURRENCE = 1,
    KST_METHOD_CLASSES = 2,
    KST_METHOD_ENUMERATE = 3
} kst_method;

typedef enum kst_poly_style {
    KST_STYLE_COEFFS = 0, /* "0 5 8 3" */
    KST_STYLE_HUMAN = 1   /* "5x + 8x^2 + 3x^3" */
} kst_poly_style;

KSTATES_API const char* kst_last_error(void);
KSTATES_API const char* kst_status_name(kst_status status);

/* Strings returned through char** outputs are released with this. */
KSTATES_API void kst_string_free(char* s);

/* ---- polynomials ---------------------------------------------------- */

KSTATES_API kst_status kst_poly_from_coeffs(const int64_t* coeffs, size_t count, kst_poly** out);
/* Parses the ascending "c0 c1 c2 ..." form. */
KSTATES_API kst_status kst_poly_parse(const char* text, kst_poly** out);
KSTATES_API void kst_poly_free(kst_poly* p);

/* Stored coefficient count; 0 for the zero polynomial. */
KSTATES_API size_t kst_poly_length(const kst_poly* p);
/* Coefficient of x^k, 0 beyond the stored length. */
KSTATES_API int64_t kst_poly_coeff(const kst_poly* p, size_t k);
/* Degree, or -1 for the zero polynomial. */
KSTATES_API int64_t kst_poly_degree(const kst_poly* p);
KSTATES_API int64_t kst_poly_leading(const kst_poly* p);
KSTATES_API int kst_poly_equal(const kst_poly* p, const kst_poly* q);

KSTATES_API kst_status kst_poly_add(const kst_poly* p, const kst_poly* q, kst_poly** out);
KSTATES_API kst_status kst_poly_mul(const kst_poly* p, const kst_poly* q, kst_poly** out);
/* Fails with KST_ERR_NOT_DIVISIBLE when the constant term is nonzero. */
KSTATES_API kst_status kst_poly_div_x(const kst_poly* p, kst_poly** out);
KSTATES_API kst_status kst_poly_eval(const kst_poly* p, int64_t t, int64_t* out);
KSTATES_API kst_status kst_poly_format(const kst_poly* p, kst_poly_style style, char** out);

/* ---- diagrams and enumeration --------------------------------------- */

/*
 * Crossing cap used when a max_crossings argument is 0: the value of the
 * KSTATES_MAX_CROSSINGS environment variable if set (1..62), else 30.
 */
KSTATES_API kst_status kst_enumeration_cap(size_t* out);

/* crossings holds 4 * crossing_count edge ids, ports in cyclic order. */
KSTATES_API kst_status kst_diagram_new(size_t edge_count, const uint32_t* crossings, size_t crossing_count,
                                       size_t free_circles, kst_diagram** out);
KSTATES_API kst_status kst_diagram_two_bridge(int64_t n, int64_t r, kst_diagram** out);
KSTATES_API kst_status kst_diagram_torus(int64_t k, kst_diagram** out);
KSTATES_API void kst_diagram_free(kst_diagram* d);

KSTATES_API size_t kst_diagram_edge_count(const kst_diagram* d);
KSTATES_API size_t kst_diagram_crossing_count(const kst_diagram* d);
KSTATES_API size_t kst_diagram_free_circles(const kst_diagram* d);
KSTATES_API kst_status kst_diagram_crossing(const kst_diagram* d, size_t index, uint32_t out[4]);

/* splits[i] is 0 for split A at crossing i, 1 for split B. */
KSTATES_API kst_status kst_diagram_circle_count(const kst_diagram* d, const uint8_t* splits, size_t count,
                                                size_t* out);
/* threads = 0 picks from the hardware. */
KSTATES_API kst_status kst_diagram_state_polynomial(const kst_diagram* d, size_t max_crossings, unsigned threads,
                                                    kst_poly** out);
KSTATES_API kst_status kst_diagram_count_states(const kst_diagram* d, size_t circles, size_t max_crossings,
                                                uint64_t* out);

KSTATES_API kst_status kst_diagram_disjoint_union(const kst_diagram* a, const kst_diagram* b, kst_diagram** out);
/* Splices the lowest-numbered edges (or free circles when a summand has no edges). */
KSTATES_API kst_status kst_diagram_connected_sum(const kst_diagram* a, const kst_diagram* b, kst_diagram** out);
/* edge_a / edge_b name the cut edges, or KST_FREE_CIRCLE. */
KSTATES_API kst_status kst_diagram_connected_sum_at(const kst_diagram* a, int64_t edge_a, const kst_diagram* b,
                                                    int64_t edge_b, int cross_pairing, kst_diagram** out);

/* ---- closed forms --------------------------------------------------- */

KSTATES_API kst_status kst_method_parse(const char* name, kst_method* out);

/* B(n,r)(x) by the chosen route; max_crossings only matters for enumeration. */
KSTATES_API kst_status kst_two_bridge_poly(int64_t n, int64_t r, kst_method method, size_t max_crossings,
                                           kst_poly** out);
KSTATES_API kst_status kst_alpha(int64_t n, kst_poly** out);
/* out[0..3]: x^2 alpha_n, x^2 alpha_r, x alpha_n alpha_r, x. */
KSTATES_API kst_status kst_state_classes(int64_t n, int64_t r, kst_poly* out[4]);

/* b(n,r;k). n or r may be KST_INF (not both). */
KSTATES_API kst_status kst_coeff(int64_t n, int64_t r, int64_t k, int64_t* out);
KSTATES_API kst_status kst_coeff_k1(int64_t n, int64_t r, int64_t* out);
KSTATES_API kst_status kst_coeff_k2(int64_t n, int64_t r, int64_t* out);
KSTATES_API kst_status kst_degree_formula(int64_t n, int64_t r, int64_t* out);
KSTATES_API kst_status kst_leading_coeff(int64_t n, int64_t r, int64_t* out);

/* ---- tables and sequences ------------------------------------------- */

/* name: bn0k bn1k bn2k bnnk bnr1 bnr2 leading degree */
KSTATES_API kst_status kst_table_render(const char* name, size_t rows, kst_table** out);
KSTATES_API void kst_table_free(kst_table* t);
KSTATES_API size_t kst_table_rows(const kst_table* t);
KSTATES_API size_t kst_table_row_length(const kst_table* t, size_t row);
KSTATES_API int64_t kst_table_entry(const kst_table* t, size_t row, size_t col);
/* format: csv tsv markdown */
KSTATES_API kst_status kst_table_format(const kst_table* t, const char* format, char** out);

/* order: by-rows by-antidiagonals. Writes min(terms, capacity) values. */
KSTATES_API kst_status kst_sequence(const char* name, size_t terms, const char* order, int64_t* out,
                                    size_t capacity, size_t* written);
/* b-file text, one "index value" line per term. */
KSTATES_API kst_status kst_sequence_bfile(const char* name, size_t terms, const char* order, int64_t offset,
                                          char** out);

/* ---- cross-validation ----------------------------------------------- */

typedef struct kst_verify_options {
    uint32_t max_n;
    uint32_t max_r;
    uint64_t seed;
    size_t random_pairs;
    size_t max_crossings; /* 0: kst_enumeration_cap() */
    unsigned threads;
    /* Test hook: when nonzero, add fault_delta to coefficient fault_k of
     * the closed-form B(fault_n, fault_r) wherever the verifier reads it. */
    int inject_fault;
    uint32_t fault_n;
    uint32_t fault_r;
    uint32_t fault_k;
    int64_t fault_delta;
} kst_verify_options;

KSTATES_API void kst_verify_options_init(kst_verify_options* opts);

/* Runs every suite. *all_passed is 1 iff each passes; *report receives
 * one PASS/FAIL line per suite. */
KSTATES_API kst_status kst_verify(const kst_verify_options* opts, int* all_passed, char** report);

#ifdef __cplusplus
}
#endif

#endif /* KSTATES_KSTATES_H */
