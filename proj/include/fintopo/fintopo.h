/* fintopo — computing with finite topological spaces.
 *
 * C interface of the shared library.  All objects are opaque handles
 * created and destroyed here; functions that can fail return ft_status
 * and write results through out-parameters.  ft_last_error() returns a
 * thread-local human-readable detail message for the most recent failure.
 *
 * Point sets are uint64_t bit masks over a space's point indices 0..n-1
 * (spaces are capped at 64 points).  Mask arguments are truncated to the
 * space's universe.
 */
#ifndef FINTOPO_H
#define FINTOPO_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ft_status {
    FT_OK = 0,
    FT_ERR_INVALID_ARGUMENT,
    FT_ERR_PARSE,
    FT_ERR_MISSING_EMPTY_OR_FULL,
    FT_ERR_NOT_CLOSED_UNDER_UNION,
    FT_ERR_NOT_CLOSED_UNDER_INTERSECTION,
    FT_ERR_NOT_REFLEXIVE,
    FT_ERR_NOT_TRANSITIVE,
    FT_ERR_POINT_NOT_IN_OWN_NEIGHBORHOOD,
    FT_ERR_INCONSISTENT_BASE,
    FT_ERR_NOT_T0,
    FT_ERR_N_OUT_OF_RANGE,
    FT_ERR_OUT_OF_DOMAIN,
    FT_ERR_TARGET_NOT_ONE_DIMENSIONAL_T0,
    FT_ERR_EMPTY_IMAGE,
    FT_ERR_FAMILY_TOO_LARGE,
    FT_ERR_INTERNAL
} ft_status;

const char* ft_status_name(ft_status status);
/* Detail of the most recent failure on this thread ("" when none).
 * For FT_ERR_PARSE the message starts with "line L, col C:". */
const char* ft_last_error(void);

typedef struct ft_space ft_space;
typedef struct ft_map ft_map;           /* single-valued point function */
typedef struct ft_multi ft_multi;       /* multifunction */
typedef struct ft_pwl ft_pwl;           /* piecewise-linear self-map of [0,1] */
typedef struct ft_quotient ft_quotient; /* COTS quotient of [0,1] */
typedef struct ft_classes ft_classes;   /* homeomorphism class list */
typedef struct ft_enum ft_enum;         /* labeled-topology stream */

/* ---- space construction -------------------------------------------- */

/* Space text format (see README): "points: ..." then one of
 * opens:/minbase:/order:. */
ft_status ft_space_parse(const char* text, ft_space** out);

/* labels may be NULL (defaults p0, p1, ...). */
ft_status ft_space_from_opens(int n, const uint64_t* opens, size_t count,
                              const char* const* labels, ft_space** out);
ft_status ft_space_from_minbase(int n, const uint64_t* min_nbhds,
                                const char* const* labels, ft_space** out);
/* geq_rows[y] = mask of x with y >= x; must be reflexive and transitive. */
ft_status ft_space_from_order(int n, const uint64_t* geq_rows,
                              const char* const* labels, ft_space** out);

void ft_space_free(ft_space* sp);

/* ---- space inspection ----------------------------------------------- */

int ft_space_size(const ft_space* sp);
const char* ft_space_label(const ft_space* sp, int point);
int ft_space_point(const ft_space* sp, const char* label); /* -1 if absent */
uint64_t ft_space_universe(const ft_space* sp);
uint64_t ft_space_min_nbhd(const ft_space* sp, int point);   /* U_x */
uint64_t ft_space_point_closure(const ft_space* sp, int point);
int ft_space_leq(const ft_space* sp, int x, int y); /* x <= y in the order */
size_t ft_space_open_count(const ft_space* sp);
uint64_t ft_space_open_at(const ft_space* sp, size_t i);
int ft_space_is_open(const ft_space* sp, uint64_t set);
int ft_space_is_closed(const ft_space* sp, uint64_t set);
size_t ft_space_minbase_count(const ft_space* sp);
uint64_t ft_space_minbase_at(const ft_space* sp, size_t i);
ft_status ft_space_subspace(const ft_space* sp, uint64_t set, ft_space** out);

/* Returned strings are heap-allocated; release with ft_string_free. */
char* ft_space_format_opens(const ft_space* sp);
char* ft_space_format_minbase(const ft_space* sp);
char* ft_space_hasse_dot(const ft_space* sp);
/* "{a c}" set literal against the space's labels. */
ft_status ft_space_parse_set(const ft_space* sp, const char* text, uint64_t* out);
char* ft_space_set_to_string(const ft_space* sp, uint64_t set);
void ft_string_free(char* s);

/* ---- set operators --------------------------------------------------
 * Default entry points use the specialization-order formulas; the
 * *_definitional variants compute straight from the open family.  The two
 * agree on every valid space; the CLI prints and compares both. */

uint64_t ft_closure(const ft_space* sp, uint64_t set);
uint64_t ft_closure_definitional(const ft_space* sp, uint64_t set);
uint64_t ft_interior(const ft_space* sp, uint64_t set);
uint64_t ft_interior_definitional(const ft_space* sp, uint64_t set);
uint64_t ft_boundary(const ft_space* sp, uint64_t set);
uint64_t ft_boundary_definitional(const ft_space* sp, uint64_t set);
uint64_t ft_exterior(const ft_space* sp, uint64_t set);
uint64_t ft_exterior_definitional(const ft_space* sp, uint64_t set);
uint64_t ft_derived_set(const ft_space* sp, uint64_t set);
uint64_t ft_derived_set_definitional(const ft_space* sp, uint64_t set);
uint64_t ft_closure_of_interior(const ft_space* sp, uint64_t set);
uint64_t ft_interior_of_closure(const ft_space* sp, uint64_t set);

typedef struct ft_set_class {
    uint8_t open, closed, clopen;
    uint8_t semiopen, preopen, gamma_open;
    uint8_t dense, codense, nowhere_dense;
    uint8_t dense_in_itself;    /* A == d(A) */
    uint8_t no_isolated_points; /* A subset of d(A) */
} ft_set_class;

ft_status ft_classify_set(const ft_space* sp, uint64_t set, ft_set_class* out);

/* ---- whole-space classification -------------------------------------- */

typedef struct ft_space_report {
    uint8_t t0, t1, t_half;
    uint8_t discrete, indiscrete, submaximal;
    uint8_t connected, cots;
    int32_t dim_inductive;
    uint8_t has_height; /* 0 when the space is not T0 */
    int32_t height;
    uint64_t open_points, closed_points, isolated_points;
    int32_t component_count;
} ft_space_report;

ft_status ft_space_report_get(const ft_space* sp, ft_space_report* out);
/* index < component_count of the report; components ordered by smallest
 * member. */
uint64_t ft_space_component(const ft_space* sp, int index);

/* ---- homeomorphism and enumeration ----------------------------------- */

char* ft_space_canonical_hex(const ft_space* sp);
ft_status ft_homeomorphic(const ft_space* a, const ft_space* b, int* out);

ft_status ft_count_labeled(int n, int allow_large, uint64_t* out);
ft_status ft_enum_create(int n, int t0_only, int allow_large, ft_enum** out);
/* 1 = produced a space (caller frees it), 0 = exhausted. */
int ft_enum_next(ft_enum* e, ft_space** out);
void ft_enum_free(ft_enum* e);

ft_status ft_enum_classes(int n, int t0_only, int allow_large, ft_classes** out);
size_t ft_classes_count(const ft_classes* c);
/* Borrowed pointer, valid until ft_classes_free. */
const ft_space* ft_classes_representative(const ft_classes* c, size_t i);
uint64_t ft_classes_labeled_count(const ft_classes* c, size_t i);
char* ft_classes_canonical_hex(const ft_classes* c, size_t i);
void ft_classes_free(ft_classes* c);

/* ---- functions between spaces ---------------------------------------- */

/* image[x] = target point index; spaces are copied into the handle. */
ft_status ft_map_create(const ft_space* src, const ft_space* dst,
                        const int* image, ft_map** out);
/* "x:x y:z z:y" literal. */
ft_status ft_map_parse(const ft_space* src, const ft_space* dst,
                       const char* text, ft_map** out);
void ft_map_free(ft_map* f);
int ft_map_apply(const ft_map* f, int x);

ft_status ft_map_is_continuous(const ft_map* f, int* out);
ft_status ft_map_is_continuous_minbase(const ft_map* f, int* out);
ft_status ft_map_is_continuous_preimage(const ft_map* f, int* out);
ft_status ft_map_is_open(const ft_map* f, int* out);
ft_status ft_map_is_closed(const ft_map* f, int* out);

typedef struct ft_map_class {
    uint8_t continuous, precontinuous, semicontinuous, gamma_continuous;
    uint8_t open, preopen, semiopen, gamma_open;
} ft_map_class;
ft_status ft_map_classify(const ft_map* f, ft_map_class* out);

typedef struct ft_open_map_theorem {
    uint8_t hypotheses_hold;
    uint8_t is_open;
} ft_open_map_theorem;
/* Requires a T0 target of dimension <= 1, else
 * FT_ERR_TARGET_NOT_ONE_DIMENSIONAL_T0. */
ft_status ft_map_open_theorem(const ft_map* f, ft_open_map_theorem* out);

/* ---- multifunctions --------------------------------------------------- */

ft_status ft_multi_create(const ft_space* src, const ft_space* dst,
                          const uint64_t* image, ft_multi** out);
/* "a:{a b} b:{a}" literal. */
ft_status ft_multi_parse(const ft_space* src, const ft_space* dst,
                         const char* text, ft_multi** out);
void ft_multi_free(ft_multi* f);
uint64_t ft_multi_apply(const ft_multi* f, int x);
const ft_space* ft_multi_source(const ft_multi* f);
const ft_space* ft_multi_target(const ft_multi* f);
/* 1 when every value is a singleton; then the induced ft_map is available. */
int ft_multi_is_single_valued(const ft_multi* f);
ft_status ft_multi_as_map(const ft_multi* f, ft_map** out);

typedef struct ft_multi_verdict {
    uint8_t holds;
    int32_t point;        /* x where the check fails, -1 when it holds */
    int32_t via_point;    /* L.S.C: the x' of the violating pair, else -1 */
    int32_t target_point; /* L.S.C: the y of the violating pair, else -1 */
    uint64_t got, bound;  /* the compared sets at the failure */
} ft_multi_verdict;

/* Minimal-base and definitional routes are both evaluated and must agree;
 * the richer minimal-base witness is returned. */
ft_status ft_multi_usc(const ft_multi* f, ft_multi_verdict* out);
ft_status ft_multi_lsc(const ft_multi* f, ft_multi_verdict* out);

/* ---- interval quotient ------------------------------------------------ */

/* "0:3/4 1/4:1/4 1:1/2" — breakpoint:value pairs, exact rationals. */
ft_status ft_pwl_parse(const char* text, ft_pwl** out);
void ft_pwl_free(ft_pwl* f);
/* x and the result are rational literals ("1/3", "2"); free the result
 * with ft_string_free. */
ft_status ft_pwl_eval(const ft_pwl* f, const char* x, char** out);
char* ft_pwl_to_string(const ft_pwl* f);

/* "0,1/2,1" — strictly increasing cuts from 0 to 1. */
ft_status ft_quotient_parse(const char* cuts, ft_quotient** out);
void ft_quotient_free(ft_quotient* q);
/* Borrowed pointer, valid until ft_quotient_free. */
const ft_space* ft_quotient_space(const ft_quotient* q);
/* COTS point whose fiber contains the rational x. */
ft_status ft_quotient_project_point(const ft_quotient* q, const char* x, int* out);
/* g = pi . f . pi^{-1} on the quotient COTS. */
ft_status ft_quotient_induced(const ft_quotient* q, const ft_pwl* f, ft_multi** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FINTOPO_H */
