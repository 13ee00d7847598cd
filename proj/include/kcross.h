/* kcross — exact computations for disjoint cross-intersecting set families.
 *
 * C interface to the kcross core: opaque handles, integer status codes,
 * decimal strings for big integers, JSON strings for structured reports.
 * Every function returning kx_status leaves a human-readable message behind
 * kx_last_error() on failure. Strings returned through char** out-params are
 * heap-allocated; release them with kx_string_free().
 */

#ifndef KCROSS_H
#define KCROSS_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kx_status {
  KX_OK = 0,
  KX_EUSAGE = 2,     /* malformed arguments */
  KX_EPRECOND = 3,   /* domain precondition violated */
  KX_EINEXACT = 4,   /* search result is an interval, not a value */
  KX_EINVARIANT = 5, /* internal invariant violated */
  KX_ELIMIT = 6,     /* representation cap exceeded (n > 64, family/search size) */
  KX_EPARSE = 7      /* malformed document */
} kx_status;

typedef struct kx_family kx_family;   /* a k-uniform family on [n] */
typedef struct kx_pair kx_pair;       /* two families on one ground set */
typedef struct kx_outcome kx_outcome; /* result of an exact search */

const char* kx_version(void);
/* Thread-local message describing the most recent failure. */
const char* kx_last_error(void);
void kx_string_free(char* s);

/* ---- k-sets ---------------------------------------------------------- */

/* Rank in colexicographic order; independent of n. elems: strictly
 * increasing 1-based elements. */
kx_status kx_colex_rank(const int* elems, int k, uint64_t* rank_out);
/* Inverse: writes k elements into elems_out (caller provides space). */
kx_status kx_colex_unrank(uint64_t rank, int k, int* elems_out);
/* Lexicographic comparison (min of the symmetric difference decides);
 * order_out: -1, 0, +1. No ground-set cap. */
kx_status kx_lex_compare(const int* g, const int* h, int k, int* order_out);

/* ---- families -------------------------------------------------------- */

kx_status kx_family_create(int n, int k, kx_family** out);
void kx_family_free(kx_family* f);
kx_status kx_family_clone(const kx_family* f, kx_family** out);
kx_status kx_family_add(kx_family* f, const int* elems, int k);
kx_status kx_family_add_rank(kx_family* f, uint64_t rank);
int kx_family_n(const kx_family* f);
int kx_family_k(const kx_family* f);
uint64_t kx_family_size(const kx_family* f);
uint64_t kx_family_capacity(const kx_family* f);
int kx_family_contains(const kx_family* f, const int* elems, int k);
/* Writes the members in colex order as k*size ints. */
kx_status kx_family_members(const kx_family* f, int* elems_out, size_t cap);

kx_status kx_family_is_intersecting(const kx_family* f, int* out);
/* star_out: the smallest common element, or 0 when the family is not a star.
 * The empty family reports 1. */
kx_status kx_family_is_star(const kx_family* f, int* star_out);
kx_status kx_family_diversity(const kx_family* f, uint64_t* out);
/* mode: 0 = contains (deletes the element, ground set (n-1,k-1)),
 *       1 = avoids (same ground set). */
kx_status kx_family_restriction(const kx_family* f, int element, int mode, kx_family** out);
kx_status kx_family_complement(const kx_family* f, kx_family** out);
kx_status kx_family_shadow(const kx_family* f, int level, kx_family** out);

/* First m t-subsets of [n] in lexicographic order. */
kx_status kx_lex_segment(int n, int t, uint64_t m, kx_family** out);
/* The index-th t-subset of [n] in lex order (0-based). */
kx_status kx_lex_unrank(int n, int t, uint64_t index, int* elems_out);

/* Cross-intersection of two families with a common n (uniformities may
 * differ). */
kx_status kx_cross_intersecting(const kx_family* a, const kx_family* b, int* out);
/* A ∩ σ^(a)(B^c) = ∅ — the shadow reformulation of cross-intersection. */
kx_status kx_hilton_check(const kx_family* a, const kx_family* b, int* out);
/* Replace a cross-intersecting pair by lex segments of the same sizes and
 * re-test; true is guaranteed by the Kruskal–Katona theorem. */
kx_status kx_kk_compress_check(const kx_family* a, const kx_family* b, int* out);
/* Count (and optionally collect) the b-sets meeting every member of
 * L(n,a,m). */
kx_status kx_max_cross_partner(int n, int a, int b, uint64_t m, uint64_t* count_out,
                               kx_family** witnesses_out);

/* ---- pairs ----------------------------------------------------------- */

/* Copies both families; they must share (n,k). */
kx_status kx_pair_create(const kx_family* a, const kx_family* b, kx_pair** out);
void kx_pair_free(kx_pair* p);
kx_status kx_pair_side(const kx_pair* p, int side /*0=A,1=B*/, kx_family** out);
uint64_t kx_pair_size(const kx_pair* p, int side);
int kx_pair_n(const kx_pair* p);
int kx_pair_k(const kx_pair* p);

/* checks: comma-separated subset of disjoint,cross,star_free,pyber,sizes.
 * expected_a/expected_b are consulted by the sizes check (pass any values
 * otherwise). Emits the verification report as JSON. */
kx_status kx_pair_verify_json(const kx_pair* p, const char* checks, uint64_t expected_a,
                              uint64_t expected_b, char** json_out);

/* Canonical pair document {"n","k","A","B"}; members in colex order. */
kx_status kx_pair_to_json(const kx_pair* p, char** json_out);
kx_status kx_pair_from_json(const char* text, kx_pair** out);

/* ---- constructions --------------------------------------------------- */

/* name: half-star | section3 | prop22 | prop55. The result is self-verified
 * (disjointness, size targets, star-freeness where promised). */
kx_status kx_construct(const char* name, int n, int k, kx_pair** out);

/* ---- exact arithmetic & regimes -------------------------------------- */

/* Exact C(n,r) as a decimal string; 0 when r < 0 or r > n. */
kx_status kx_binomial(int64_t n, int64_t r, char** decimal_out);
/* Regime report for (n,k) as JSON. */
kx_status kx_classify_json(int64_t n, int k, char** json_out);
/* The six bound quantities as JSON (decimal strings). */
kx_status kx_bounds_json(int64_t n, int k, char** json_out);
/* Scan 2k < n <= n_max: exact regime boundaries, threshold approximations,
 * clause violations. */
kx_status kx_theorem14_json(int k, int64_t n_max, char** json_out);
/* Size threshold C(n-1,k-1) - C(n-u-1,k-1) + C(n-u-1,k-u) as a decimal
 * string. */
kx_status kx_thm43_threshold(int64_t n, int k, int u, char** decimal_out);
/* which: eq_5_2 | eq_5_3 | eq_5_7 | eq_5_12 | eq_5_13 | eq_5_14.
 * holds_out receives the exact truth at (n,k). */
kx_status kx_ineq_holds(const char* which, int64_t n, int k, int* holds_out);
/* Smallest n > 2k where the inequality holds (eq_5_7: fails); cap <= 0
 * selects max(4k^3, 1000). JSON report; cap exhaustion is flagged, not an
 * error. */
kx_status kx_ineq_crossover_json(const char* which, int k, int64_t cap, char** json_out);

/* ---- exact search ---------------------------------------------------- */

typedef struct kx_search_options {
  int star_free;          /* require both sides star-free */
  int allow_overlap;      /* drop the disjointness constraint */
  uint64_t node_limit;    /* 0 = default (2e7) */
  uint64_t time_limit_ms; /* 0 = unlimited */
  int workers;            /* <= 1 = sequential */
  int symmetry_fix;       /* pin vertex [1..k] into side A */
} kx_search_options;

void kx_search_options_init(kx_search_options* opts);

/* Branch-and-bound max-min over the Kneser graph. Returns KX_OK with an
 * exact value or KX_EINEXACT with an interval outcome (budget exhausted);
 * both produce an outcome object. */
kx_status kx_search(int n, int k, const kx_search_options* opts, kx_outcome** out);
/* Brute-force oracle over all labelings; exact, small instances only. */
kx_status kx_exhaustive(int n, int k, int star_free, int allow_overlap, kx_outcome** out);

void kx_outcome_free(kx_outcome* o);
int kx_outcome_exact(const kx_outcome* o);
uint64_t kx_outcome_lo(const kx_outcome* o);
uint64_t kx_outcome_hi(const kx_outcome* o);
/* NULL when the outcome carries no certificate (value 0). */
kx_status kx_outcome_certificate(const kx_outcome* o, kx_pair** out);
kx_status kx_outcome_json(const kx_outcome* o, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* KCROSS_H */
