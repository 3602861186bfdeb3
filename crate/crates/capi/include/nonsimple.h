#ifndef NONSIMPLE_H
#define NONSIMPLE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every call. Values above NS_OK match the CLI exit codes
// where one exists (invalid input 2, failed condition 3, bound 4).
typedef enum NsStatus {
  NS_OK = 0,
  NS_ERR_NULL_POINTER = 1,
  NS_ERR_INVALID_INPUT = 2,
  NS_ERR_MATH = 3,
  NS_ERR_ENUMERATION_BOUND = 4,
  NS_ERR_OVERFLOW = 5,
  NS_ERR_PANIC = 6,
} NsStatus;

// Opaque list of unsigned values; free with ns_u64_list_free.
typedef struct NsU64List NsU64List;

// A linear singular relation with 64-bit coefficients. Calls that
// produce one fail with NS_ERR_OVERFLOW if a value does not fit.
typedef struct NsRelation {
  uint64_t d;
  int64_t a[5];
  int64_t delta;
  int64_t p;
} NsRelation;

// A complex number as a plain pair of doubles.
typedef struct NsComplex {
  double re;
  double im;
} NsComplex;

// The three matrix entries determined by a label and two inputs.
typedef struct NsPeriod {
  struct NsComplex z1;
  struct NsComplex z2;
  struct NsComplex z3;
} NsPeriod;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *ns_version(void);

// Message for the most recent failure on this thread, or null if the
// last call succeeded. The pointer stays valid until the next call on
// the same thread.
const char *ns_last_error_message(void);

// Whether exponents (m, n) can coexist at level d.
//
// # Safety
// `out_complementary` must be a valid pointer.
enum NsStatus ns_check(uint64_t d, uint64_t m, uint64_t n, bool *out_complementary);

// Number of components contributed by the pair (n, d).
//
// # Safety
// `out_count` must be a valid pointer.
enum NsStatus ns_component_count(uint64_t d, uint64_t n, uint64_t *out_count);

// All exponents complementary to n at level d, ascending. The list
// must be released with ns_u64_list_free.
//
// # Safety
// `out_list` must be a valid pointer.
enum NsStatus ns_complements(uint64_t d, uint64_t n, struct NsU64List **out_list);

// Length of a list handle; 0 for null.
//
// # Safety
// `list` must be null or a handle from this library.
size_t ns_u64_list_len(const struct NsU64List *list);

// Element of a list handle by index.
//
// # Safety
// `list` must be null or a live handle; `out_value` must be valid.
enum NsStatus ns_u64_list_get(const struct NsU64List *list, size_t index, uint64_t *out_value);

// Releases a list handle; null is ignored.
//
// # Safety
// `list` must be null or a handle from this library, not yet freed.
void ns_u64_list_free(struct NsU64List *list);

// Coprime building blocks (g, a, b, c) of a label, in that order.
//
// # Safety
// `out_gabc` must point to four writable values.
enum NsStatus ns_decompose(uint64_t d, uint64_t m, uint64_t n, uint64_t *out_gabc);

// Canonical witness pair (x, y) for a label.
//
// # Safety
// `out_x` and `out_y` must be valid pointers.
enum NsStatus ns_xy_from_locus(uint64_t d, uint64_t m, uint64_t n, int64_t *out_x, int64_t *out_y);

// Canonical singular relation of a label.
//
// # Safety
// `out_relation` must be a valid pointer.
enum NsStatus ns_equation(uint64_t d, uint64_t m, uint64_t n, struct NsRelation *out_relation);

// Exponent label recovered from a relation; `relation.delta` and
// `relation.p` are ignored and recomputed.
//
// # Safety
// All pointers must be valid.
enum NsStatus ns_locus_of_relation(const struct NsRelation *relation,
                                   uint64_t *out_m,
                                   uint64_t *out_n);

// Periods from the two curve moduli for the witness pair (x, y).
//
// # Safety
// `out_period` must be a valid pointer.
enum NsStatus ns_solve_period(uint64_t d,
                              int64_t x,
                              int64_t y,
                              struct NsComplex tau_e,
                              struct NsComplex tau_f,
                              struct NsPeriod *out_period);

// Checks both embedded curves on the periods spanned by (z1, z2) and
// reports the pairing exponents. A tolerance of 0 or below selects the
// built-in default.
//
// # Safety
// All out-pointers must be valid.
enum NsStatus ns_verify_lattice(uint64_t d,
                                int64_t x,
                                int64_t y,
                                struct NsComplex z1,
                                struct NsComplex z2,
                                double tolerance,
                                bool *out_x_member,
                                bool *out_y_member,
                                uint64_t *out_m,
                                uint64_t *out_n);

// Orbit check over full-order cyclic subgroups with the given block
// intersection sizes.
//
// # Safety
// `out_count` and `out_single_orbit` must be valid pointers.
enum NsStatus ns_sp_transitive(uint64_t n,
                               uint64_t a,
                               uint64_t b,
                               uint64_t *out_count,
                               bool *out_single_orbit);

// Enumeration of allowable kernel subgroups for the quadruple.
//
// # Safety
// `out_count` and `out_contains_standard` must be valid pointers.
enum NsStatus ns_sp_allowable(uint64_t a,
                              uint64_t b,
                              uint64_t c,
                              uint64_t d,
                              uint64_t *out_count,
                              bool *out_contains_standard);

// Orbit check over valid source/kernel pairs for the quadruple.
//
// # Safety
// `out_pair_count` and `out_single_orbit` must be valid pointers.
enum NsStatus ns_sp_technical1(uint64_t a,
                               uint64_t b,
                               uint64_t c,
                               uint64_t d,
                               uint64_t *out_pair_count,
                               bool *out_single_orbit);

// Quotient torsion domination check.
//
// # Safety
// `out_holds` must be a valid pointer.
enum NsStatus ns_sp_domination(uint64_t c, uint64_t d, uint64_t a, uint64_t b, bool *out_holds);

// Divides the vector `x` (four coordinates mod n) by the cofactor of
// its order: writes the lexicographically first full-order `y` with
// (n / order) * y = x.
//
// # Safety
// `x` must point to four readable values, `out_y` to four writable
// ones, and `out_order` must be valid.
enum NsStatus ns_sp_division(uint64_t n, const int64_t *x, uint64_t *out_y, uint64_t *out_order);

// k-torsion identity on the standard rank-2 block mod n.
//
// # Safety
// `out_holds` must be a valid pointer.
enum NsStatus ns_sp_torsion(uint64_t n, uint64_t k, bool *out_holds);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NONSIMPLE_H */
