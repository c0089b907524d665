/* C interface to the bubble-algebra engine.
 *
 * All computations run against an opaque algebra handle carrying n, m and
 * the parameter tuple.  Results come back as NUL-terminated strings owned
 * by the library; release them with bubble_string_free.  Functions return
 * BUBBLE_OK on success; on failure bubble_last_error() describes the
 * problem (the string stays valid until the next call on the same thread).
 */
#ifndef BUBBLE_H
#define BUBBLE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bubble_status {
  BUBBLE_OK = 0,
  BUBBLE_ERROR_INTERNAL = 1,
  BUBBLE_ERROR_INVALID = 2
} bubble_status;

typedef struct bubble_algebra bubble_algebra;

const char* bubble_version(void);

/* thread-local message for the most recent failure */
const char* bubble_last_error(void);

void bubble_string_free(char* s);

/* deltas: m parameter tokens ("<integer>", "<p>/<q>", "root:<l>", "generic"),
 * or NULL for all-generic parameters */
bubble_status bubble_algebra_new(int n, int m, const char* const* deltas,
                                 int n_deltas, bubble_algebra** out);
void bubble_algebra_free(bubble_algebra* a);

/* format: "text", "json", "csv" or "dot" where meaningful */

/* bubble-diagram basis, or the cell-module basis when lambda ("a,b,...")
 * is non-NULL */
bubble_status bubble_basis(const bubble_algebra* a, const char* lambda,
                           const char* format, char** out);

/* product of two diagrams in canonical text form */
bubble_status bubble_multiply(const bubble_algebra* a, const char* diagram_a,
                              const char* diagram_b, const char* format,
                              char** out);

/* Gram matrix of the cell module: direct entries, or the block factorization
 * when factorized != 0 */
bubble_status bubble_gram(const bubble_algebra* a, const char* lambda,
                          int factorized, const char* format, char** out);

/* Gram determinant (closed product formula), evaluated when the parameters
 * are specialized */
bubble_status bubble_det(const bubble_algebra* a, const char* lambda,
                         const char* format, char** out);

/* exact rank of the specialized Gram matrix */
bubble_status bubble_rank(const bubble_algebra* a, const char* lambda,
                          long* out_rank);

/* cell/head/radical dimension table over the whole weight lattice */
bubble_status bubble_dims(const bubble_algebra* a, const char* format,
                          char** out);

bubble_status bubble_radical_series(const bubble_algebra* a, const char* lambda,
                                    const char* format, char** out);

/* order: NULL for the default weight order, or "paper-6-2" */
bubble_status bubble_decomp(const bubble_algebra* a, const char* order,
                            const char* format, char** out);
bubble_status bubble_cartan(const bubble_algebra* a, const char* order,
                            const char* format, char** out);
bubble_status bubble_blocks(const bubble_algebra* a, const char* order,
                            const char* format, char** out);

/* semisimplicity / quasi-heredity predicates: result 0 or 1 */
bubble_status bubble_is_semisimple(const bubble_algebra* a, int* out);
bubble_status bubble_is_quasi_hereditary(const bubble_algebra* a, int* out);

/* runs the invariant suite; *out receives the report, *ok 0 or 1 */
bubble_status bubble_check(char** out, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* BUBBLE_H */
