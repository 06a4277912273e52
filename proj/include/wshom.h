#ifndef WSHOM_H
#define WSHOM_H

/* C interface to the weighted simplicial homology engine.
 *
 * All functions return a wshom_status; WSHOM_OK means the out-parameters
 * are valid. On any other status the thread-local message from
 * wshom_last_error() describes the failure. Strings returned through
 * char** out are heap-allocated and must be released with
 * wshom_string_free; complexes with wshom_complex_free.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wshom_status {
    WSHOM_OK = 0,
    WSHOM_ERR_FIELD_MISMATCH = 1,
    WSHOM_ERR_ZERO_INPUT = 2,
    WSHOM_ERR_NOT_A_UNIT = 3,
    WSHOM_ERR_NOT_DIVISIBLE = 4,
    WSHOM_ERR_PARSE = 5,
    WSHOM_ERR_VALIDATION = 6,
    WSHOM_ERR_DOMAIN = 7,
    WSHOM_ERR_INTERNAL = 8,
    WSHOM_ERR_BAD_ARGUMENT = 9
} wshom_status;

/* Opaque handle for a weighted simplicial complex over a fixed field. */
typedef struct wshom_complex wshom_complex;

/* Report rendering flags. */
#define WSHOM_FORMAT_JSON 0x1u /* machine-readable mirror instead of text */
#define WSHOM_WITH_ORACLE 0x2u /* check report: append the random differential suite */

const char* wshom_version(void);

/* Message from the most recent failing call on this thread ("" if none). */
const char* wshom_last_error(void);

void wshom_string_free(char* s);

/* field: "q", "fp:<prime>", or NULL to honor the document's field entry.
 * The document schema is the same JSON the CLI consumes. */
wshom_status wshom_complex_from_json(const char* text, const char* field, wshom_complex** out);
wshom_status wshom_complex_from_file(const char* path, const char* field, wshom_complex** out);
void wshom_complex_free(wshom_complex* x);

/* Dimension of the complex (-1 when empty); simplex count per dimension. */
int wshom_complex_dim(const wshom_complex* x);
int wshom_complex_size(const wshom_complex* x, int dim);

/* Every report takes: dim < 0 for all degrees, flags as above, and an
 * optional processing-order seed (NULL for the canonical order). */
wshom_status wshom_report_homology(const wshom_complex* x, int dim, unsigned flags,
                                   const uint64_t* order_seed, char** out);
wshom_status wshom_report_basis(const wshom_complex* x, int dim, unsigned flags,
                                const uint64_t* order_seed, char** out);
wshom_status wshom_report_pairing(const wshom_complex* x, int dim, unsigned flags,
                                  const uint64_t* order_seed, char** out);

/* Quotient by the image of theta. sub supplies the sub-weights, matched
 * simplex by simplex; it must cover exactly the same complex. A NULL sub
 * means the constant exponent sub_const (ignored otherwise). */
wshom_status wshom_report_quotient(const wshom_complex* x, const wshom_complex* sub,
                                   int sub_const, int dim, unsigned flags, char** out);

/* Injectivity analysis of the maps induced by theta (rationals only). */
wshom_status wshom_report_theta(const wshom_complex* x, int dim, unsigned flags, char** out);

/* Loop nerve of a bi-structure given as two dot-bracket strings. */
wshom_status wshom_report_bistruct(const char* s, const char* t, const char* field,
                                   unsigned flags, char** out);

/* Verification suite; *passed is 1 when every check (and, with
 * WSHOM_WITH_ORACLE, every differential case) succeeded. */
wshom_status wshom_report_check(const wshom_complex* x, unsigned flags,
                                const uint64_t* order_seed, int* passed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WSHOM_H */
