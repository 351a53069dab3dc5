/*
 * frobun - exact arithmetic for Frobenius actions on the cohomology of
 * moduli stacks of principal bundles over curves over finite fields.
 *
 * C API: opaque handles, integer error codes, JSON string results. Every
 * char** output is heap-allocated and must be released with
 * frobun_string_free(). All functions return FROBUN_OK (0) on success; on
 * failure frobun_last_error() carries a thread-local detail message.
 */
#ifndef FROBUN_H
#define FROBUN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define FROBUN_OK 0
#define FROBUN_ERR_INVALID 1  /* unparsable or invalid input */
#define FROBUN_ERR_DOMAIN 2   /* rejected: singular model, enumeration cap, pole, ... */
#define FROBUN_ERR_CONTEXT 3  /* operands from incompatible contexts */
#define FROBUN_ERR_INTERNAL 4 /* internal invariant violation */

typedef struct frobun_group frobun_group;
typedef struct frobun_curve frobun_curve;
typedef struct frobun_action frobun_action;

const char* frobun_version(void);
const char* frobun_strerror(int code);
const char* frobun_last_error(void);
void frobun_string_free(char* s);

/*
 * Groups. `spec` is a Cartan label ("A1", "B3", "E8", "Gm") or a product
 * joined with 'x' ("A1xG2"). `eps` optionally lists twist roots of unity as
 * "order:exponent" pairs, comma separated, one per rank index ("1:0,3:1");
 * pass NULL for the split form (all 1).
 */
int frobun_group_parse(const char* spec, const char* eps, frobun_group** out);
void frobun_group_free(frobun_group* g);
int frobun_group_info_json(const frobun_group* g, char** json_out);
/* Steinberg point count #G(F_q): formula factors plus exact value. */
int frobun_group_count_json(const frobun_group* g, unsigned long q, char** json_out);
/* Exhaustive SL_n(F_q) count, n in {2,3}; the independent oracle. */
int frobun_group_bruteforce_sl(unsigned n, unsigned long q, char** count_out);

/*
 * Curves. Either an explicit model over F_q ("y2=x3+x" hyperelliptic or
 * "plane:<homogeneous poly in x,y,z>"), or zeta data: point counts
 * N_1..N_g, or the 2g+1 numerator coefficients as decimal strings.
 */
int frobun_curve_from_model(const char* model, unsigned long q, unsigned threads, frobun_curve** out);
int frobun_curve_from_counts(unsigned long q, unsigned genus, const long long* counts, size_t n,
                             frobun_curve** out);
int frobun_curve_from_coeffs(unsigned long q, const char* const* coeffs, size_t n, frobun_curve** out);
void frobun_curve_free(frobun_curve* c);
int frobun_curve_genus(const frobun_curve* c, unsigned* genus_out);
int frobun_curve_zeta_json(const frobun_curve* c, char** json_out);
/* Points over F_{q^k}: enumerated for model-backed curves, recovered from
 * the zeta numerator otherwise. Decimal string result. */
int frobun_curve_count_points(const frobun_curve* c, unsigned k, unsigned threads, char** count_out);
/* zeta_X(s) as an exact rational "num/den", s >= 2. */
int frobun_curve_zeta_value(const frobun_curve* c, long s, char** value_out);

/* Poincare series of one component of the moduli stack (classifying = 0) or
 * of the classifying stack (classifying = 1). `component` optionally names
 * the pi_1(G) component; it is echoed as metadata (the graded dimensions
 * are the same on every component). */
int frobun_poincare_json(const frobun_group* g, unsigned genus, unsigned max_degree, int classifying,
                         const char* component, char** json_out);

/*
 * Frobenius actions. `expr` composes the four kinds psi, phi, frob, fbar
 * with '^' iteration and 'o' composition, applied right-to-left:
 * "frob^2 o psi^3". Classifying-stack actions exist for "frob"/"fbar" only.
 */
int frobun_action_parse(const frobun_group* g, unsigned genus, unsigned long q, const char* expr,
                        frobun_action** out);
int frobun_action_classifying(const frobun_group* g, unsigned long q, const char* kind,
                              frobun_action** out);
void frobun_action_free(frobun_action* a);
int frobun_action_table_json(const frobun_action* a, char** json_out);

/* Full-algebra alternating trace: verdict, per-generator magnitudes, exact
 * partial sums S_0..S_M, closed form and Behrend mass when convergent. */
int frobun_trace_json(const frobun_action* a, const frobun_curve* c, unsigned max_degree,
                      char** json_out);
/* Generator-truncated trace (spans of a,f plus the full exterior algebra);
 * signed_mode 0 keeps the plain subset sum, 1 alternates odd subsets. */
int frobun_truncated_trace_json(const frobun_action* a, const frobun_curve* c, int signed_mode,
                                char** json_out);

/* Run the cross-module oracle suite; JSON lists every check. */
int frobun_verify_json(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FROBUN_H */
