/*
 * C interface to the Jacobi element library.
 *
 * Every object is an opaque handle created by a jac_* function and released
 * with the matching *_free. Functions that can fail return a jac_status; on
 * failure the output handle is left untouched and jac_last_error() describes
 * the problem for the calling thread. Strings handed out through char** are
 * owned by the caller and released with jac_string_free.
 */
#ifndef JACOBI_C_H
#define JACOBI_C_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(JACOBI_C_BUILDING)
#define JAC_API __declspec(dllexport)
#else
#define JAC_API __declspec(dllimport)
#endif
#else
#define JAC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jac_status {
    JAC_OK = 0,
    JAC_ERR_INVALID_ARGUMENT = 1,
    JAC_ERR_DEGREE_MISMATCH = 2,
    JAC_ERR_PARSE = 3,
    JAC_ERR_UNSUPPORTED = 4,
    JAC_ERR_INTERNAL = 5, /* deciders disagreed or another invariant broke */
    JAC_ERR_NO_MEMORY = 6
} jac_status;

typedef struct jac_element jac_element;
typedef struct jac_report jac_report;
typedef struct jac_subset_list jac_subset_list;
typedef struct jac_basis jac_basis;

typedef struct jac_search_options {
    int degree;
    long max_size; /* negative: unbounded */
    int require_nonempty;
    int require_identity;
    int threads; /* <= 1 runs single-threaded */
} jac_search_options;

/* Message for the last failing call on this thread; "" if none. */
JAC_API const char *jac_last_error(void);
/* 1-based input line of the last JAC_ERR_PARSE on this thread, or 0. */
JAC_API size_t jac_last_error_line(void);
JAC_API const char *jac_status_name(jac_status status);

JAC_API int jac_max_degree(void);
JAC_API void jac_string_free(char *text);

/* Group ring elements ---------------------------------------------------- */

JAC_API jac_status jac_element_parse(const char *text, jac_element **out);
JAC_API jac_status jac_element_omega(int n, jac_element **out);
JAC_API jac_status jac_element_format(const jac_element *element, char **out_text);
JAC_API int jac_element_degree(const jac_element *element);
JAC_API size_t jac_element_term_count(const jac_element *element);
JAC_API int jac_element_equal(const jac_element *a, const jac_element *b);
JAC_API void jac_element_free(jac_element *element);

/* Expanded left-normed bracket [x_{p1}, ..., x_{pn}] in element text form. */
JAC_API jac_status jac_expand_bracket(const int *images, size_t n, char **out_text);

/* Verdicts --------------------------------------------------------------- */

JAC_API jac_status jac_check_element(const jac_element *element, int threads, jac_report **out);
JAC_API jac_status jac_check_subset(const jac_subset_list *list, size_t index, int threads,
                                    jac_report **out);

JAC_API int jac_report_is_jacobi(const jac_report *report);
JAC_API int jac_report_degree(const jac_report *report);
JAC_API size_t jac_report_decider_count(const jac_report *report);
JAC_API const char *jac_report_decider_name(const jac_report *report, size_t k);
JAC_API int jac_report_decider_is_jacobi(const jac_report *report, size_t k);
/* Returns 1 and fills tau_out (degree entries, 1-based one-line images) and,
 * when value_out is non-null, a decimal string, if decider k has a witness. */
JAC_API int jac_report_decider_witness(const jac_report *report, size_t k, int *tau_out,
                                       char **value_out);
JAC_API void jac_report_free(jac_report *report);

/* Subsets ---------------------------------------------------------------- */

JAC_API jac_status jac_subsets_parse(const char *text, jac_subset_list **out);
JAC_API size_t jac_subsets_count(const jac_subset_list *list);
/* 0 when the list contains no permutation at all. */
JAC_API int jac_subsets_degree(const jac_subset_list *list);
JAC_API size_t jac_subsets_size(const jac_subset_list *list, size_t index);
JAC_API jac_status jac_subsets_format(const jac_subset_list *list, char **out_text);
/* One line per tau in lex order: "<tau> | <|T cap tau I+|> <|T cap tau I-|>". */
JAC_API jac_status jac_subset_balance_table(const jac_subset_list *list, size_t index,
                                            char **out_text);
JAC_API void jac_subsets_free(jac_subset_list *list);

JAC_API jac_status jac_search(const jac_search_options *options, jac_subset_list **out);

/* Jacobi lattice --------------------------------------------------------- */

JAC_API jac_status jac_basis_compute(int n, jac_basis **out);
JAC_API size_t jac_basis_rank(const jac_basis *basis);
/* Basis vectors in element text form separated by "---" lines. */
JAC_API jac_status jac_basis_format(const jac_basis *basis, char **out_text);
JAC_API jac_status jac_basis_contains(const jac_basis *basis, const jac_element *element,
                                      int *out_member);
JAC_API void jac_basis_free(jac_basis *basis);

#ifdef __cplusplus
}
#endif

#endif /* JACOBI_C_H */
