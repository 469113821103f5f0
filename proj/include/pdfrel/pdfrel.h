/* C interface to the pdfrel library. All functions are thread-safe; the
 * last error message is kept per thread. */
#ifndef PDFREL_PDFREL_H
#define PDFREL_PDFREL_H

#include <stddef.h>
#include <stdint.h>

#if defined(PDFREL_BUILDING)
#define PDFREL_API __attribute__((visibility("default")))
#else
#define PDFREL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdfrel_status {
  PDFREL_OK = 0,
  PDFREL_E_UNKNOWN_FAMILY = 1,
  PDFREL_E_PARAM_OUT_OF_RANGE = 2,
  PDFREL_E_MALFORMED_SPEC = 3,
  PDFREL_E_P_OUT_OF_RANGE = 4,
  PDFREL_E_Y_NOT_ATTAINED = 5,
  PDFREL_E_NOT_UNIMODAL = 6,
  PDFREL_E_DEGENERATE_LAW = 7,
  PDFREL_E_Y_OUT_OF_RANGE = 8,
  PDFREL_E_NOT_SYMMETRIC_UNIMODAL = 9,
  PDFREL_E_NOT_MONOTONE = 10,
  PDFREL_E_T_OUT_OF_SUPPORT = 11,
  PDFREL_E_CASE_UNSUPPORTED = 12,
  PDFREL_E_AT_BRANCH_BOUNDARY = 13,
  PDFREL_E_FLAT_ZONE = 14,
  PDFREL_E_PRECONDITION_VIOLATED = 15,
  PDFREL_E_UNKNOWN_THEOREM = 16,
  PDFREL_E_INTEGRAL_DIVERGED = 17,
  PDFREL_E_X_OUT_OF_SUPPORT = 18,
  PDFREL_E_BAD_UV_ORDER = 19,
  PDFREL_E_INVALID_ARGUMENT = 20,
  PDFREL_E_INTERNAL = 99
} pdfrel_status;

/* Name of a status, e.g. "PreconditionViolated". */
PDFREL_API const char* pdfrel_status_name(pdfrel_status status);
/* Message of the last failed call on this thread ("" after success). */
PDFREL_API const char* pdfrel_last_error(void);
PDFREL_API void pdfrel_free_string(char* s);

typedef struct pdfrel_dist pdfrel_dist;

/* Parses `family[:key=value,...]`. */
PDFREL_API pdfrel_status pdfrel_dist_create(const char* spec, pdfrel_dist** out);
PDFREL_API void pdfrel_dist_destroy(pdfrel_dist* d);
/* Canonical spec string; free with pdfrel_free_string. */
PDFREL_API pdfrel_status pdfrel_dist_spec(const pdfrel_dist* d, char** out);
/* Static string: StrictlyDecreasing, StrictlyIncreasing, Unimodal, Valley or
 * Constant. */
PDFREL_API const char* pdfrel_dist_shape(const pdfrel_dist* d);
PDFREL_API int pdfrel_dist_symmetric(const pdfrel_dist* d);
PDFREL_API void pdfrel_dist_support(const pdfrel_dist* d, double* lower, double* upper);
PDFREL_API double pdfrel_dist_mode(const pdfrel_dist* d);

typedef enum pdfrel_fn {
  PDFREL_FN_PDF = 0,
  PDFREL_FN_CDF,
  PDFREL_FN_SF,
  PDFREL_FN_QUANTILE,
  PDFREL_FN_ISF,
  PDFREL_FN_LOWER_INVERSE, /* l_y */
  PDFREL_FN_UPPER_INVERSE, /* u_y */
  PDFREL_FN_HAZARD,        /* at age arg */
  PDFREL_FN_CUMULATIVE_HAZARD,
  PDFREL_FN_MEAN_RESIDUAL,
  PDFREL_FN_RESIDUAL_QUANTILE, /* p = arg at age t */
  PDFREL_FN_PDF_RELATED_QUANTILE /* u-quantile of f(X) */
} pdfrel_fn;

/* Scalar function of the law; `t` is only read by residual functions. */
PDFREL_API pdfrel_status pdfrel_eval(const pdfrel_dist* d, pdfrel_fn fn, double arg,
                                     double t, double* out);

typedef enum pdfrel_law {
  PDFREL_LAW_K = 0, /* P(f(X) <= y) */
  PDFREL_LAW_KT,    /* P(f_t(X_t) <= y) */
  PDFREL_LAW_GT,    /* P(f(t + X_t) > y) */
  PDFREL_LAW_GT_PDF,/* density of f(t + X_t) */
  PDFREL_LAW_L,     /* P(-log f(X) <= x) */
  PDFREL_LAW_X      /* the law itself; oracle only */
} pdfrel_law;

/* Evaluates a law at y (x for L). K and Kt are strict: Y_OUT_OF_RANGE
 * outside the closure of the range of the density. */
PDFREL_API pdfrel_status pdfrel_law_eval(const pdfrel_dist* d, pdfrel_law law, double t,
                                         double y, double* out);
/* Case label of the G_t formula at age t: 'a', 'b', 'c' or 'd'. */
PDFREL_API pdfrel_status pdfrel_gt_case(const pdfrel_dist* d, double t, char* out);

typedef struct pdfrel_curve {
  const char* x_name;
  const char* value_name;
  double* x;
  double* value;
  size_t count;
} pdfrel_curve;

/* Tabulates a law on n points; release with pdfrel_curve_free. */
PDFREL_API pdfrel_status pdfrel_curve_make(const pdfrel_dist* d, pdfrel_law law, double t,
                                           int n, pdfrel_curve* out);
PDFREL_API void pdfrel_curve_free(pdfrel_curve* c);

typedef struct pdfrel_grid {
  int n_points;
  double eps_boundary;
  double tol_mono;
  double tol_eq;
} pdfrel_grid;

PDFREL_API pdfrel_grid pdfrel_grid_default(void);

typedef enum pdfrel_order {
  PDFREL_ORDER_ST = 0,
  PDFREL_ORDER_DISP,
  PDFREL_ORDER_CONVEX,
  PDFREL_ORDER_STAR,
  PDFREL_ORDER_KURTOSIS
} pdfrel_order;

/* Which transform of each input the order compares. */
typedef enum pdfrel_view {
  PDFREL_VIEW_X = 0,
  PDFREL_VIEW_PDF_RELATED, /* f(X) */
  PDFREL_VIEW_REARRANGED,  /* X* */
  PDFREL_VIEW_ABS_CENTERED,/* |X - Me| */
  PDFREL_VIEW_LOG          /* log X */
} pdfrel_view;

typedef struct pdfrel_verdict {
  int holds;
  int has_violation;
  double violation_p;
  double violation_lhs;
  double violation_rhs;
  double margin;
} pdfrel_verdict;

/* grid may be NULL for the defaults. */
PDFREL_API pdfrel_status pdfrel_check_order(pdfrel_order order, const pdfrel_dist* x,
                                            const pdfrel_dist* y, pdfrel_view view,
                                            const pdfrel_grid* grid, pdfrel_verdict* out);
PDFREL_API pdfrel_status pdfrel_mapping_phi(const pdfrel_dist* x, const pdfrel_dist* y,
                                            double at, double* out);
PDFREL_API pdfrel_status pdfrel_mapping_conditions(const pdfrel_dist* x, const pdfrel_dist* y,
                                                   const pdfrel_grid* grid, int* phi_geq_x,
                                                   int* phi_slope_geq_1);

PDFREL_API size_t pdfrel_theorem_count(void);
PDFREL_API const char* pdfrel_theorem_name(size_t i);

/* Runs one theorem instance and returns its JSON report; free with
 * pdfrel_free_string. Pass NAN for an absent t. */
PDFREL_API pdfrel_status pdfrel_verify(const char* theorem, const pdfrel_dist* const* dists,
                                       size_t n_dists, double t, double a, double b,
                                       const pdfrel_grid* grid, char** json_out);

typedef struct pdfrel_info {
  double entropy;
  double varentropy;
  double est_abs_error;
  int closed_form;
  int has_residual;
  double t;
  double residual_entropy;
  double residual_varentropy;
} pdfrel_info;

/* Entropy and varentropy; residual values too unless t is NAN. */
PDFREL_API pdfrel_status pdfrel_info_compute(const pdfrel_dist* d, double t, pdfrel_info* out);
/* form: 0 direct, 1 cumulative-hazard form, 2 hazard form. */
PDFREL_API pdfrel_status pdfrel_residual_entropy(const pdfrel_dist* d, double t, int form,
                                                 double* out);
PDFREL_API pdfrel_status pdfrel_weibull_ratio(double k, double u, double v, double p,
                                              double* out);

typedef struct pdfrel_oracle_result {
  double ks;
  double band;
  int pass;
  uint64_t n;
  uint64_t seed;
} pdfrel_oracle_result;

PDFREL_API pdfrel_status pdfrel_oracle(const pdfrel_dist* d, pdfrel_law law, double t,
                                       uint64_t n, uint64_t seed, unsigned workers,
                                       pdfrel_oracle_result* out);

typedef void (*pdfrel_criterion_cb)(int id, const char* title, int pass, const char* detail,
                                    double seconds, void* user);

/* Runs the acceptance criteria (all when n_only is 0) and stores the number
 * of failures in *failures. */
PDFREL_API pdfrel_status pdfrel_selftest(const int* only, size_t n_only, uint64_t mc_n,
                                         uint64_t seed, pdfrel_criterion_cb cb, void* user,
                                         int* failures);

#ifdef __cplusplus
}
#endif

#endif
