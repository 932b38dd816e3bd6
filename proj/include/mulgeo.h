/* C API for the multiplicative-geometry library.
 *
 * Conventions:
 *   - Multiplicative scalars cross the boundary as double logvals: the
 *     multiplicative number e^x is passed as x. 0* is 0.0, 1* is 1.0.
 *   - Multiplicative vectors are double[3] logvecs.
 *   - Curve parameters (s, s0, s1, domain endpoints) are positive reals.
 *   - Functions that can fail return mg_status; MG_OK is 0. On failure,
 *     mg_last_error() returns a thread-local message (valid until the next
 *     failing call on the same thread) and mg_last_error_offset() a byte
 *     offset into the offending source text when the error references one
 *     (expression parse and evaluation errors); MG_NO_OFFSET otherwise.
 *   - char** outputs receive malloc'd strings; release with mg_string_free.
 *   - mg_curve handles are immutable after creation and safe to share
 *     across threads.
 */

#ifndef MULGEO_H
#define MULGEO_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mg_curve mg_curve;

typedef enum {
  MG_OK = 0,
  MG_ERR_INVALID = 1,     /* bad argument / unknown name */
  MG_ERR_PARSE = 2,       /* expression or JSON syntax error */
  MG_ERR_DOMAIN = 3,      /* out of domain / undefined operation */
  MG_ERR_IO = 4,          /* file I/O */
  MG_ERR_NUMERIC = 5,     /* quadrature/iteration failure, degenerate frame */
  MG_ERR_UNSUPPORTED = 6  /* valid request outside implemented range */
} mg_status;

#define MG_NO_OFFSET ((size_t)-1)

const char* mg_version(void);
const char* mg_last_error(void);
size_t mg_last_error_offset(void);
void mg_string_free(char* s);

/* ---- multiplicative arithmetic on logvals ---- */

double mg_madd(double a, double b);
double mg_msub(double a, double b);
double mg_mmul(double a, double b);
mg_status mg_mdiv(double a, double b, double* out);
double mg_mneg(double a);
mg_status mg_minv(double a, double* out);
double mg_mabs(double a);
mg_status mg_mpow(double a, double k, double* out);
mg_status mg_msqrt(double a, double* out);
double mg_msin(double a);
double mg_mcos(double a);
mg_status mg_mtan(double a, double* out);
mg_status mg_to_logval(double positive_value, double* out);
double mg_from_logval(double logval);

/* ---- multiplicative 3-vectors on logvecs ---- */

void mg_vadd(const double a[3], const double b[3], double out[3]);
void mg_vsub(const double a[3], const double b[3], double out[3]);
void mg_vneg(const double a[3], double out[3]);
void mg_smul(double k_logval, const double a[3], double out[3]);
double mg_minner(const double a[3], const double b[3]);
void mg_mcross(const double a[3], const double b[3], double out[3]);
double mg_mnorm(const double a[3]);
mg_status mg_mangle(const double a[3], const double b[3], double* out);

/* ---- curve expressions (one component, parameter symbol `s`) ---- */

/* Parse and reprint in canonical form (round-trips through the parser). */
mg_status mg_expr_canon(const char* src, char** out);
mg_status mg_expr_eval(const char* src, double s, double* out_logval);
/* Multiplicative derivative of the component at s, order 1..4. */
mg_status mg_expr_deriv(const char* src, double s, int order,
                        double* out_logval);
/* Multiplicative integral over [s0, s1]. */
mg_status mg_expr_integral(const char* src, double s0, double s1,
                           double* out_logval);

/* ---- curves ---- */

mg_status mg_curve_from_exprs(const char* x1, const char* x2, const char* x3,
                              double s_lo, double s_hi, const char* name,
                              mg_curve** out);
/* {"x1": "...", "x2": "...", "x3": "...", "domain": [lo, hi], "name": "..."} */
mg_status mg_curve_from_json(const char* json_text, mg_curve** out);
mg_status mg_curve_preset(const char* name, mg_curve** out);
void mg_curve_free(mg_curve* c);

void mg_curve_domain(const mg_curve* c, double* s_lo, double* s_hi);
const char* mg_curve_name(const mg_curve* c);
const char* mg_curve_note(const mg_curve* c);
int mg_curve_is_corrected(const mg_curve* c);
int mg_curve_is_reparametrized(const mg_curve* c);
mg_status mg_curve_is_natural(const mg_curve* c, int* out);
/* New handle for the arc-length reparametrization (speed becomes 1*). */
mg_status mg_curve_reparam_natural(const mg_curve* c, mg_curve** out);

mg_status mg_curve_point(const mg_curve* c, double s, double out_logvec[3]);
mg_status mg_curve_velocity(const mg_curve* c, double s, double out_logvec[3]);
mg_status mg_curve_speed(const mg_curve* c, double s, double* out_logval);
mg_status mg_curve_arclength(const mg_curve* c, double s0, double s1,
                             double* out_logval);
mg_status mg_curve_frenet(const mg_curve* c, double s, double t[3],
                          double n[3], double b[3], double* kappa,
                          double* tau);
/* Residual norms of the three Frenet formulas at s. */
mg_status mg_curve_frenet_residuals(const mg_curve* c, double s,
                                    double out[3]);

/* ---- helix invariants and classification ---- */

mg_status mg_helix_profiles(const mg_curve* c, double s, double* f,
                            double* sigma, double* gamma, double* psi);
/* HelixReport as JSON over a log-uniform grid of n samples on [s_lo, s_hi].
 * tol <= 0 selects the default (1e-6, or 1e-4 for reparametrized curves). */
mg_status mg_classify_json(const mg_curve* c, double s_lo, double s_hi, int n,
                           double tol, char** out_json);

/* ---- indicatrices (kind: "tangent" | "normal" | "binormal") ---- */

mg_status mg_indicatrix_point(const mg_curve* c, const char* kind, double s,
                              double out_logvec[3]);
mg_status mg_indicatrix_arc(const mg_curve* c, const char* kind, double s0,
                            double s1, double* out_logval, int* tau_flagged);
mg_status mg_indicatrix_closed(const mg_curve* c, const char* kind, double s,
                               double T[3], double N[3], double B[3],
                               double* kappa, double* tau, double* arc,
                               double* f, double* sigma);
/* Direct route (reparametrized indicatrix curve). The underlying
 * reparametrization is built once per kind and cached on the handle. */
mg_status mg_indicatrix_direct(const mg_curve* c, const char* kind, double s,
                               double T[3], double N[3], double B[3],
                               double* kappa, double* tau, double* arc);
/* Candidate-formula adjudication table as JSON. match_tol <= 0 -> 1e-6. */
mg_status mg_adjudication_json(const mg_curve* c, double s_lo, double s_hi,
                               int n, double match_tol, char** out_json);

/* ---- classical oracle ---- */

/* Discrepancy table (CSV: s,quantity,mult_logval,classical,absdiff) over a
 * log-uniform grid, plus summary statistics. errors_text receives one line
 * per failed sample ("s=...: message"), empty when none failed. */
mg_status mg_oracle_compare_csv(const mg_curve* c, double s_lo, double s_hi,
                                int n, char** out_csv, double* max_absdiff,
                                double* mean_absdiff, int* n_errors,
                                char** errors_text);

/* ---- presets and grids ---- */

int mg_preset_count(void);
const char* mg_preset_name(int index); /* NULL when out of range */
mg_status mg_preset_info_json(const char* name, char** out_json);

/* n parameter values uniform in log s, endpoints included; n >= 2. */
mg_status mg_grid_log_uniform(double s_lo, double s_hi, int n, double* out_s);

#ifdef __cplusplus
}
#endif

#endif /* MULGEO_H */
