/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the hankel31 library: verification toolkit for the sharp
 * third-Hankel-determinant bound 4(1-alpha)^2/9 on starlike functions of
 * order alpha. All functions return an h31_status; results go to out
 * pointers. Variable-sized results (scan rows, critical-point reports) are
 * returned through opaque handles with explicit free functions.
 */
#ifndef HANKEL31_H
#define HANKEL31_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum h31_status {
  H31_OK = 0,
  H31_EDOM = 1,     /* argument outside a documented precondition */
  H31_EINVAL = 2,   /* null pointer / malformed call */
  H31_ENOSIGN = 3,  /* bisection bracket carries no sign change */
  H31_ENONFIN = 4,  /* non-finite function evaluation */
  H31_EINTERNAL = 5
} h31_status;

/* Human-readable name of a status code. */
const char* h31_status_str(h31_status status);

typedef struct h31_complex {
  double re, im;
} h31_complex;

typedef struct h31_params {
  double p1;
  h31_complex gamma, eta, rho;
} h31_params;

typedef struct h31_coeffs {
  double p1;
  h31_complex p2, p3, p4;
} h31_coeffs;

typedef struct h31_schlicht {
  h31_complex a2, a3, a4, a5;
} h31_schlicht;

typedef struct h31_point {
  double p, x, y;
} h31_point;

typedef struct h31_root_result {
  char target[16];
  double lo, hi, root, residual;
  int iterations;
} h31_root_result;

typedef struct h31_grid_steps {
  int np, nx, ny;
} h31_grid_steps;

typedef struct h31_opt_config {
  h31_grid_steps grid_steps;
  double refine_tol;
  int refine_max_iter;
  uint64_t seed;
  long long sample_count;
} h31_opt_config;

/* Defaults: grid (201,101,101), refine_tol 1e-10, 200 iterations, seed 0,
 * 100000 samples. */
void h31_opt_config_default(h31_opt_config* cfg);

typedef enum h31_max_source { H31_SRC_GRID = 0, H31_SRC_REFINED = 1, H31_SRC_CORNER = 2 } h31_max_source;

typedef struct h31_max_report {
  double value;
  h31_point argmax;
  int source; /* h31_max_source */
  long long evaluations;
} h31_max_report;

typedef struct h31_probe_result {
  double value;
  h31_params witness;
  long long witness_index; /* -1 marks the injected extremal tuple */
} h31_probe_result;

enum { H31_FACE_P0 = 0, H31_FACE_P2, H31_FACE_X0, H31_FACE_X1, H31_FACE_Y0, H31_FACE_Y1 };
enum {
  H31_EDGE_R1 = 0,
  H31_EDGE_R2,
  H31_EDGE_R3,
  H31_EDGE_R4,
  H31_EDGE_R5,
  H31_EDGE_CP2,
  H31_EDGE_CP0X1
};

enum { H31_ROW_VERIFIED = 0, H31_ROW_OBSERVATION = 1, H31_ROW_EXCLUDED_WINDOW = 2 };

typedef struct h31_scan_row {
  double alpha;
  double bound_closed_form;
  double grid_max;
  h31_point argmax;
  double probe_max;
  double face_maxima[6]; /* indexed by H31_FACE_* */
  double edge_maxima[7]; /* indexed by H31_EDGE_* */
  int p_alpha_present;
  double p_alpha;
  double hankel2_max;
  int status; /* H31_ROW_* */
} h31_scan_row;

typedef struct h31_crosscheck_report {
  long long samples;
  uint64_t seed;
  double worst_decomposition_rel;
  double worst_rotation_rel;
  double worst_bound_excess;
  double worst_majorant_excess;
  double worst_pointwise_excess;
  double observed_majorant_excess;
  double observed_pointwise_excess;
  int pass;
} h31_crosscheck_report;

/* ---- coefficient kernel ---- */

h31_status h31_p2(double p1, h31_complex gamma, h31_complex* out);
h31_status h31_p3(double p1, h31_complex gamma, h31_complex eta, h31_complex* out);
h31_status h31_p4(const h31_params* params, h31_complex* out);
h31_status h31_coeffs_from_params(const h31_params* params, h31_coeffs* out);
h31_status h31_sample_param(uint64_t seed, uint64_t index, h31_params* out);

/* ---- coefficient functionals ---- */

h31_status h31_schlicht_coeffs(double alpha, const h31_coeffs* p, h31_schlicht* out);
h31_status h31_hankel3(const h31_schlicht* c, h31_complex* out);
h31_status h31_hankel2(const h31_schlicht* c, h31_complex* out);
h31_status h31_fekete_szego_bound(double alpha, h31_complex lambda, double* out);
h31_status h31_rotate_coeffs(const h31_schlicht* c, double theta, h31_schlicht* out);
/* Writes min(n_max, cap) leading coefficients a_1.. into out. */
h31_status h31_extremal_coeffs(double alpha, int n_max, double* out, size_t cap);
h31_status h31_sharp_bound(double alpha, double* out);

/* ---- bound surface ---- */

h31_status h31_delta_terms(double alpha, double p, h31_complex gamma, h31_complex* d1,
                           h31_complex* d2, h31_complex* d3);
h31_status h31_phi_term(double alpha, double p, h31_complex gamma, h31_complex eta,
                        h31_complex* out);
h31_status h31_hankel3_decomposed(double alpha, const h31_params* params,
                                  h31_complex* out);
h31_status h31_z_terms(double alpha, double p, double x, double* z1, double* z2,
                       double* z3, double* z4);
h31_status h31_big_z(double alpha, h31_point pt, double* out);
h31_status h31_face_value(int face, double alpha, double u, double v, double* out);
h31_status h31_edge_value(int edge, double alpha, double t, double* out);
/* *present = 0 encodes every degenerate outcome (zero denominator, value
 * outside (0,1)); the status stays H31_OK. */
h31_status h31_interior_y_crit(double alpha, double p, double x, int* present,
                               double* y0);
h31_status h31_face_x0_y_crit(double alpha, double p, int* present, double* y0);
h31_status h31_lmn(double alpha, int* l_present, double* l, double* m, double* n);
h31_status h31_p_of_alpha(double alpha, double* out);
h31_status h31_eq40_value(double alpha, double p, double* out);

/* ---- root isolation ---- */

h31_status h31_alpha0(h31_root_result* out);
h31_status h31_alpha1(h31_root_result* out);
h31_status h31_alpha2(h31_root_result* out);
h31_status h31_beta0(h31_root_result* out);
h31_status h31_eq40_p_root(double alpha, int* present, h31_root_result* out);

/* ---- optimizer / probe ---- */

h31_status h31_grid_max(double alpha, const h31_opt_config* cfg, int threads,
                        h31_max_report* out);
h31_status h31_refine_local(double alpha, h31_point start, const h31_opt_config* cfg,
                            h31_max_report* out);
h31_status h31_global_max(double alpha, const h31_opt_config* cfg, int threads,
                          h31_max_report* out);
h31_status h31_probe_max(double alpha, const h31_opt_config* cfg, int threads,
                         h31_probe_result* out);

/* Interior critical-point scan; returns an opaque report. */
typedef struct h31_critical_report h31_critical_report;
h31_status h31_interior_critical_scan(double alpha, const h31_opt_config* cfg,
                                      h31_critical_report** out);
size_t h31_critical_report_count(const h31_critical_report* rep);
/* Entry layout: p, x, y0, grad_norm. */
h31_status h31_critical_report_entry(const h31_critical_report* rep, size_t i,
                                     double* p, double* x, double* y0,
                                     double* grad_norm);
void h31_critical_report_free(h31_critical_report* rep);

/* ---- scan rows / crosscheck ---- */

typedef struct h31_scan h31_scan;
/* One row per alpha in [alpha_min, alpha_max] with the given step. */
h31_status h31_scan_run(double alpha_min, double alpha_max, double alpha_step,
                        const h31_opt_config* cfg, double alpha0_window, int threads,
                        h31_scan** out);
size_t h31_scan_row_count(const h31_scan* scan);
h31_status h31_scan_get_row(const h31_scan* scan, size_t i, h31_scan_row* out);
void h31_scan_free(h31_scan* scan);

h31_status h31_crosscheck(long long samples, uint64_t seed, h31_crosscheck_report* out);

/* Face/edge restriction maxima (grid + local refinement). */
h31_status h31_face_max(int face, double alpha, const h31_opt_config* cfg, double* out);
h31_status h31_edge_max(int edge, double alpha, const h31_opt_config* cfg, double* out);

const char* h31_version(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HANKEL31_H */
