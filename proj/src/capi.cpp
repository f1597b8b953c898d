// SPDX-License-Identifier: Apache-2.0
//
// extern "C" wrapper over the C++ core. Exceptions are mapped to status
// codes; nothing throws across the boundary.
#include "hankel31.h"

#include <cstring>
#include <new>
#include <vector>

#include "hankel31/caratheodory.hpp"
#include "hankel31/functionals.hpp"
#include "hankel31/optimizer.hpp"
#include "hankel31/roots.hpp"
#include "hankel31/scan.hpp"
#include "hankel31/surface.hpp"
#include "hankel31/types.hpp"

namespace {

h31::complex cpx(h31_complex z) { return h31::complex{z.re, z.im}; }
h31_complex cpx(h31::complex z) { return h31_complex{z.real(), z.imag()}; }

h31::CaratheodoryParams params_in(const h31_params& p) {
  return h31::CaratheodoryParams{p.p1, cpx(p.gamma), cpx(p.eta), cpx(p.rho)};
}

h31_params params_out(const h31::CaratheodoryParams& p) {
  return h31_params{p.p1, cpx(p.gamma), cpx(p.eta), cpx(p.rho)};
}

h31::SchlichtCoeffs schlicht_in(const h31_schlicht& c) {
  return h31::SchlichtCoeffs{cpx(c.a2), cpx(c.a3), cpx(c.a4), cpx(c.a5)};
}

h31_schlicht schlicht_out(const h31::SchlichtCoeffs& c) {
  return h31_schlicht{cpx(c.a2), cpx(c.a3), cpx(c.a4), cpx(c.a5)};
}

h31::OptimizerConfig cfg_in(const h31_opt_config* cfg) {
  if (!cfg) {
    h31::OptimizerConfig def;
    return def;
  }
  h31::OptimizerConfig out;
  out.grid_steps = h31::GridSteps{cfg->grid_steps.np, cfg->grid_steps.nx, cfg->grid_steps.ny};
  out.refine_tol = cfg->refine_tol;
  out.refine_max_iter = cfg->refine_max_iter;
  out.seed = cfg->seed;
  out.sample_count = cfg->sample_count;
  return out;
}

h31_root_result root_out(const h31::RootResult& r) {
  h31_root_result out{};
  std::strncpy(out.target, r.target.c_str(), sizeof(out.target) - 1);
  out.lo = r.lo;
  out.hi = r.hi;
  out.root = r.root;
  out.residual = r.residual;
  out.iterations = r.iterations;
  return out;
}

h31_max_report report_out(const h31::MaxReport& r) {
  h31_max_report out{};
  out.value = r.value;
  out.argmax = h31_point{r.argmax.p, r.argmax.x, r.argmax.y};
  out.source = static_cast<int>(r.source);
  out.evaluations = r.evaluations;
  return out;
}

// Runs `fn`, translating exceptions into status codes.
template <typename Fn>
h31_status guarded(Fn&& fn) {
  try {
    fn();
    return H31_OK;
  } catch (const h31::domain_error&) {
    return H31_EDOM;
  } catch (const h31::bracket_error&) {
    return H31_ENOSIGN;
  } catch (const std::bad_alloc&) {
    return H31_EINTERNAL;
  } catch (...) {
    return H31_EINTERNAL;
  }
}

}  // namespace

extern "C" {

struct h31_critical_report {
  std::vector<h31::CriticalPoint> entries;
};

struct h31_scan {
  std::vector<h31::BoundScanRow> rows;
};

const char* h31_status_str(h31_status status) {
  switch (status) {
    case H31_OK: return "ok";
    case H31_EDOM: return "domain error";
    case H31_EINVAL: return "invalid argument";
    case H31_ENOSIGN: return "no sign change";
    case H31_ENONFIN: return "non-finite evaluation";
    case H31_EINTERNAL: return "internal error";
  }
  return "unknown";
}

const char* h31_version(void) { return "1.0.0"; }

void h31_opt_config_default(h31_opt_config* cfg) {
  if (!cfg) return;
  cfg->grid_steps = h31_grid_steps{201, 101, 101};
  cfg->refine_tol = 1e-10;
  cfg->refine_max_iter = 200;
  cfg->seed = 0;
  cfg->sample_count = 100000;
}

h31_status h31_p2(double p1, h31_complex gamma, h31_complex* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = cpx(h31::p2_of(p1, cpx(gamma))); });
}

h31_status h31_p3(double p1, h31_complex gamma, h31_complex eta, h31_complex* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = cpx(h31::p3_of(p1, cpx(gamma), cpx(eta))); });
}

h31_status h31_p4(const h31_params* params, h31_complex* out) {
  if (!params || !out) return H31_EINVAL;
  return guarded([&] { *out = cpx(h31::p4_of(params_in(*params))); });
}

h31_status h31_coeffs_from_params(const h31_params* params, h31_coeffs* out) {
  if (!params || !out) return H31_EINVAL;
  return guarded([&] {
    const h31::CaratheodoryCoeffs c = h31::coeffs_from_params(params_in(*params));
    *out = h31_coeffs{c.p1, cpx(c.p2), cpx(c.p3), cpx(c.p4)};
  });
}

h31_status h31_sample_param(uint64_t seed, uint64_t index, h31_params* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = params_out(h31::sample_param_at(seed, index)); });
}

h31_status h31_schlicht_coeffs(double alpha, const h31_coeffs* p, h31_schlicht* out) {
  if (!p || !out) return H31_EINVAL;
  return guarded([&] {
    const h31::CaratheodoryCoeffs c{p->p1, cpx(p->p2), cpx(p->p3), cpx(p->p4)};
    *out = schlicht_out(h31::schlicht_coeffs(h31::Order{alpha}, c));
  });
}

h31_status h31_hankel3(const h31_schlicht* c, h31_complex* out) {
  if (!c || !out) return H31_EINVAL;
  return guarded([&] { *out = cpx(h31::hankel3(schlicht_in(*c))); });
}

h31_status h31_hankel2(const h31_schlicht* c, h31_complex* out) {
  if (!c || !out) return H31_EINVAL;
  return guarded([&] { *out = cpx(h31::hankel2(schlicht_in(*c))); });
}

h31_status h31_fekete_szego_bound(double alpha, h31_complex lambda, double* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = h31::fekete_szego_bound(h31::Order{alpha}, cpx(lambda)); });
}

h31_status h31_rotate_coeffs(const h31_schlicht* c, double theta, h31_schlicht* out) {
  if (!c || !out) return H31_EINVAL;
  return guarded([&] { *out = schlicht_out(h31::rotate_coeffs(schlicht_in(*c), theta)); });
}

h31_status h31_extremal_coeffs(double alpha, int n_max, double* out, size_t cap) {
  if (!out) return H31_EINVAL;
  return guarded([&] {
    const std::vector<double> a = h31::extremal_coeffs(h31::Order{alpha}, n_max);
    const size_t n = a.size() < cap ? a.size() : cap;
    for (size_t i = 0; i < n; ++i) out[i] = a[i];
  });
}

h31_status h31_sharp_bound(double alpha, double* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] {
    const h31::Order order{alpha};
    h31::validate(order);
    *out = h31::sharp_bound(order);
  });
}

h31_status h31_delta_terms(double alpha, double p, h31_complex gamma, h31_complex* d1,
                           h31_complex* d2, h31_complex* d3) {
  if (!d1 || !d2 || !d3) return H31_EINVAL;
  return guarded([&] {
    const h31::DeltaTerms d = h31::delta_terms(h31::Order{alpha}, p, cpx(gamma));
    *d1 = cpx(d.d1);
    *d2 = cpx(d.d2);
    *d3 = cpx(d.d3);
  });
}

h31_status h31_phi_term(double alpha, double p, h31_complex gamma, h31_complex eta,
                        h31_complex* out) {
  if (!out) return H31_EINVAL;
  return guarded(
      [&] { *out = cpx(h31::phi_term(h31::Order{alpha}, p, cpx(gamma), cpx(eta))); });
}

h31_status h31_hankel3_decomposed(double alpha, const h31_params* params,
                                  h31_complex* out) {
  if (!params || !out) return H31_EINVAL;
  return guarded(
      [&] { *out = cpx(h31::hankel3_decomposed(h31::Order{alpha}, params_in(*params))); });
}

h31_status h31_z_terms(double alpha, double p, double x, double* z1, double* z2,
                       double* z3, double* z4) {
  if (!z1 || !z2 || !z3 || !z4) return H31_EINVAL;
  return guarded([&] {
    const h31::ZTerms z = h31::z_terms(h31::Order{alpha}, p, x);
    *z1 = z.z1;
    *z2 = z.z2;
    *z3 = z.z3;
    *z4 = z.z4;
  });
}

h31_status h31_big_z(double alpha, h31_point pt, double* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] {
    *out = h31::big_z(h31::Order{alpha}, h31::CuboidPoint{pt.p, pt.x, pt.y});
  });
}

h31_status h31_face_value(int face, double alpha, double u, double v, double* out) {
  if (!out) return H31_EINVAL;
  if (face < H31_FACE_P0 || face > H31_FACE_Y1) return H31_EDOM;
  return guarded([&] {
    *out = h31::face_value(static_cast<h31::FaceId>(face), h31::Order{alpha}, u, v);
  });
}

h31_status h31_edge_value(int edge, double alpha, double t, double* out) {
  if (!out) return H31_EINVAL;
  if (edge < H31_EDGE_R1 || edge > H31_EDGE_CP0X1) return H31_EDOM;
  return guarded([&] {
    *out = h31::edge_value(static_cast<h31::EdgeId>(edge), h31::Order{alpha}, t);
  });
}

h31_status h31_interior_y_crit(double alpha, double p, double x, int* present,
                               double* y0) {
  if (!present || !y0) return H31_EINVAL;
  return guarded([&] {
    const auto r = h31::interior_y_crit(h31::Order{alpha}, p, x);
    *present = r.has_value() ? 1 : 0;
    *y0 = r.value_or(0.0);
  });
}

h31_status h31_face_x0_y_crit(double alpha, double p, int* present, double* y0) {
  if (!present || !y0) return H31_EINVAL;
  return guarded([&] {
    const auto r = h31::face_x0_y_crit(h31::Order{alpha}, p);
    *present = r.has_value() ? 1 : 0;
    *y0 = r.value_or(0.0);
  });
}

h31_status h31_lmn(double alpha, int* l_present, double* l, double* m, double* n) {
  if (!l_present || !l || !m || !n) return H31_EINVAL;
  return guarded([&] {
    const h31::Lmn r = h31::lmn(h31::Order{alpha});
    *l_present = r.L.has_value() ? 1 : 0;
    *l = r.L.value_or(0.0);
    *m = r.M;
    *n = r.N;
  });
}

h31_status h31_p_of_alpha(double alpha, double* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = h31::p_of_alpha(h31::Order{alpha}); });
}

h31_status h31_eq40_value(double alpha, double p, double* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = h31::eq40_value(h31::Order{alpha}, p); });
}

h31_status h31_alpha0(h31_root_result* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = root_out(h31::alpha0()); });
}

h31_status h31_alpha1(h31_root_result* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = root_out(h31::alpha1()); });
}

h31_status h31_alpha2(h31_root_result* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = root_out(h31::alpha2()); });
}

h31_status h31_beta0(h31_root_result* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] { *out = root_out(h31::beta0()); });
}

h31_status h31_eq40_p_root(double alpha, int* present, h31_root_result* out) {
  if (!present || !out) return H31_EINVAL;
  return guarded([&] {
    const auto r = h31::eq40_p_root(h31::Order{alpha});
    *present = r.has_value() ? 1 : 0;
    if (r) *out = root_out(*r);
  });
}

h31_status h31_grid_max(double alpha, const h31_opt_config* cfg, int threads,
                        h31_max_report* out) {
  if (!out) return H31_EINVAL;
  return guarded(
      [&] { *out = report_out(h31::grid_max(h31::Order{alpha}, cfg_in(cfg), threads)); });
}

h31_status h31_refine_local(double alpha, h31_point start, const h31_opt_config* cfg,
                            h31_max_report* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] {
    *out = report_out(h31::refine_local(
        h31::Order{alpha}, h31::CuboidPoint{start.p, start.x, start.y}, cfg_in(cfg)));
  });
}

h31_status h31_global_max(double alpha, const h31_opt_config* cfg, int threads,
                          h31_max_report* out) {
  if (!out) return H31_EINVAL;
  return guarded(
      [&] { *out = report_out(h31::global_max(h31::Order{alpha}, cfg_in(cfg), threads)); });
}

h31_status h31_probe_max(double alpha, const h31_opt_config* cfg, int threads,
                         h31_probe_result* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] {
    const h31::ProbeResult r = h31::probe_max(h31::Order{alpha}, cfg_in(cfg), threads);
    out->value = r.value;
    out->witness = params_out(r.witness);
    out->witness_index = r.witness_index;
  });
}

h31_status h31_interior_critical_scan(double alpha, const h31_opt_config* cfg,
                                      h31_critical_report** out) {
  if (!out) return H31_EINVAL;
  *out = nullptr;
  return guarded([&] {
    auto rep = new h31_critical_report;
    rep->entries = h31::interior_critical_scan(h31::Order{alpha}, cfg_in(cfg));
    *out = rep;
  });
}

size_t h31_critical_report_count(const h31_critical_report* rep) {
  return rep ? rep->entries.size() : 0;
}

h31_status h31_critical_report_entry(const h31_critical_report* rep, size_t i, double* p,
                                     double* x, double* y0, double* grad_norm) {
  if (!rep || !p || !x || !y0 || !grad_norm) return H31_EINVAL;
  if (i >= rep->entries.size()) return H31_EINVAL;
  const h31::CriticalPoint& e = rep->entries[i];
  *p = e.p;
  *x = e.x;
  *y0 = e.y0;
  *grad_norm = e.grad_norm;
  return H31_OK;
}

void h31_critical_report_free(h31_critical_report* rep) { delete rep; }

h31_status h31_scan_run(double alpha_min, double alpha_max, double alpha_step,
                        const h31_opt_config* cfg, double alpha0_window, int threads,
                        h31_scan** out) {
  if (!out) return H31_EINVAL;
  *out = nullptr;
  if (!(alpha_min >= 0.0 && alpha_min < alpha_max && alpha_max < 1.0 && alpha_step > 0.0))
    return H31_EDOM;
  return guarded([&] {
    h31::ScanOptions opts;
    opts.cfg = cfg_in(cfg);
    opts.alpha0_window = alpha0_window;
    opts.threads = threads;
    const double a0 = h31::alpha0().root;
    const double a1 = h31::alpha1().root;
    auto scan = new h31_scan;
    // Index-based stepping keeps the row set independent of accumulated
    // rounding in alpha_min + k*step.
    const long long n =
        static_cast<long long>((alpha_max - alpha_min) / alpha_step + 1e-9) + 1;
    for (long long k = 0; k < n; ++k) {
      const double alpha = alpha_min + alpha_step * static_cast<double>(k);
      if (alpha >= 1.0) break;
      scan->rows.push_back(h31::scan_row(h31::Order{alpha}, opts, a0, a1));
    }
    *out = scan;
  });
}

size_t h31_scan_row_count(const h31_scan* scan) { return scan ? scan->rows.size() : 0; }

h31_status h31_scan_get_row(const h31_scan* scan, size_t i, h31_scan_row* out) {
  if (!scan || !out) return H31_EINVAL;
  if (i >= scan->rows.size()) return H31_EINVAL;
  const h31::BoundScanRow& r = scan->rows[i];
  out->alpha = r.alpha;
  out->bound_closed_form = r.bound_closed_form;
  out->grid_max = r.grid_max;
  out->argmax = h31_point{r.argmax.p, r.argmax.x, r.argmax.y};
  out->probe_max = r.probe_max;
  for (int f = 0; f < 6; ++f) out->face_maxima[f] = r.face_maxima[static_cast<size_t>(f)];
  for (int e = 0; e < 7; ++e) out->edge_maxima[e] = r.edge_maxima[static_cast<size_t>(e)];
  out->p_alpha_present = r.p_alpha.has_value() ? 1 : 0;
  out->p_alpha = r.p_alpha.value_or(0.0);
  out->hankel2_max = r.hankel2_max;
  out->status = static_cast<int>(r.status);
  return H31_OK;
}

void h31_scan_free(h31_scan* scan) { delete scan; }

h31_status h31_crosscheck(long long samples, uint64_t seed, h31_crosscheck_report* out) {
  if (!out) return H31_EINVAL;
  return guarded([&] {
    const h31::CrosscheckReport r = h31::crosscheck(samples, seed);
    out->samples = r.samples;
    out->seed = r.seed;
    out->worst_decomposition_rel = r.worst_decomposition_rel;
    out->worst_rotation_rel = r.worst_rotation_rel;
    out->worst_bound_excess = r.worst_bound_excess;
    out->worst_majorant_excess = r.worst_majorant_excess;
    out->worst_pointwise_excess = r.worst_pointwise_excess;
    out->observed_majorant_excess = r.observed_majorant_excess;
    out->observed_pointwise_excess = r.observed_pointwise_excess;
    out->pass = r.pass ? 1 : 0;
  });
}

h31_status h31_face_max(int face, double alpha, const h31_opt_config* cfg, double* out) {
  if (!out) return H31_EINVAL;
  if (face < H31_FACE_P0 || face > H31_FACE_Y1) return H31_EDOM;
  return guarded([&] {
    *out = h31::face_max(static_cast<h31::FaceId>(face), h31::Order{alpha}, cfg_in(cfg));
  });
}

h31_status h31_edge_max(int edge, double alpha, const h31_opt_config* cfg, double* out) {
  if (!out) return H31_EINVAL;
  if (edge < H31_EDGE_R1 || edge > H31_EDGE_CP0X1) return H31_EDOM;
  return guarded([&] {
    *out = h31::edge_max(static_cast<h31::EdgeId>(edge), h31::Order{alpha}, cfg_in(cfg));
  });
}

} /* extern "C" */
