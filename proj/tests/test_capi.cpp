// SPDX-License-Identifier: Apache-2.0
//
// Exercises the extern-C surface: status codes, POD marshalling, opaque
// handle lifecycles.
#include <cmath>
#include <cstring>

#include "doctest.h"
#include "hankel31.h"

TEST_CASE("c api: version and status strings") {
  CHECK(h31_version() != nullptr);
  CHECK(std::strcmp(h31_status_str(H31_OK), "ok") == 0);
  CHECK(std::strcmp(h31_status_str(H31_EDOM), "domain error") == 0);
}

TEST_CASE("c api: kernel and functional round trip") {
  h31_complex p2{};
  CHECK(h31_p2(1.0, h31_complex{1.0, 0.0}, &p2) == H31_OK);
  CHECK(p2.re == 2.0);
  CHECK(p2.im == 0.0);
  CHECK(h31_p2(2.5, h31_complex{0.0, 0.0}, &p2) == H31_EDOM);
  CHECK(h31_p2(1.0, h31_complex{1.0, 0.0}, nullptr) == H31_EINVAL);

  h31_params params{};
  CHECK(h31_sample_param(42, 7, &params) == H31_OK);
  CHECK(params.p1 >= 0.0);
  CHECK(params.p1 <= 2.0);

  h31_coeffs coeffs{};
  CHECK(h31_coeffs_from_params(&params, &coeffs) == H31_OK);
  h31_schlicht c{};
  CHECK(h31_schlicht_coeffs(0.2, &coeffs, &c) == H31_OK);
  h31_complex h{};
  CHECK(h31_hankel3(&c, &h) == H31_OK);
  double bound = 0.0;
  CHECK(h31_sharp_bound(0.2, &bound) == H31_OK);
  CHECK(std::hypot(h.re, h.im) <= bound + 1e-12);
  CHECK(h31_sharp_bound(1.0, &bound) == H31_EDOM);

  h31_complex hd{};
  CHECK(h31_hankel3_decomposed(0.2, &params, &hd) == H31_OK);
  CHECK(std::hypot(hd.re - h.re, hd.im - h.im) <= 1e-12);

  double fs = 0.0;
  CHECK(h31_fekete_szego_bound(0.0, h31_complex{0.0, 0.0}, &fs) == H31_OK);
  CHECK(fs == 3.0);

  double a[7] = {0};
  CHECK(h31_extremal_coeffs(0.2, 7, a, 7) == H31_OK);
  CHECK(a[3] == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
  double a2only[2] = {0};
  CHECK(h31_extremal_coeffs(0.2, 7, a2only, 2) == H31_OK);  // truncates
  CHECK(a2only[0] == 1.0);
  CHECK(h31_extremal_coeffs(0.2, 0, a, 7) == H31_EDOM);
}

TEST_CASE("c api: surface values and optionals") {
  double z1, z2, z3, z4;
  CHECK(h31_z_terms(0.1, 0.0, 0.0, &z1, &z2, &z3, &z4) == H31_OK);
  CHECK(z3 == doctest::Approx(512.0 * 0.81).epsilon(1e-15));

  double zv = 0.0;
  CHECK(h31_big_z(0.1, h31_point{0.0, 0.0, 1.0}, &zv) == H31_OK);
  double fv = 0.0;
  CHECK(h31_face_value(H31_FACE_P0, 0.1, 0.0, 1.0, &fv) == H31_OK);
  CHECK(fv == doctest::Approx(zv).epsilon(1e-14));
  CHECK(h31_face_value(99, 0.1, 0.0, 1.0, &fv) == H31_EDOM);

  double ev = 0.0;
  CHECK(h31_edge_value(H31_EDGE_R5, 0.1, 0.5, &ev) == H31_OK);
  CHECK(h31_edge_value(H31_EDGE_R5, 0.1, 1.5, &ev) == H31_EDOM);

  int present = -1;
  double y0 = 0.0;
  CHECK(h31_face_x0_y_crit(0.5, 1.0, &present, &y0) == H31_OK);
  CHECK(present == 0);
  CHECK(h31_face_x0_y_crit(0.1, 1.9, &present, &y0) == H31_OK);
  CHECK(present == 1);
  CHECK(y0 > 0.0);
  CHECK(y0 < 1.0);

  int l_present = -1;
  double l, m, n;
  CHECK(h31_lmn(0.0, &l_present, &l, &m, &n) == H31_OK);
  CHECK(l_present == 1);
  CHECK(l == doctest::Approx(0.7147406510221724).epsilon(1e-13));
  CHECK(h31_lmn(0.5, &l_present, &l, &m, &n) == H31_OK);
  CHECK(l_present == 0);

  double palpha = 0.0;
  CHECK(h31_p_of_alpha(0.0, &palpha) == H31_OK);
  CHECK(h31_p_of_alpha(0.5, &palpha) == H31_EDOM);
}

TEST_CASE("c api: roots") {
  h31_root_result r{};
  CHECK(h31_alpha0(&r) == H31_OK);
  CHECK(std::strcmp(r.target, "alpha0") == 0);
  CHECK(r.root == doctest::Approx(0.28581544501913897).epsilon(1e-10));
  CHECK(h31_beta0(&r) == H31_OK);
  CHECK(std::abs(r.root - 0.5) <= 1e-14);

  int present = -1;
  CHECK(h31_eq40_p_root(0.0, &present, &r) == H31_OK);
  CHECK(present == 1);
  CHECK(r.root == doctest::Approx(1.2067117676585193).epsilon(1e-9));
}

TEST_CASE("c api: optimizer, probe, scan handle, critical report") {
  h31_opt_config cfg{};
  h31_opt_config_default(&cfg);
  CHECK(cfg.grid_steps.np == 201);
  cfg.grid_steps = h31_grid_steps{41, 21, 21};
  cfg.sample_count = 2000;

  h31_max_report rep{};
  CHECK(h31_global_max(0.1, &cfg, 0, &rep) == H31_OK);
  CHECK(std::abs(rep.value - 4.0 * 0.81 / 9.0) <= 1e-8);
  CHECK(rep.argmax.p == 0.0);
  CHECK(rep.source == H31_SRC_CORNER);

  h31_probe_result probe{};
  CHECK(h31_probe_max(0.1, &cfg, 0, &probe) == H31_OK);
  CHECK(probe.witness_index == -1);
  CHECK(std::abs(probe.value - 4.0 * 0.81 / 9.0) <= 1e-13);

  h31_critical_report* crit = nullptr;
  CHECK(h31_interior_critical_scan(0.1, &cfg, &crit) == H31_OK);
  REQUIRE(crit != nullptr);
  CHECK(h31_critical_report_count(crit) == 0);
  double p, x, y0, g;
  CHECK(h31_critical_report_entry(crit, 0, &p, &x, &y0, &g) == H31_EINVAL);
  h31_critical_report_free(crit);

  h31_scan* scan = nullptr;
  CHECK(h31_scan_run(0.0, 0.08, 0.04, &cfg, 0.02, 0, &scan) == H31_OK);
  REQUIRE(scan != nullptr);
  CHECK(h31_scan_row_count(scan) == 3);
  h31_scan_row row{};
  CHECK(h31_scan_get_row(scan, 0, &row) == H31_OK);
  CHECK(row.alpha == 0.0);
  CHECK(row.status == H31_ROW_VERIFIED);
  CHECK(row.p_alpha_present == 1);
  CHECK(h31_scan_get_row(scan, 3, &row) == H31_EINVAL);
  h31_scan_free(scan);

  CHECK(h31_scan_run(0.5, 0.2, 0.1, &cfg, 0.02, 0, &scan) == H31_EDOM);
}

TEST_CASE("c api: remaining surface functions") {
  h31_complex d1{}, d2{}, d3{}, phi{};
  CHECK(h31_delta_terms(0.2, 2.0, h31_complex{0.3, 0.1}, &d1, &d2, &d3) == H31_OK);
  CHECK(d2.re == 0.0);
  CHECK(d3.re == 0.0);
  CHECK(h31_phi_term(0.0, 0.0, h31_complex{0.5, 0.0}, h31_complex{0.0, 0.0}, &phi) ==
        H31_OK);
  CHECK(phi.re == 216.0);

  int present = -1;
  double y0 = 0.0;
  CHECK(h31_interior_y_crit(0.2, 1.0, 1.0, &present, &y0) == H31_OK);
  CHECK(present == 0);

  double v = 0.0;
  CHECK(h31_eq40_value(0.0, 1.0, &v) == H31_OK);
  CHECK(v == 4887.0);

  h31_root_result r{};
  CHECK(h31_alpha1(&r) == H31_OK);
  CHECK(std::abs(r.root - 0.370839268768) <= 1e-9);
  CHECK(h31_alpha2(&r) == H31_OK);
  CHECK(std::abs(r.root - 0.149319503987) <= 1e-9);

  h31_schlicht koebe{};
  koebe.a2 = h31_complex{2, 0};
  koebe.a3 = h31_complex{3, 0};
  koebe.a4 = h31_complex{4, 0};
  koebe.a5 = h31_complex{5, 0};
  h31_complex h2{};
  CHECK(h31_hankel2(&koebe, &h2) == H31_OK);
  CHECK(h2.re == -1.0);
  h31_schlicht rot{};
  CHECK(h31_rotate_coeffs(&koebe, 0.0, &rot) == H31_OK);
  CHECK(rot.a4.re == 4.0);

  h31_opt_config cfg{};
  h31_opt_config_default(&cfg);
  cfg.grid_steps = h31_grid_steps{41, 21, 21};
  h31_max_report rep{};
  CHECK(h31_refine_local(0.1, h31_point{0.0, 0.0, 1.0}, &cfg, &rep) == H31_OK);
  CHECK(rep.argmax.y == 1.0);
  CHECK(std::abs(rep.value - 4.0 * 0.81 / 9.0) <= 1e-14);

  double fmax = 0.0;
  CHECK(h31_face_max(H31_FACE_P2, 0.1, &cfg, &fmax) == H31_OK);
  double emax = 0.0;
  CHECK(h31_edge_max(H31_EDGE_CP2, 0.1, &cfg, &emax) == H31_OK);
  CHECK(fmax == emax);
  CHECK(h31_face_max(-1, 0.1, &cfg, &fmax) == H31_EDOM);
  CHECK(h31_edge_max(9, 0.1, &cfg, &emax) == H31_EDOM);
}

TEST_CASE("c api: crosscheck") {
  h31_crosscheck_report rep{};
  CHECK(h31_crosscheck(1000, 9, &rep) == H31_OK);
  CHECK(rep.pass == 1);
  CHECK(rep.worst_decomposition_rel < 1e-10);
  CHECK(h31_crosscheck(0, 9, &rep) == H31_EDOM);
}
