// SPDX-License-Identifier: Apache-2.0
//
// Coefficient functionals: the map from Caratheodory coefficients to the
// schlicht coefficients a2..a5 for a given order, the Hankel determinants
// H_{3,1} and H_{2,2}, the Fekete-Szego bound, and the Taylor series of the
// extremal function.
#ifndef HANKEL31_FUNCTIONALS_HPP
#define HANKEL31_FUNCTIONALS_HPP

#include <vector>

#include "hankel31/types.hpp"

namespace h31 {

/// a2 = p1(1-a), a3 = (1-a)/2 (p2 + p1^2(1-a)),
/// a4 = (1-a)/6 (2 p3 + 3 p1 p2 (1-a) + p1^3 (1-a)^2),
/// a5 = (1-a)/24 (6 p4 + (1-a)(3 p2^2 + 8 p1 p3)
///                + (1-a)^2 (6 p1^2 p2 + p1^4 (1-a))).
SchlichtCoeffs schlicht_coeffs(const Order& order, const CaratheodoryCoeffs& p);

/// Third Hankel determinant 2 a2 a3 a4 - a3^3 - a4^2 - a2^2 a5 + a3 a5.
complex hankel3(const SchlichtCoeffs& c);

/// Second Hankel determinant a2 a4 - a3^2.
complex hankel2(const SchlichtCoeffs& c);

/// Sharp Fekete-Szego bound (1-a) max{1, |3 - 2a - 4 lambda (1-a)|}.
double fekete_szego_bound(const Order& order, complex lambda);

/// Coefficients a1..a_{n_max} of the extremal function f0 with
/// z f0'/f0 = (1 + (1-2a) z^3)/(1 - z^3), by the recurrence
/// (n-1) a_n = 2(1-a) sum_{j>=1} a_{n-3j}, a1 = 1.
/// a_n = 0 unless n == 1 (mod 3).
std::vector<double> extremal_coeffs(const Order& order, int n_max);

/// a_n -> e^{i(n-1)theta} a_n, n = 2..5.
SchlichtCoeffs rotate_coeffs(const SchlichtCoeffs& c, double theta);

}  // namespace h31

#endif
