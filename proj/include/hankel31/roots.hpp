// SPDX-License-Identifier: Apache-2.0
//
// Root isolation for the alpha- and p-thresholds the bound analysis depends
// on: alpha0, alpha1, alpha2, beta0 and the p-root of the x=0 face
// stationarity polynomial, all with bracket certificates.
#ifndef HANKEL31_ROOTS_HPP
#define HANKEL31_ROOTS_HPP

#include <functional>
#include <optional>

#include "hankel31/types.hpp"

namespace h31 {

/// Bisection with a sign-change certificate. Throws bracket_error when
/// f(lo)*f(hi) > 0 or f evaluates non-finite; 200-iteration cap.
RootResult root_bisect(const std::function<double(double)>& f, double lo, double hi,
                       double tol, const std::string& target = "root");

/// Smallest positive root of 1 - 4a + 6a^2 - 16a^3 + 4a^4 (= N(alpha)).
RootResult alpha0();

/// Realness boundary of L: the zero of -10+26a-10a^2-6a^3+M(alpha) above
/// alpha0. For alpha below it (excluding alpha0) 2L lies in (0,2); above it
/// L is absent.
RootResult alpha1();

/// Smallest positive root of 153 - 1437a + 3118a^2 - 2484a^3 + 648a^4.
RootResult alpha2();

/// Smallest positive root of -3 + 10a - 8a^2 (exactly 1/2).
RootResult beta0();

/// Smallest root of the x=0 face stationarity polynomial (eq40_value) in
/// (0,2); absent when no sign change exists there.
std::optional<RootResult> eq40_p_root(const Order& order);

}  // namespace h31

#endif
