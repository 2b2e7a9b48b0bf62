/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_SPECFUN_HPP
#define RELAYDMT_SPECFUN_HPP

namespace relaydmt::specfun {

// Euler's constant, 20 significant digits. Shared by every digamma-derived
// coefficient so the constant cannot drift between modules.
inline constexpr double euler_gamma = 0.57721566490153286061;

// Highest supported Bessel order. Every order used by the outage formulas is
// far below this.
inline constexpr int bessel_order_cap = 64;

struct SpecFunResult {
    double value;
    double est_rel_error; // conservative estimate, not a hard bound
};

// K_order(x), modified Bessel function of the second kind, integer order >= 0.
// Ascending series below x = 2, continued-fraction evaluation of K_0/K_1 above,
// upward recurrence K_{N+1} = K_{N-1} + (2N/x) K_N for higher orders.
// Throws validation_error for x <= 0 or order outside [0, bessel_order_cap].
double bessel_k(int order, double x);

// Same evaluation, with an error estimate attached.
SpecFunResult bessel_k_full(int order, double x);

// Partial sum of the ascending series for K_order(x): the full finite part
// plus the first k_terms terms of the logarithmic series (k_terms = 0 keeps
// the finite part only). Independent cross-check for bessel_k at small x.
// Throws range_error for x > 4, validation_error for bad order/k_terms.
double bessel_k_series(int order, double x, int k_terms);

// psi(k) = -euler_gamma + sum_{i=1}^{k-1} 1/i, integer k >= 1.
double digamma_int(int k);

// Psi_k = psi(k) + psi(k+1).
double psi_pair(int k);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
// Series for x < a + 1, continued fraction otherwise.
double gamma_p(double a, double x);

// v! as a double, exact table lookup; v in [0, 170] (the representable range).
double factorial(int v);

} // namespace relaydmt::specfun

#endif
