/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/specfun.hpp"
#include "relaydmt/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace relaydmt::specfun {

namespace {

constexpr double eps_term = 1e-16;  // series termination: |term| < eps_term * |sum|
constexpr int max_series_terms = 200;
constexpr double series_switch = 2.0; // ascending series below, continued fraction above

// Ascending series: the finite sum plus k_terms terms of the log series.
// Term recursions keep every factor in range for any supported order.
double series_sum(int order, double x, int k_terms, double* last_term) {
    const double h = 0.5 * x;
    double sum = 0.0;

    // finite part: (1/2) sum_{k=0}^{N-1} (-1)^k (N-k-1)! / (k! h^{N-2k})
    if (order >= 1) {
        double t = 0.5 * factorial(order - 1) * std::pow(h, -order);
        for (int k = 0; k < order; ++k) {
            sum += t;
            if (k + 1 < order)
                t *= -h * h / ((k + 1.0) * (order - k - 1.0));
        }
    }

    // log part: (-1)^{N+1} sum_k h^{N+2k}/(k!(N+k)!) (ln h - psi(k+1)/2 - psi(N+k+1)/2)
    const double lh = std::log(h);
    const double sign = (order % 2 == 0) ? -1.0 : 1.0;
    double t = std::pow(h, order) / factorial(order);
    double psi_a = -euler_gamma;          // psi(k+1), starts at psi(1)
    double psi_b = digamma_int(order + 1); // psi(order+k+1)
    double term = 0.0;
    for (int k = 0; k < k_terms; ++k) {
        term = sign * t * (lh - 0.5 * psi_a - 0.5 * psi_b);
        sum += term;
        psi_a += 1.0 / (k + 1.0);
        psi_b += 1.0 / (order + k + 1.0);
        t *= h * h / ((k + 1.0) * (order + k + 1.0));
        if (std::abs(term) < eps_term * std::abs(sum) && k >= 1) {
            if (last_term) *last_term = term;
            return sum;
        }
    }
    if (last_term) *last_term = term;
    return sum;
}

// K_0 and K_1 for x > 2 by the Steed/Temme continued fraction at order zero.
void cf_k0_k1(double x, double& k0, double& k1, double& est_err) {
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0, q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    const int maxit = 10000;
    for (; i <= maxit; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps_term) break;
    }
    if (i > maxit)
        throw numeric_error("bessel_k: continued fraction did not converge at x=" + std::to_string(x));
    h = a1 * h;
    k0 = std::sqrt(M_PI / (2.0 * x)) * std::exp(-x) / s;
    k1 = k0 * (x + 0.5 - h) / x;
    est_err = static_cast<double>(i) * std::numeric_limits<double>::epsilon();
}

void check_args(int order, double x) {
    if (!(x > 0.0))
        throw validation_error("bessel_k: x must be positive");
    if (order < 0 || order > bessel_order_cap)
        throw validation_error("bessel_k: order must be in [0, " + std::to_string(bessel_order_cap) + "]");
}

} // namespace

double digamma_int(int k) {
    if (k < 1)
        throw validation_error("digamma_int: k must be >= 1");
    double s = -euler_gamma;
    for (int i = 1; i < k; ++i) s += 1.0 / i;
    return s;
}

double psi_pair(int k) {
    return digamma_int(k) + digamma_int(k + 1);
}

SpecFunResult bessel_k_full(int order, double x) {
    check_args(order, x);

    double k0, k1, base_err;
    if (x <= series_switch) {
        double t0 = 0.0, t1 = 0.0;
        k0 = series_sum(0, x, max_series_terms, &t0);
        k1 = series_sum(1, x, max_series_terms, &t1);
        base_err = std::abs(t0 / k0) + std::abs(t1 / k1)
                 + 8.0 * std::numeric_limits<double>::epsilon();
    } else {
        cf_k0_k1(x, k0, k1, base_err);
    }

    double v;
    if (order == 0) v = k0;
    else if (order == 1) v = k1;
    else {
        // upward recurrence; all terms positive, forward stable
        double km = k0, kc = k1;
        for (int n = 1; n < order; ++n) {
            const double kn = km + (2.0 * n / x) * kc;
            km = kc;
            kc = kn;
        }
        v = kc;
    }
    const double est = base_err + 2.0 * order * std::numeric_limits<double>::epsilon();
    return {v, est};
}

double bessel_k(int order, double x) {
    return bessel_k_full(order, x).value;
}

double bessel_k_series(int order, double x, int k_terms) {
    check_args(order, x);
    if (x > 4.0)
        throw range_error("bessel_k_series: x above the series regime (x <= 4)");
    if (k_terms < 0)
        throw validation_error("bessel_k_series: k_terms must be >= 0");
    return series_sum(order, x, k_terms, nullptr);
}

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0)
        throw validation_error("gamma_p: need a > 0 and x >= 0");
    if (x == 0.0) return 0.0;
    const double lga = std::lgamma(a);
    if (x < a + 1.0) {
        // series: P(a,x) = x^a e^{-x} / Gamma(a) * sum x^k / (a)_k
        double ap = a, sum = 1.0 / a, del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-16)
                return sum * std::exp(-x + a * std::log(x) - lga);
        }
        throw numeric_error("gamma_p: series did not converge");
    }
    // continued fraction for Q(a,x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i <= 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) {
            const double q = std::exp(-x + a * std::log(x) - lga) * h;
            return 1.0 - q;
        }
    }
    throw numeric_error("gamma_p: continued fraction did not converge");
}

double factorial(int v) {
    static const auto table = [] {
        std::array<double, 171> f{};
        f[0] = 1.0;
        for (size_t k = 1; k < f.size(); ++k) f[k] = f[k - 1] * static_cast<double>(k);
        return f;
    }();
    if (v < 0 || v > 170)
        throw validation_error("factorial argument outside the double range [0, 170]");
    return table[static_cast<size_t>(v)];
}

} // namespace relaydmt::specfun
