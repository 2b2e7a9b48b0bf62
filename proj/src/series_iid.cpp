/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/outage.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/specfun.hpp"

#include <algorithm>
#include <cmath>

// Small-x power series of the i.i.d. closed form. The dense coefficient
// tables below are never trusted blind: the test suite gates them against the
// Bessel closed form to 1e-10 on x <= 0.1.

namespace relaydmt::outage {

using specfun::factorial;

double SeriesTable::evaluate(double x) const {
    if (x == 0.0) return 0.0;
    const double lx = std::log(x);
    double total = 0.0;
    for (size_t l = 0; l < f.size(); ++l)
        total += (f[l] + g[l] * lx) *
                 std::pow(x, static_cast<double>(l) + static_cast<double>(leading_power));
    return total;
}

SeriesResult outage_series_iid(double x, double alpha, int m, int n, int l_max) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw validation_error("threshold x must be finite and >= 0");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw validation_error("relay noise ratio alpha must be finite and >= 0");
    if (m < 1 || n < 1) throw validation_error("antenna counts must be >= 1");
    if (x > 0.5) throw range_error("series is only valid for x <= 0.5");
    if (l_max < 0 || l_max + m + n > 168)
        throw validation_error("series truncation order out of range");

    const int mn = std::min(m, n);
    const int p0 = std::abs(n - m);
    const double lx = x > 0.0 ? std::log(x) : 0.0;
    const auto psi = [](int k) { return specfun::digamma_int(k); };
    const auto om = [&](int i, int j) {
        return std::pow(alpha, i + j) * m /
               (factorial(i) * factorial(j) * factorial(n - 1) * factorial(m - i));
    };

    SeriesResult res;
    res.table.leading_power = mn;
    double total = 0.0;
    int tiny_streak = 0;

    for (int l = 0; l <= l_max; ++l) {
        double f = 0.0, g = 0.0;
        const double sign_l = (l % 2 == 0) ? 1.0 : -1.0;
        if (m <= n) {
            // Finite rows; for m = n the i = 0 row has an empty j-range.
            for (int i = 0; i <= m; ++i) {
                const int pi = p0 + i;
                for (int j = std::max(0, l + 1 - pi); j <= l; ++j)
                    f += om(i, j) * sign_l * factorial(p0 + i + j - l - 1) /
                         (factorial(l - j) * (l + m));
            }
            // Logarithmic rows appear once l reaches the antenna-count gap.
            if (l >= p0) {
                for (int i = 0; i <= std::min(l - p0, m); ++i) {
                    const int pi = p0 + i;
                    for (int j = 0; j <= l - p0 - i; ++j) {
                        const int qlij = l - i - j, ql0j = l - j;
                        const double sgn = ((pi + j + 1) % 2 == 0) ? 1.0 : -1.0;
                        const double den = factorial(qlij - p0) * factorial(ql0j) * (l + m);
                        f -= sgn * om(i, j) *
                             (psi(qlij - p0 + 1) + psi(ql0j + 1) + 1.0 / (l + m)) / den;
                        g += sgn * om(i, j) / den;
                    }
                }
            }
        } else {
            // Finite rows split into the i <= p0-1 and i >= p0+1 families.
            for (int i = 0; i <= std::min(l, p0 - 1); ++i)
                for (int j = std::max(0, l + 1 - p0); j <= l - i; ++j) {
                    const double sgn = ((l - i) % 2 == 0) ? 1.0 : -1.0;
                    f += om(i, j) * sgn * factorial(p0 - (l - j) - 1) /
                         (factorial(l - i - j) * (l + n));
                }
            if (l >= p0) {
                const double sgn = ((l - p0) % 2 == 0) ? 1.0 : -1.0;
                for (int i = p0 + 1; i <= m; ++i)
                    for (int j = std::max(0, l + 1 - i); j <= l - p0; ++j)
                        f += om(i, j) * sgn * factorial(i + j - l - 1) /
                             (factorial(l - j - p0) * (l + n));
            }
            const auto log_term = [&](int i, int j, int pi) {
                const int qlij = l - i - j, ql0j = l - j;
                const double sgn = ((pi + j + 1) % 2 == 0) ? 1.0 : -1.0;
                const double th = sgn / (factorial(qlij) * factorial(ql0j - p0) * (l + n));
                const double up = (psi(qlij + 1) + psi(ql0j - p0 + 1) + 1.0 / (l + n)) * th;
                f -= up * om(i, j);
                g += th * om(i, j);
            };
            if (l >= p0 + 1)
                for (int i = p0 + 1; i <= std::min(l, m); ++i)
                    for (int j = 0; j <= l - i; ++j) log_term(i, j, i - p0);
            if (l >= p0)
                for (int i = 0; i <= p0; ++i)
                    for (int j = 0; j <= l - p0; ++j) log_term(i, j, p0 - i);
        }
        res.table.f.push_back(f);
        res.table.g.push_back(g);

        if (x > 0.0) {
            const double term = (f + g * lx) * std::pow(x, l + mn);
            total += term;
            // Two consecutive negligible terms end the sum; a lone zero
            // coefficient must not truncate early.
            tiny_streak = std::abs(term) < 1e-12 * std::abs(total) ? tiny_streak + 1 : 0;
            if (l >= p0 + 1 && tiny_streak >= 2) break;
        } else if (l >= p0 + 2) {
            break; // x = 0: value is 0, keep a minimal table
        }
    }
    res.value = total;
    return res;
}

} // namespace relaydmt::outage
