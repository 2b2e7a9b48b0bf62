/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_QUADRATURE_HPP
#define RELAYDMT_QUADRATURE_HPP

#include <functional>

namespace relaydmt::quad {

struct QuadResult {
    double value;
    double est_abs_error;
    long evaluations;
};

// Adaptive Gauss-Kronrod 7/15 on a finite interval. Bisects until the local
// Kronrod-Gauss discrepancy fits the error budget. Throws numeric_error with
// diagnostics when the budget cannot be met within the evaluation cap.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-13, double rel_tol = 1e-9);

} // namespace relaydmt::quad

#endif
