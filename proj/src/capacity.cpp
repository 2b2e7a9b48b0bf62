/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/capacity.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace relaydmt::capacity {

namespace {

constexpr double underflow_floor = 1e-300;

} // namespace

double invert_outage(double eps, const std::function<double(double)>& p_of_x) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw validation_error("outage level eps must lie in (0, 1)");

    double lo = 1e-12, hi = 10.0;
    while (p_of_x(lo) > eps) {
        lo /= 16.0;
        if (lo < 1e-280) throw range_error("eps below the evaluator's range");
    }
    while (p_of_x(hi) < eps) {
        hi *= 16.0;
        if (hi > 1e18) throw range_error("eps above the evaluator's range");
    }
    // Bisection on ln x; the geometric mean halves the log interval.
    double mid = std::sqrt(lo * hi);
    for (int it = 0; it < 300; ++it) {
        mid = std::sqrt(lo * hi);
        const double p = p_of_x(mid);
        if (std::abs(p - eps) <= 1e-9 * eps) return mid;
        (p < eps ? lo : hi) = mid;
        if (hi - lo <= 1e-15 * hi) break;
    }
    const double p = p_of_x(mid);
    if (std::abs(p - eps) <= 1e-8 * eps) return mid; // interval exhausted at noise level
    throw numeric_error("outage inversion did not converge");
}

OutageCapacity outage_capacity(double eps, double gamma, const channel::ChannelConfig& cfg,
                               outage::Protocol proto) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw validation_error("SNR must be finite and > 0");
    cfg.validate();
    OutageCapacity oc;
    oc.x_eps = invert_outage(eps, [&](double x) { return outage::outage_analytic(x, cfg, proto); });
    oc.c_exact = std::log1p(gamma * oc.x_eps);
    oc.c_high_snr = std::log(gamma) - std::log(1.0 / oc.x_eps);
    oc.c_low_snr = gamma * oc.x_eps;
    return oc;
}

SnrLossApprox snr_loss_approx(double eps, const channel::ChannelConfig& cfg) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw validation_error("outage level eps must lie in (0, 1)");
    cfg.validate();
    if (!cfg.fading_sr.is_rayleigh() || !cfg.fading_rd.is_rayleigh())
        throw validation_error("the SNR-loss approximation needs Rayleigh links");

    const auto sr = cfg.spectrum_sr();
    const auto rd = cfg.spectrum_rd();
    const auto lo = (sr.all_unit() && rd.all_unit())
                        ? outage::lowout_iid(cfg.alpha, cfg.m, cfg.n)
                        : outage::lowout_correlated(cfg.alpha, sr, rd);

    SnrLossApprox res;
    if (cfg.m != cfg.n) {
        // P ~ a.x^p  ->  x_eps = (eps/a)^{1/p}
        res.x_eps_approx = std::pow(eps / lo.coeff_poly, 1.0 / lo.leading_power);
        return res;
    }
    // Equal antenna counts: P ~ (a + b ln(1/x)) x^m inverts to
    // x_eps = (eps.m / (a + b ln(b/eps)))^{1/m}, needing eps < b and a
    // positive denominator.
    const double a = lo.coeff_poly, b = lo.coeff_log;
    const double den = a + b * std::log(b / eps);
    if (!(b > 0.0) || !(eps < b) || !(den > 0.0)) {
        res.applicable = false;
        res.x_eps_approx =
            invert_outage(eps, [&](double x) { return outage::outage_analytic(x, cfg); });
        return res;
    }
    res.x_eps_approx = std::pow(eps * cfg.m / den, 1.0 / cfg.m);
    return res;
}

CapacityLoss capacity_loss(double eps, double gamma, const channel::ChannelConfig& cfg,
                           outage::Protocol proto) {
    const auto oc = outage_capacity(eps, gamma, cfg, proto);
    const double awgn = std::log1p(gamma);
    CapacityLoss loss;
    loss.additive_nats = awgn - oc.c_exact;
    loss.multiplicative = oc.c_exact / awgn;
    return loss;
}

DmtPoint finite_snr_dmt(double gamma, double r, const channel::ChannelConfig& cfg,
                        outage::Protocol proto) {
    if (!(gamma > 1.0) || !std::isfinite(gamma))
        throw validation_error("finite-SNR diversity needs gamma > 1");
    if (!(r >= 0.0) || !(r <= 1.0))
        throw validation_error("multiplexing gain r must lie in [0, 1]");
    cfg.validate();

    DmtPoint pt;
    pt.r = r;
    pt.gamma = gamma;
    const double x = std::pow(gamma, r - 1.0);
    const double p = outage::outage_analytic(x, cfg, proto);
    if (p < underflow_floor) {
        pt.saturated = true;
        pt.d = -std::log(underflow_floor) / std::log(gamma);
        return pt;
    }
    pt.d = -std::log(p) / std::log(gamma);
    return pt;
}

std::pair<double, double> link_diversity_orders(const channel::ChannelConfig& cfg) {
    cfg.validate();
    return {cfg.fading_sr.near_zero_exponent(cfg.m), cfg.fading_rd.near_zero_exponent(cfg.n)};
}

double asymptotic_dmt(double d_s, double d_d, double r) {
    if (!(d_s > 0.0) || !(d_d > 0.0))
        throw validation_error("diversity orders must be > 0");
    if (!(r >= 0.0) || !(r <= 1.0))
        throw validation_error("multiplexing gain r must lie in [0, 1]");
    return std::min(d_s, d_d) * (1.0 - r);
}

double asymptotic_dmt(const std::vector<std::pair<double, double>>& relay_orders, double r) {
    if (relay_orders.empty()) throw validation_error("need at least one relay");
    double d = 0.0;
    for (const auto& [ds, dd] : relay_orders) d += asymptotic_dmt(ds, dd, r);
    return d;
}

double asymptotic_dmt(const channel::ChannelConfig& cfg, double r) {
    const auto [ds, dd] = link_diversity_orders(cfg);
    return asymptotic_dmt(ds, dd, r);
}

} // namespace relaydmt::capacity
