/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_CAPACITY_HPP
#define RELAYDMT_CAPACITY_HPP

#include "relaydmt/channel.hpp"
#include "relaydmt/outage.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace relaydmt::capacity {

// Inverse of a strictly increasing outage evaluator: the x with
// |P(x) - eps| <= 1e-9.eps, found by bisection on ln x.
double invert_outage(double eps, const std::function<double(double)>& p_of_x);

struct OutageCapacity {
    double x_eps = 0.0;
    double c_exact = 0.0;    // ln(1 + gamma.x_eps), nats/s/Hz
    double c_high_snr = 0.0; // ln(gamma) - ln(1/x_eps), valid for gamma.x_eps >> 1
    double c_low_snr = 0.0;  // gamma.x_eps, valid for gamma.x_eps << 1
};

OutageCapacity outage_capacity(double eps, double gamma, const channel::ChannelConfig& cfg,
                               outage::Protocol proto = outage::Protocol::af);

// Low-outage closed-form approximation of the SNR loss x_eps, case-split on
// the antenna counts. The equal-count branch needs eps below the log
// coefficient; outside that region `applicable` is false and x_eps_approx
// falls back to the exact inversion.
struct SnrLossApprox {
    double x_eps_approx = 0.0;
    bool applicable = true;
};
SnrLossApprox snr_loss_approx(double eps, const channel::ChannelConfig& cfg);

// Capacity loss of the fading relay link against the AWGN ceiling ln(1+gamma):
// additive difference (high-SNR view) and multiplicative ratio (low-SNR view).
struct CapacityLoss {
    double additive_nats = 0.0;  // ln(1+gamma) - C_eps
    double multiplicative = 1.0; // C_eps / ln(1+gamma)
};
CapacityLoss capacity_loss(double eps, double gamma, const channel::ChannelConfig& cfg,
                           outage::Protocol proto = outage::Protocol::af);

struct DmtPoint {
    double r = 0.0;
    double d = 0.0;
    double gamma = 0.0;
    bool saturated = false; // P underflowed below 1e-300; d is the floor value
};

// Finite-SNR diversity d = -ln P / ln gamma at multiplexing gain r. The rate
// is set so that the threshold is x = gamma^{r-1} (R = ln(1 + gamma^r)),
// which reproduces r = R/ln gamma in the SNR-asymptotic limit and keeps the
// r = 0 point at the fixed-rate operating threshold x = 1/gamma.
DmtPoint finite_snr_dmt(double gamma, double r, const channel::ChannelConfig& cfg,
                        outage::Protocol proto = outage::Protocol::af);

// Diversity orders (near-zero exponents) of the two links of a configuration;
// full-rank correlation does not change them.
std::pair<double, double> link_diversity_orders(const channel::ChannelConfig& cfg);

// SNR-asymptotic tradeoff: a single relay gives min(d_s, d_d).(1-r); a
// selection set adds the per-relay minima. Identical for AF and DF.
double asymptotic_dmt(double d_s, double d_d, double r);
double asymptotic_dmt(const std::vector<std::pair<double, double>>& relay_orders, double r);
double asymptotic_dmt(const channel::ChannelConfig& cfg, double r);

} // namespace relaydmt::capacity

#endif
