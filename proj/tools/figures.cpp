/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "figures.hpp"

#include "format.hpp"
#include "relaydmt/capacity.hpp"
#include "relaydmt/channel.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/mcsim.hpp"
#include "relaydmt/outage.hpp"

#include <cmath>
#include <vector>

namespace relaydmt::cli {

namespace {

constexpr double ln2 = 0.69314718055994530942;

std::vector<double> logspace(double lo_exp, double hi_exp, int count) {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i)
        v[i] = std::pow(10.0, lo_exp + (hi_exp - lo_exp) * i / (count - 1));
    return v;
}

// Outage vs relay-noise ratio for a doubly correlated 2x2 link.
void fig2(std::ostream& out) {
    channel::ChannelConfig cfg;
    cfg.m = 2;
    cfg.n = 2;
    cfg.corr_sr = channel::CorrelationMatrix::exponential(2, 0.5);
    cfg.corr_rd = channel::CorrelationMatrix::exponential(2, 0.5);
    out << "# relaydmt figure fig2\n";
    out << "# 2x2 link, exponential correlation rho=0.5 on both ends\n";
    out << "# outage probability vs relay-noise ratio alpha at three thresholds\n";
    out << "alpha,p_x_1e-1,p_x_1e-2,p_x_1e-3\n";
    for (const double a : logspace(-3.0, 2.0, 26)) {
        cfg.alpha = a;
        out << fmt12(a);
        for (const double x : {1e-1, 1e-2, 1e-3})
            out << ',' << fmt12(outage::outage_analytic(x, cfg));
        out << '\n';
    }
}

// Exact outage, low-outage approximation and Monte-Carlo for the three
// smallest antenna layouts, alpha = 1.
void fig3(std::uint64_t trials, std::uint64_t seed, std::ostream& out) {
    const int ms[3] = {1, 2, 1};
    const int ns[3] = {1, 1, 2};
    out << "# relaydmt figure fig3\n";
    out << "# i.i.d. links, alpha=1; approximation is the leading-order expansion\n";
    out << "# mc: rate ln(2) nats, snr 1/x, trials=" << trials << " seed=" << seed << "\n";
    out << "x,p_exact_1x1,p_exact_2x1,p_exact_1x2,"
           "p_approx_1x1,p_approx_2x1,p_approx_1x2,"
           "p_mc_1x1,p_mc_2x1,p_mc_1x2\n";
    outage::LowOutageExpansion lo[3];
    for (int c = 0; c < 3; ++c) lo[c] = outage::lowout_iid(1.0, ms[c], ns[c]);
    for (const double x : logspace(-4.0, 1.0, 26)) {
        out << fmt12(x);
        for (int c = 0; c < 3; ++c)
            out << ',' << fmt12(outage::outage_af_iid(x, 1.0, ms[c], ns[c]));
        for (int c = 0; c < 3; ++c) out << ',' << fmt12(lo[c].evaluate(x));
        for (int c = 0; c < 3; ++c) {
            const auto cfg = channel::ChannelConfig::make_iid(ms[c], ns[c], 1.0);
            const auto est = mcsim::estimate_outage(cfg, ln2, 1.0 / x, trials, seed);
            out << ',' << fmt12(est.p_hat);
        }
        out << '\n';
    }
}

// Outage vs source-side correlation for the 2x1 link, with the leading-order
// approximation and the 1x1 link as a reference.
void fig4(std::ostream& out) {
    const double x = 1e-2;
    out << "# relaydmt figure fig4\n";
    out << "# 2x1 link, alpha=0, x=1e-2, exponential source correlation\n";
    out << "rho,p_exact,p_approx,p_1x1\n";
    const double p11 = outage::outage_af_iid(x, 0.0, 1, 1);
    for (int i = 0; i <= 99; ++i) {
        const double rho = 0.01 * i;
        double exact = 0.0;
        double approx = 0.0;
        if (rho == 0.0) {
            exact = outage::outage_af_iid(x, 0.0, 2, 1);
            approx = outage::lowout_iid(0.0, 2, 1).evaluate(x);
        } else {
            const auto sr = channel::Eigenspectrum::from_values({1.0 + rho, 1.0 - rho});
            const auto rd = channel::Eigenspectrum::all_ones(1);
            exact = outage::outage_af_correlated(x, 0.0, sr, rd);
            approx = outage::lowout_correlated(0.0, sr, rd).evaluate(x);
        }
        out << fmt12(rho) << ',' << fmt12(exact) << ',' << fmt12(approx) << ','
            << fmt12(p11) << '\n';
    }
}

// Outage vs SNR at fixed rate ln(2) (threshold x = 1/gamma), alpha = 1.
void fig5(std::uint64_t trials, std::uint64_t seed, std::ostream& out) {
    const int ms[3] = {1, 2, 1};
    const int ns[3] = {1, 1, 2};
    out << "# relaydmt figure fig5\n";
    out << "# i.i.d. links, alpha=1, rate ln(2) nats (r=0), x=1/snr\n";
    out << "# mc: trials=" << trials << " seed=" << seed << "\n";
    out << "snr_db,p_1x1,p_2x1,p_1x2,p_mc_1x1,p_mc_2x1,p_mc_1x2\n";
    for (int db = 0; db <= 40; db += 2) {
        const double gamma = std::pow(10.0, db / 10.0);
        const double x = 1.0 / gamma;
        out << fmt12(static_cast<double>(db));
        for (int c = 0; c < 3; ++c)
            out << ',' << fmt12(outage::outage_af_iid(x, 1.0, ms[c], ns[c]));
        for (int c = 0; c < 3; ++c) {
            const auto cfg = channel::ChannelConfig::make_iid(ms[c], ns[c], 1.0);
            const auto est = mcsim::estimate_outage(cfg, ln2, gamma, trials, seed);
            out << ',' << fmt12(est.p_hat);
        }
        out << '\n';
    }
}

// Outage capacity normalized by the AWGN capacity, exact inversion vs the
// closed-form SNR-loss approximation.
void fig6(std::ostream& out) {
    const double eps = 0.05;
    out << "# relaydmt figure fig6\n";
    out << "# i.i.d. links, alpha=0, eps=0.05 (documented defaults)\n";
    out << "# capacity normalized by the single-user awgn capacity ln(1+snr)\n";
    out << "snr_db,c_norm_1x1,c_norm_2x1,c_norm_approx_1x1,c_norm_approx_2x1\n";
    const auto cfg11 = channel::ChannelConfig::make_iid(1, 1, 0.0);
    const auto cfg21 = channel::ChannelConfig::make_iid(2, 1, 0.0);
    const auto ap11 = capacity::snr_loss_approx(eps, cfg11);
    const auto ap21 = capacity::snr_loss_approx(eps, cfg21);
    for (int db = -10; db <= 40; db += 2) {
        const double gamma = std::pow(10.0, db / 10.0);
        const double c_awgn = std::log1p(gamma);
        const double c11 = capacity::outage_capacity(eps, gamma, cfg11).c_exact;
        const double c21 = capacity::outage_capacity(eps, gamma, cfg21).c_exact;
        const double a11 = std::log1p(gamma * ap11.x_eps_approx);
        const double a21 = std::log1p(gamma * ap21.x_eps_approx);
        out << fmt12(static_cast<double>(db)) << ',' << fmt12(c11 / c_awgn) << ','
            << fmt12(c21 / c_awgn) << ',' << fmt12(a11 / c_awgn) << ','
            << fmt12(a21 / c_awgn) << '\n';
    }
}

} // namespace

void write_figure(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                  std::ostream& out) {
    if (name == "fig2") {
        fig2(out);
    } else if (name == "fig3") {
        fig3(trials, seed, out);
    } else if (name == "fig4") {
        fig4(out);
    } else if (name == "fig5") {
        fig5(trials, seed, out);
    } else if (name == "fig6") {
        fig6(out);
    } else {
        throw validation_error("unknown figure name: " + name + " (expected fig2..fig6)");
    }
}

} // namespace relaydmt::cli
