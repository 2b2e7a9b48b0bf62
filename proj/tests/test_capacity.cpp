/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/capacity.hpp"
#include "relaydmt/channel.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/outage.hpp"

#include <doctest.h>

#include <cmath>

using namespace relaydmt;
using doctest::Approx;

TEST_CASE("outage inversion roundtrip") {
    const auto cfg = channel::ChannelConfig::make_iid(2, 1, 0.5);
    const auto p_of_x = [&](double x) { return outage::outage_analytic(x, cfg); };
    for (const double eps : {1e-6, 1e-4, 1e-2, 0.5}) {
        const double x = capacity::invert_outage(eps, p_of_x);
        CHECK(std::fabs(p_of_x(x) - eps) <= 1e-9 * eps);
    }
    CHECK_THROWS_AS(capacity::invert_outage(0.0, p_of_x), validation_error);
    CHECK_THROWS_AS(capacity::invert_outage(1.0, p_of_x), validation_error);
}

TEST_CASE("snr loss reference values") {
    const auto c11a1 = capacity::outage_capacity(1e-3, 10.0, channel::ChannelConfig::make_iid(1, 1, 1.0));
    CHECK(c11a1.x_eps == Approx(9.93875007481e-5).epsilon(1e-9));

    const auto c21 = capacity::outage_capacity(1e-3, 10.0, channel::ChannelConfig::make_iid(2, 1, 0.0));
    CHECK(c21.x_eps == Approx(0.00100365281543).epsilon(1e-9));

    const auto c11 = capacity::outage_capacity(1e-3, 10.0, channel::ChannelConfig::make_iid(1, 1, 0.0));
    CHECK(c11.x_eps == Approx(1.11794263441e-4).epsilon(1e-9));

    // x_eps does not depend on the SNR, only the capacity does.
    const auto c11b = capacity::outage_capacity(1e-3, 1e4, channel::ChannelConfig::make_iid(1, 1, 0.0));
    CHECK(c11b.x_eps == Approx(c11.x_eps).epsilon(1e-12));
    CHECK(c11b.c_exact == Approx(std::log1p(1e4 * c11b.x_eps)).epsilon(1e-12));
}

TEST_CASE("capacity approximations bracket the exact value") {
    const auto cfg = channel::ChannelConfig::make_iid(1, 1, 0.0);

    // High SNR: gamma.x_eps >> 1 once eps is mild and gamma is large.
    const auto hi = capacity::outage_capacity(0.5, 1e5, cfg);
    CHECK(hi.x_eps * 1e5 > 10.0);
    CHECK(std::fabs(hi.c_high_snr - hi.c_exact) / hi.c_exact < 0.02);

    // Low SNR: gamma.x_eps << 1.
    const auto lo = capacity::outage_capacity(1e-3, 0.05, cfg);
    CHECK(lo.x_eps * 0.05 < 0.01);
    CHECK(std::fabs(lo.c_low_snr - lo.c_exact) / lo.c_exact < 0.005);

    // The epsilon-capacity never beats the AWGN ceiling at reasonable eps.
    for (const double gamma : {0.1, 1.0, 100.0}) {
        const auto c = capacity::outage_capacity(0.5, gamma, cfg);
        CHECK(c.c_exact <= std::log1p(gamma));
    }
}

TEST_CASE("closed-form snr loss approximation") {
    // Matched antennas: implicit-log inversion, benchmarked against the exact
    // x_eps at eps = 1e-3.
    const auto ap = capacity::snr_loss_approx(1e-3, channel::ChannelConfig::make_iid(1, 1, 0.0));
    CHECK(ap.applicable);
    CHECK(ap.x_eps_approx == Approx(1.48075230438e-4).epsilon(1e-9));
    const double exact = 1.11794263441e-4;
    CHECK(std::fabs(ap.x_eps_approx - exact) / ap.x_eps_approx <= 0.25);

    // Mismatched antennas: direct root, tight at small eps.
    const auto ap21 = capacity::snr_loss_approx(1e-4, channel::ChannelConfig::make_iid(2, 1, 0.0));
    CHECK(ap21.applicable);
    const auto ex21 = capacity::outage_capacity(1e-4, 10.0, channel::ChannelConfig::make_iid(2, 1, 0.0));
    CHECK(std::fabs(ap21.x_eps_approx - ex21.x_eps) / ex21.x_eps < 0.05);

    // Large eps defeats the equal-count branch; the fallback stays exact.
    const auto big = capacity::snr_loss_approx(0.95, channel::ChannelConfig::make_iid(1, 1, 0.0));
    CHECK_FALSE(big.applicable);
    CHECK(big.x_eps_approx > 0.0);
}

TEST_CASE("capacity loss views") {
    const auto cfg = channel::ChannelConfig::make_iid(2, 1, 0.0);
    const auto loss = capacity::capacity_loss(0.05, 10.0, cfg);
    const auto cap = capacity::outage_capacity(0.05, 10.0, cfg);
    CHECK(loss.additive_nats == Approx(std::log1p(10.0) - cap.c_exact).epsilon(1e-12));
    CHECK(loss.multiplicative == Approx(cap.c_exact / std::log1p(10.0)).epsilon(1e-12));
    CHECK(loss.multiplicative > 0.0);
    CHECK(loss.multiplicative < 1.0);
}

TEST_CASE("finite-snr diversity reference values") {
    const auto d11 = capacity::finite_snr_dmt(1e4, 0.0, channel::ChannelConfig::make_iid(1, 1, 1.0));
    CHECK(d11.d == Approx(0.7493992849).epsilon(1e-8));
    CHECK_FALSE(d11.saturated);

    const auto d21 = capacity::finite_snr_dmt(1e4, 0.0, channel::ChannelConfig::make_iid(2, 1, 1.0));
    CHECK(d21.d == Approx(0.9999589898).epsilon(1e-8));

    // Convergence to the asymptote as the SNR grows.
    const auto d21_hi = capacity::finite_snr_dmt(1e12, 0.0, channel::ChannelConfig::make_iid(2, 1, 1.0));
    CHECK(std::fabs(d21_hi.d - 1.0) <= 3e-7);

    const auto half = capacity::finite_snr_dmt(1e4, 0.5, channel::ChannelConfig::make_iid(2, 1, 1.0));
    CHECK(half.d == Approx(0.5).epsilon(0.01));
    CHECK(half.r == 0.5);
    CHECK(half.gamma == 1e4);

    CHECK_THROWS_AS(capacity::finite_snr_dmt(1e4, 1.5, channel::ChannelConfig::make_iid(1, 1, 0.0)),
                    validation_error);
    CHECK_THROWS_AS(capacity::finite_snr_dmt(0.5, 0.0, channel::ChannelConfig::make_iid(1, 1, 0.0)),
                    validation_error);
}

TEST_CASE("matched antennas approach the log-corrected asymptote") {
    // For equal antenna counts the finite-SNR diversity agrees with the
    // low-outage expansion evaluated at the same threshold.
    for (const double r : {0.0, 0.5}) {
        for (const int mm : {1, 2}) {
            const auto cfg = channel::ChannelConfig::make_iid(mm, mm, 1.0);
            const double gamma = 1e10;
            const auto pt = capacity::finite_snr_dmt(gamma, r, cfg);
            const double x = std::pow(gamma, r - 1.0);
            const double p = outage::lowout_iid(1.0, mm, mm).evaluate(x);
            const double d_ref = -std::log(p) / std::log(gamma);
            CHECK(std::fabs(pt.d - d_ref) <= 1e-4);
        }
    }
}

TEST_CASE("decode-and-forward tracks amplify-and-forward diversity") {
    // With one antenna on each side the protocols split by a visible margin;
    // with a redundant hop they coincide.
    const double gamma = 1e10;
    const auto c21 = channel::ChannelConfig::make_iid(2, 1, 1.0);
    const auto af21 = capacity::finite_snr_dmt(gamma, 0.0, c21);
    const auto df21 = capacity::finite_snr_dmt(gamma, 0.0, c21, outage::Protocol::df);
    CHECK(std::fabs(af21.d - df21.d) <= 0.1);

    const auto c12 = channel::ChannelConfig::make_iid(1, 2, 1.0);
    const auto af12 = capacity::finite_snr_dmt(gamma, 0.0, c12);
    const auto df12 = capacity::finite_snr_dmt(gamma, 0.0, c12, outage::Protocol::df);
    CHECK(std::fabs(af12.d - df12.d) <= 0.1);
}

TEST_CASE("asymptotic tradeoff") {
    CHECK(capacity::asymptotic_dmt(2.0, 3.0, 0.0) == Approx(2.0));
    CHECK(capacity::asymptotic_dmt(2.0, 3.0, 0.5) == Approx(1.0));
    CHECK(capacity::asymptotic_dmt(2.0, 3.0, 1.0) == Approx(0.0));

    // Linear in (1 - r) and symmetric in the two links.
    for (const double r : {0.0, 0.25, 0.75}) {
        CHECK(capacity::asymptotic_dmt(3.0, 2.0, r) == Approx(2.0 * (1.0 - r)).epsilon(1e-14));
    }

    const auto cfg = channel::ChannelConfig::make_iid(2, 3, 0.0);
    CHECK(capacity::asymptotic_dmt(cfg, 0.0) == Approx(2.0));
    const auto swapped = channel::ChannelConfig::make_iid(3, 2, 0.0);
    CHECK(capacity::asymptotic_dmt(swapped, 0.25) == Approx(capacity::asymptotic_dmt(cfg, 0.25)));

    // Non-Rayleigh links scale by their fading exponents.
    channel::ChannelConfig ncfg = channel::ChannelConfig::make_iid(1, 1, 0.0);
    ncfg.fading_sr = channel::FadingModel::nakagami(2.0);
    CHECK(capacity::asymptotic_dmt(ncfg, 0.0) == Approx(1.0)); // destination hop limits

    ncfg.fading_rd = channel::FadingModel::nakagami(3.0);
    CHECK(capacity::asymptotic_dmt(ncfg, 0.0) == Approx(2.0));

    const auto orders = capacity::link_diversity_orders(ncfg);
    CHECK(orders.first == Approx(2.0));
    CHECK(orders.second == Approx(3.0));

    // Selection over identical relays adds the per-relay minima.
    CHECK(capacity::asymptotic_dmt({{2.0, 3.0}, {1.0, 4.0}}, 0.5) == Approx(1.5).epsilon(1e-14));

    CHECK_THROWS_AS(capacity::asymptotic_dmt(2.0, 3.0, -0.1), validation_error);
    CHECK_THROWS_AS(capacity::asymptotic_dmt(2.0, 3.0, 1.1), validation_error);
}
