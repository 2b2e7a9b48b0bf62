/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/channel.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/link_dist.hpp"
#include "relaydmt/outage.hpp"

#include <doctest.h>

#include <cmath>
#include <memory>

using namespace relaydmt;
using doctest::Approx;

namespace {

std::unique_ptr<dist::LinkDist> rayleigh_link(int antennas) {
    return dist::link_gain_dist(channel::FadingModel::rayleigh(), antennas);
}

} // namespace

TEST_CASE("outage query derives the threshold") {
    CHECK(outage::OutageQuery(std::log(2.0), 4.0).x() == Approx(0.25).epsilon(1e-14));
    CHECK(outage::OutageQuery(0.0, 1.0).x() == Approx(0.0));
    CHECK_THROWS_AS(outage::OutageQuery(-0.1, 1.0), validation_error);
    CHECK_THROWS_AS(outage::OutageQuery(1.0, 0.0), validation_error);
}

TEST_CASE("iid closed form reference values") {
    CHECK(outage::outage_af_iid(0.01, 0.0, 1, 1) == Approx(0.0448054913559056).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.01, 0.0, 2, 1) == Approx(0.00975141424534263).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.01, 0.0, 1, 2) == Approx(0.00975141424534263).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.01, 1.0, 1, 1) == Approx(0.054309835518796).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.1, 1.0, 2, 1) == Approx(0.103694323991123).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.05, 0.3, 1, 2) == Approx(0.0599325763979513).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.05, 2.0, 2, 2) == Approx(0.0116235539095066).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.02, 0.7, 3, 2) ==
          Approx(0.000104661540638962).epsilon(1e-12));
    CHECK(outage::outage_af_iid(0.0, 1.0, 2, 2) == 0.0);
}

TEST_CASE("iid closed form matches the quadrature oracle") {
    for (const int m : {1, 2, 3}) {
        for (const int n : {1, 2}) {
            const auto ds = rayleigh_link(m);
            const auto dd = rayleigh_link(n);
            for (const double alpha : {0.0, 1.0}) {
                for (const double x : {0.1, 0.01}) {
                    const double closed = outage::outage_af_iid(x, alpha, m, n);
                    const double quad = outage::outage_af_quadrature(x, alpha, *ds, *dd);
                    CHECK(std::fabs(closed - quad) <=
                          1e-8 + 1e-6 * std::max(std::fabs(closed), std::fabs(quad)));
                }
            }
        }
    }
}

TEST_CASE("antenna symmetry without relay noise") {
    for (const auto& [m, n] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        for (const double x : {0.1, 0.01, 0.001}) {
            CHECK(std::fabs(outage::outage_af_iid(x, 0.0, m, n) -
                            outage::outage_af_iid(x, 0.0, n, m)) <= 1e-12);
        }
    }
}

TEST_CASE("outage is monotone in threshold and relay noise") {
    double prev = 0.0;
    for (const double x : {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0}) {
        const double p = outage::outage_af_iid(x, 0.5, 2, 1);
        CHECK(p > prev);
        prev = p;
    }
    prev = 0.0;
    for (const double alpha : {0.0, 0.1, 1.0, 10.0}) {
        const double p = outage::outage_af_iid(0.01, alpha, 2, 2);
        CHECK(p > prev);
        CHECK(p < 1.0);
        prev = p;
    }
}

TEST_CASE("correlated closed form reference values") {
    const auto one = channel::Eigenspectrum::all_ones(1);
    const auto src = channel::Eigenspectrum::from_values({1.5, 0.5});
    CHECK(outage::outage_af_correlated(0.01, 0.0, src, one) ==
          Approx(0.0106704696035279).epsilon(1e-12));

    // Correlation on a 2x1 link raises outage by a modest factor.
    const double ratio =
        outage::outage_af_correlated(0.01, 0.0, src, one) / outage::outage_af_iid(0.01, 0.0, 2, 1);
    CHECK(ratio > 1.05);
    CHECK(ratio < 1.15);

    const auto dst = channel::Eigenspectrum::from_values({1.3, 0.7});
    CHECK(outage::outage_af_correlated(0.01, 0.0, src, dst) ==
          Approx(0.00026972781500978).epsilon(1e-11));
    CHECK(outage::outage_af_correlated(0.05, 1.0, src, dst) ==
          Approx(0.00825493436009234).epsilon(1e-11));
    CHECK(outage::outage_af_correlated(0.01, 0.1, src, dst) ==
          Approx(0.000283334885506226).epsilon(1e-11));

    // All-unit spectra on both sides reduce to the i.i.d. form exactly.
    CHECK(outage::outage_af_correlated(0.01, 0.3, channel::Eigenspectrum::all_ones(2),
                                       channel::Eigenspectrum::all_ones(2)) ==
          Approx(outage::outage_af_iid(0.01, 0.3, 2, 2)).epsilon(1e-14));
}

TEST_CASE("correlated closed form matches quadrature") {
    const auto src = channel::Eigenspectrum::from_values({1.5, 0.5});
    const auto dst = channel::Eigenspectrum::from_values({1.3, 0.7});
    const auto ds = dist::link_gain_dist(channel::FadingModel::rayleigh(), 2, &src);
    const auto dd = dist::link_gain_dist(channel::FadingModel::rayleigh(), 2, &dst);
    for (const double alpha : {0.0, 0.5}) {
        for (const double x : {0.1, 0.02}) {
            const double closed = outage::outage_af_correlated(x, alpha, src, dst);
            const double quad = outage::outage_af_quadrature(x, alpha, *ds, *dd);
            CHECK(std::fabs(closed - quad) <=
                  1e-8 + 1e-6 * std::max(std::fabs(closed), std::fabs(quad)));
        }
    }
}

TEST_CASE("degenerate spectra are perturbed and stay verified") {
    // Repeated destination eigenvalues with a correlated source: the closed
    // form runs on a perturbed spectrum and is checked against quadrature.
    const auto src = channel::Eigenspectrum::from_values({12.0 / 7, 6.0 / 7, 3.0 / 7});
    const auto dst = channel::Eigenspectrum::all_ones(2);
    const double p = outage::outage_af_correlated(0.02, 0.5, src, dst);
    CHECK(std::fabs(p - 0.000127500087380037) <= 1e-6);
    CHECK(std::fabs(p - 0.000127500087380037) <= 1e-4 * 0.000127500087380037);

    const auto pert = outage::perturb_degenerate(channel::Eigenspectrum::from_values({2.0, 1.0, 1.0}));
    CHECK(pert.distinct);
    CHECK(pert.sum() == Approx(4.0).epsilon(1e-12));
    for (const double v : pert.values) {
        CHECK((std::fabs(v - 2.0) <= 2.0 * 1.1e-4 || std::fabs(v - 1.0) <= 1.1e-4));
    }
}

TEST_CASE("low-outage expansion for iid links") {
    // Matched antennas: P ~ (a + b ln(1/x)) x at leading order.
    const auto lo11 = outage::lowout_iid(1.0, 1, 1);
    CHECK(lo11.leading_power == 1);
    CHECK(lo11.evaluate(1e-3) == Approx(0.00775332394917907).epsilon(1e-12));

    const auto lo22 = outage::lowout_iid(0.0, 2, 2);
    CHECK(lo22.leading_power == 2);
    CHECK(lo22.evaluate(1e-3) == Approx(3.12666197458954e-6).epsilon(1e-12));

    // Wide destination: pure polynomial law, no log term.
    const auto lo13 = outage::lowout_iid(0.0, 1, 3);
    CHECK(lo13.coeff_poly == Approx(0.5).epsilon(1e-12));
    CHECK(lo13.coeff_log == 0.0);

    // More source than destination antennas: coefficient ignores relay noise.
    const auto lo21 = outage::lowout_iid(7.0, 2, 1);
    CHECK(lo21.evaluate(1e-3) == Approx(0.001).epsilon(1e-12));
    CHECK(outage::lowout_iid(0.0, 2, 1).coeff_poly ==
          Approx(outage::lowout_iid(10.0, 2, 1).coeff_poly).epsilon(1e-14));
    CHECK(outage::lowout_iid(0.0, 3, 1).coeff_poly ==
          Approx(outage::lowout_iid(10.0, 3, 1).coeff_poly).epsilon(1e-14));

    // Leading order is trusted: within 0.05% of the exact form at x = 1e-5.
    for (const auto& [m, n] :
         {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
        for (const double alpha : {0.0, 1.0}) {
            const double approx = outage::lowout_iid(alpha, m, n).evaluate(1e-5);
            const double exact = outage::outage_af_iid(1e-5, alpha, m, n);
            CHECK(approx / exact > 0.9995);
            CHECK(approx / exact < 1.0005);
        }
    }
}

TEST_CASE("low-outage expansion for correlated links") {
    const auto one = channel::Eigenspectrum::all_ones(1);
    const auto src = channel::Eigenspectrum::from_values({1.5, 0.5});
    const auto dst = channel::Eigenspectrum::from_values({1.3, 0.7});

    // 2x1: coefficient is a log-mean of the source spectrum; ln 3 at rho = 0.5.
    const auto lo21 = outage::lowout_correlated(0.0, src, one);
    CHECK(lo21.leading_power == 1);
    CHECK(lo21.coeff_poly == Approx(1.09861228866811).epsilon(1e-11));
    CHECK(lo21.coeff_log == 0.0);

    // Vanishing correlation recovers the i.i.d. coefficient 1.
    const auto weak = channel::Eigenspectrum::from_values({1.001, 0.999});
    CHECK(outage::lowout_correlated(0.0, weak, one).coeff_poly == Approx(1.0).epsilon(1e-5));

    // Matched antennas: log coefficient is 1/(N!(N-1)! prod(lambda) prod(eta)).
    CHECK(outage::lowout_correlated(0.0, src, src).coeff_log ==
          Approx(0.888888888889).epsilon(1e-10));
    CHECK(outage::lowout_correlated(1.0, src, dst).coeff_log ==
          Approx(0.732600732600733).epsilon(1e-10));
    CHECK(outage::lowout_correlated(0.0, src, dst).coeff_log ==
          Approx(outage::lowout_correlated(2.0, src, dst).coeff_log).epsilon(1e-14));

    // Expansion tracks the closed form deep in the tail.
    for (const double alpha : {0.0, 1.0}) {
        const double approx = outage::lowout_correlated(alpha, src, dst).evaluate(1e-5);
        const double exact = outage::outage_af_correlated(1e-5, alpha, src, dst);
        CHECK(approx / exact > 0.995);
        CHECK(approx / exact < 1.005);
    }
}

TEST_CASE("decode-and-forward outage") {
    const auto d1 = rayleigh_link(1);
    const auto d2 = rayleigh_link(2);
    CHECK(outage::outage_df(0.01, *d1, *d1) == Approx(0.0198013266932447).epsilon(1e-12));
    CHECK(outage::outage_df(0.01, *d2, *d1) == Approx(0.00999933996017715).epsilon(1e-12));

    // Bounded by the union bound and below by the weaker link.
    for (const double x : {0.5, 0.05, 0.005}) {
        const double p = outage::outage_df(x, *d2, *d1);
        const double fs = d2->cdf(x), fd = d1->cdf(x);
        CHECK(p >= std::max(fs, fd));
        CHECK(p <= fs + fd);
    }
}

TEST_CASE("analytic dispatcher covers the configuration space") {
    // i.i.d. route.
    const auto cfg = channel::ChannelConfig::make_iid(2, 1, 0.0);
    CHECK(outage::outage_analytic(0.01, cfg) == Approx(0.00975141424534263).epsilon(1e-12));

    // Correlated route.
    channel::ChannelConfig ccfg;
    ccfg.m = 2;
    ccfg.n = 1;
    ccfg.corr_sr = channel::CorrelationMatrix::two_antenna(0.5);
    CHECK(outage::outage_analytic(0.01, ccfg) == Approx(0.0106704696035279).epsilon(1e-10));

    // DF route.
    CHECK(outage::outage_analytic(0.01, channel::ChannelConfig::make_iid(1, 1, 0.0),
                                  outage::Protocol::df) ==
          Approx(0.0198013266932447).epsilon(1e-12));

    // General fading goes through quadrature and still matches Rayleigh forms
    // when the family is Rayleigh-equivalent (Nakagami with m_f = 1).
    channel::ChannelConfig ncfg = channel::ChannelConfig::make_iid(1, 1, 0.5);
    ncfg.fading_sr = channel::FadingModel::nakagami(1.0);
    CHECK(outage::outage_analytic(0.01, ncfg) ==
          Approx(outage::outage_af_iid(0.01, 0.5, 1, 1)).epsilon(1e-8));

    // Deep-tail queries switch to the series path instead of cancelling.
    const double tail = outage::outage_analytic(1e-12, channel::ChannelConfig::make_iid(2, 2, 1.0));
    CHECK(tail == Approx(1.4988294893e-23).epsilon(1e-6));
    CHECK(tail > 0.0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(outage::outage_af_iid(-0.1, 0.0, 1, 1), validation_error);
    CHECK_THROWS_AS(outage::outage_af_iid(0.1, -1.0, 1, 1), validation_error);
    CHECK_THROWS_AS(outage::outage_af_iid(0.1, 0.0, 0, 1), validation_error);
    CHECK_THROWS_AS(outage::lowout_iid(0.0, 1, 0), validation_error);
    const auto d1 = rayleigh_link(1);
    CHECK_THROWS_AS(outage::outage_df(-1.0, *d1, *d1), validation_error);
}
