/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 *
 * Acceptance gate: one PASS/FAIL line per shipped guarantee, pinned
 * tolerances, nonzero exit on any failure. Budgeted criteria also fail on
 * overrun.
 */

#include "relaydmt/capacity.hpp"
#include "relaydmt/channel.hpp"
#include "relaydmt/link_dist.hpp"
#include "relaydmt/mcsim.hpp"
#include "relaydmt/multirelay.hpp"
#include "relaydmt/outage.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace relaydmt;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

channel::Eigenspectrum random_spectrum(int dim, std::mt19937& gen) {
    std::uniform_real_distribution<double> ud(0.3, 2.5);
    std::vector<double> v;
    while (static_cast<int>(v.size()) < dim) {
        const double c = ud(gen);
        bool ok = true;
        for (const double w : v) ok = ok && std::fabs(w - c) > 0.2;
        if (ok) v.push_back(c);
    }
    return channel::Eigenspectrum::from_values(v);
}

// 1. Closed forms vs adaptive quadrature: max(1e-8 abs, 1e-6 rel) over the
//    core grid plus 10 random distinct spectra; under 5 s.
bool crit1(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const int m : {1, 2, 3}) {
        for (const int n : {1, 2, 3}) {
            const auto ds = dist::link_gain_dist(channel::FadingModel::rayleigh(), m);
            const auto dd = dist::link_gain_dist(channel::FadingModel::rayleigh(), n);
            for (const double alpha : {0.0, 0.01, 1.0}) {
                for (const double x : {1e-1, 1e-2, 1e-3}) {
                    const double closed = outage::outage_af_iid(x, alpha, m, n);
                    const double quad = outage::outage_af_quadrature(x, alpha, *ds, *dd);
                    const double tol = std::max(1e-8, 1e-6 * std::max(closed, quad));
                    worst = std::max(worst, std::fabs(closed - quad) / tol);
                }
            }
        }
    }
    std::mt19937 gen(20260401);
    for (int rep = 0; rep < 10; ++rep) {
        const auto sr = random_spectrum(2 + static_cast<int>(gen() % 2), gen);
        const auto rd = random_spectrum(2 + static_cast<int>(gen() % 2), gen);
        const auto ds = dist::link_gain_dist(channel::FadingModel::rayleigh(), sr.size(), &sr);
        const auto dd = dist::link_gain_dist(channel::FadingModel::rayleigh(), rd.size(), &rd);
        const double alpha = (rep % 2) ? 1.0 : 0.0;
        const double closed = outage::outage_af_correlated(1e-2, alpha, sr, rd);
        const double quad = outage::outage_af_quadrature(1e-2, alpha, *ds, *dd);
        const double tol = std::max(1e-8, 1e-6 * std::max(closed, quad));
        worst = std::max(worst, std::fabs(closed - quad) / tol);
    }
    const double dt = seconds_since(t0);
    detail = "worst diff " + num(worst) + "x tolerance, " + num(dt) + " s";
    return worst <= 1.0 && dt < 5.0;
}

// 2. Monte Carlo vs analytic: 1e6 trials per point, within 4 standard errors
//    on the (m,n) in {1,2}^2 sub-grid where p >= 1e-4; under 60 s.
bool crit2(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int points = 0;
    std::uint64_t seed = 1000;
    for (const int m : {1, 2}) {
        for (const int n : {1, 2}) {
            for (const double alpha : {0.0, 0.01, 1.0}) {
                for (const double x : {1e-1, 1e-2, 1e-3}) {
                    const double p = outage::outage_af_iid(x, alpha, m, n);
                    if (p < 1e-4) continue;
                    const auto cfg = channel::ChannelConfig::make_iid(m, n, alpha);
                    const auto est =
                        mcsim::estimate_outage(cfg, std::log1p(x), 1.0, 1000000, ++seed);
                    worst = std::max(worst,
                                     std::fabs(est.p_hat - p) / std::max(est.std_err, 1e-12));
                    ++points;
                }
            }
        }
    }
    const double dt = seconds_since(t0);
    detail = std::to_string(points) + " points, worst " + num(worst) + " sigma, " + num(dt) + " s";
    return worst <= 4.0 && dt < 60.0;
}

// 3. Series evaluation within 1e-10 of the closed form for x <= 0.1.
bool crit3(std::string& detail) {
    double worst = 0.0;
    for (const int m : {1, 2, 3}) {
        for (const int n : {1, 2, 3}) {
            for (const double alpha : {0.0, 0.01, 1.0}) {
                for (const double x : {1e-1, 1e-2, 1e-3}) {
                    const double s = outage::outage_series_iid(x, alpha, m, n).value;
                    const double c = outage::outage_af_iid(x, alpha, m, n);
                    worst = std::max(worst, std::fabs(s - c));
                }
            }
        }
    }
    detail = "worst |series - closed| = " + num(worst);
    return worst <= 1e-10;
}

// 4. Antenna-swap symmetry at alpha = 0, absolute 1e-12.
bool crit4(std::string& detail) {
    double worst = 0.0;
    for (const int m : {1, 2, 3}) {
        for (const int n : {1, 2, 3}) {
            for (const double x : {1e-1, 1e-2, 1e-3}) {
                worst = std::max(worst, std::fabs(outage::outage_af_iid(x, 0.0, m, n) -
                                                  outage::outage_af_iid(x, 0.0, n, m)));
            }
        }
    }
    detail = "worst asymmetry = " + num(worst);
    return worst <= 1e-12;
}

// 5. Low-outage expansion over exact in [0.95, 1.05] at x = 1e-5.
bool crit5(std::string& detail) {
    double lo = 10.0, hi = 0.0;
    for (const int m : {1, 2}) {
        for (const int n : {1, 2}) {
            for (const double alpha : {0.0, 1.0}) {
                const double approx = outage::lowout_iid(alpha, m, n).evaluate(1e-5);
                const double exact = outage::outage_af_iid(1e-5, alpha, m, n);
                lo = std::min(lo, approx / exact);
                hi = std::max(hi, approx / exact);
            }
        }
    }
    detail = "ratio range [" + num(lo) + ", " + num(hi) + "]";
    return lo >= 0.95 && hi <= 1.05;
}

// 6. Fixed-rate gap at 40 dB, alpha = 1: P(1x1)/P(2x1) in [7, 14].
bool crit6(std::string& detail) {
    const double x = 1e-4; // r = 0 threshold at gamma = 1e4
    const double ratio = outage::outage_af_iid(x, 1.0, 1, 1) / outage::outage_af_iid(x, 1.0, 2, 1);
    detail = "ratio = " + num(ratio);
    return ratio >= 7.0 && ratio <= 14.0;
}

// 7. 2x2 with rho = 0.5 on both links: mild relay noise is negligible
//    (P(alpha=0.1)/P(alpha=0) < 1.1) and P never decreases with alpha.
bool crit7(std::string& detail) {
    const auto s = channel::eigenvalues(channel::CorrelationMatrix::exponential(2, 0.5));
    double worst_ratio = 0.0;
    bool monotone = true;
    for (const double x : {1e-1, 1e-2, 1e-3}) {
        const double p0 = outage::outage_af_correlated(x, 0.0, s, s);
        const double p01 = outage::outage_af_correlated(x, 0.1, s, s);
        worst_ratio = std::max(worst_ratio, p01 / p0);
        double prev = 0.0;
        for (const double alpha : {0.0, 0.1, 0.3, 1.0, 3.0}) {
            const double p = outage::outage_af_correlated(x, alpha, s, s);
            monotone = monotone && p >= prev;
            prev = p;
        }
    }
    detail = "worst P(0.1)/P(0) = " + num(worst_ratio) + (monotone ? ", monotone" : ", NOT monotone");
    return worst_ratio < 1.1 && monotone;
}

// 8. 2x1 at x = 1e-2: correlated low-outage coefficient within 10% of exact
//    for rho in [0.1, 0.9]; P(rho=0.5)/P(rho=0) in [1.05, 1.15].
bool crit8(std::string& detail) {
    const auto one = channel::Eigenspectrum::all_ones(1);
    double worst = 0.0;
    for (int i = 1; i <= 9; ++i) {
        const double rho = 0.1 * i;
        const auto s = channel::Eigenspectrum::from_values({1.0 + rho, 1.0 - rho});
        const double exact = outage::outage_af_correlated(1e-2, 0.0, s, one);
        const double approx = outage::lowout_correlated(0.0, s, one).evaluate(1e-2);
        worst = std::max(worst, std::fabs(approx - exact) / exact);
    }
    const auto s5 = channel::Eigenspectrum::from_values({1.5, 0.5});
    const double ratio = outage::outage_af_correlated(1e-2, 0.0, s5, one) /
                         outage::outage_af_iid(1e-2, 0.0, 2, 1);
    detail = "worst approx err " + num(worst * 100.0) + "%, corr ratio " + num(ratio);
    return worst <= 0.10 && ratio >= 1.05 && ratio <= 1.15;
}

// 9. Empirical diversity slopes within +/-0.3 of min(d_s, d_d)(1-r) for four
//    fading/protocol cases; under 600 s.
bool crit9(std::string& detail) {
    const auto t0 = std::chrono::steady_clock::now();

    struct Case {
        channel::ChannelConfig cfg;
        mcsim::McProtocol proto;
        std::vector<double> dbs;
        std::uint64_t trials;
        double target;
    };
    std::vector<Case> cases;

    cases.push_back({channel::ChannelConfig::make_iid(2, 3, 0.0), mcsim::McProtocol::af,
                     {6.0, 9.0, 12.0, 15.0}, 2000000, 2.0});

    channel::ChannelConfig nak = channel::ChannelConfig::make_iid(1, 1, 0.0);
    nak.fading_sr = channel::FadingModel::nakagami(2.0);
    nak.fading_rd = channel::FadingModel::nakagami(2.0);
    cases.push_back({nak, mcsim::McProtocol::af, {24.0, 28.0, 32.0, 36.0}, 60000000, 2.0});

    channel::ChannelConfig ric = channel::ChannelConfig::make_iid(1, 1, 0.0);
    ric.fading_sr = channel::FadingModel::rician(5.0);
    ric.fading_rd = channel::FadingModel::rician(5.0);
    cases.push_back({ric, mcsim::McProtocol::af, {18.0, 22.0, 26.0, 30.0}, 50000000, 1.0});

    cases.push_back({channel::ChannelConfig::make_iid(2, 2, 0.0), mcsim::McProtocol::df,
                     {6.0, 9.0, 12.0, 15.0}, 2000000, 2.0});

    bool ok = true;
    detail = "slopes";
    for (const auto& c : cases) {
        const auto res = mcsim::diversity_slope(c.cfg, 0.0, c.dbs, c.trials, 424242, c.proto);
        ok = ok && std::fabs(res.slope - c.target) <= 0.3;
        detail += " " + num(res.slope) + "/" + num(c.target);
    }
    const double dt = seconds_since(t0);
    detail += ", " + num(dt) + " s";
    return ok && dt < 600.0;
}

// 10. Selection relaying: MC within 4 sigma of the analytic product rule for
//     N in {2,3}; identical-link power law within 10% at x = 1e-3.
bool crit10(std::string& detail) {
    const auto link = channel::ChannelConfig::make_iid(1, 1, 0.0);
    double worst_sigma = 0.0;
    for (const int n_rel : {2, 3}) {
        multirelay::RelaySet set;
        for (int i = 0; i < n_rel; ++i) set.links.push_back(link);
        const double p = multirelay::relay_set_outage(1e-2, set);
        const std::uint64_t trials = n_rel == 2 ? 1000000 : 4000000;
        const auto est = mcsim::estimate_outage(set, std::log1p(1e-2), 1.0, trials, 77 + n_rel,
                                                mcsim::McProtocol::af_selection);
        worst_sigma =
            std::max(worst_sigma, std::fabs(est.p_hat - p) / std::max(est.std_err, 1e-12));
    }

    const double p1 = outage::outage_analytic(1e-3, link);
    double worst_err = 0.0;
    for (const int n_rel : {2, 3}) {
        const double power = std::pow(p1, n_rel);
        const double approx = multirelay::selection_lowout(0.0, 1, 1, n_rel).evaluate(1e-3);
        worst_err = std::max(worst_err, std::fabs(approx - power) / power);
    }
    detail = "worst " + num(worst_sigma) + " sigma, power-law err " + num(worst_err * 100.0) + "%";
    return worst_sigma <= 4.0 && worst_err <= 0.10;
}

// 11. Capacity: inversion roundtrip to 1e-9 relative; low-SNR capacity gain
//     C(2x1)/C(1x1) at -10 dB, eps = 0.05, alpha = 0 in [3.5, 6].
bool crit11(std::string& detail) {
    double worst = 0.0;
    for (const auto& cfg : {channel::ChannelConfig::make_iid(1, 1, 1.0),
                            channel::ChannelConfig::make_iid(2, 1, 0.0)}) {
        const auto p_of_x = [&](double x) { return outage::outage_analytic(x, cfg); };
        for (const double eps : {1e-6, 1e-4, 1e-2, 0.5}) {
            const double x = capacity::invert_outage(eps, p_of_x);
            worst = std::max(worst, std::fabs(p_of_x(x) - eps) / eps);
        }
    }

    const double gamma = 0.1;
    const auto c21 =
        capacity::outage_capacity(0.05, gamma, channel::ChannelConfig::make_iid(2, 1, 0.0));
    const auto c11 =
        capacity::outage_capacity(0.05, gamma, channel::ChannelConfig::make_iid(1, 1, 0.0));
    const double ratio = c21.c_exact / c11.c_exact;
    detail = "roundtrip err " + num(worst) + ", capacity ratio " + num(ratio);
    return worst <= 1e-9 && ratio >= 3.5 && ratio <= 6.0;
}

struct Criterion {
    const char* label;
    bool (*fn)(std::string&);
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"closed forms vs quadrature, max(1e-8 abs, 1e-6 rel), core grid + 10 spectra, < 5 s",
         crit1},
        {"Monte Carlo (1e6 trials) within 4 sigma where p >= 1e-4, < 60 s", crit2},
        {"series within 1e-10 of closed form for x <= 0.1", crit3},
        {"antenna-swap symmetry at alpha = 0 within 1e-12", crit4},
        {"low-outage expansion/exact in [0.95, 1.05] at x = 1e-5", crit5},
        {"P(1x1)/P(2x1) at 40 dB, alpha = 1 in [7, 14]", crit6},
        {"2x2 rho = 0.5: P(alpha=0.1)/P(alpha=0) < 1.1 and monotone in alpha", crit7},
        {"2x1 correlated approximation within 10% for rho in [0.1, 0.9]", crit8},
        {"empirical diversity slopes within +/-0.3 of target, < 600 s", crit9},
        {"selection: MC vs product rule (4 sigma), power law within 10%", crit10},
        {"capacity inversion to 1e-9; low-SNR ratio in [3.5, 6]", crit11},
    };

    int failures = 0;
    int id = 0;
    for (const auto& c : criteria) {
        ++id;
        std::string detail;
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::printf("[%2d] %s  %s (%s)\n", id, ok ? "PASS" : "FAIL", c.label, detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("acceptance: all %d criteria passed\n", id);
    } else {
        std::printf("acceptance: %d of %d criteria FAILED\n", failures, id);
    }
    return failures == 0 ? 0 : 1;
}
