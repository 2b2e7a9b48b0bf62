/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/mcsim.hpp"

#include "relaydmt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace relaydmt::mcsim {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

// Fill h with one fading draw. scratch must be at least h.size() long; it is
// only touched on the correlated Rayleigh path.
void draw_into(const channel::FadingModel& model, const Eigen::MatrixXcd* factor, RngStream& rng,
               Eigen::VectorXcd& h, Eigen::VectorXcd& scratch) {
    const Eigen::Index k = h.size();
    switch (model.family) {
    case channel::FadingFamily::Rayleigh:
        if (factor != nullptr) {
            for (Eigen::Index i = 0; i < k; ++i) scratch[i] = rng.complex_normal();
            h.noalias() = (*factor) * scratch.head(k);
        } else {
            for (Eigen::Index i = 0; i < k; ++i) h[i] = rng.complex_normal();
        }
        break;
    case channel::FadingFamily::Rician: {
        const double big_k = model.param;
        const double mu = std::sqrt(big_k / (big_k + 1.0));
        const double sd = std::sqrt(1.0 / (big_k + 1.0));
        for (Eigen::Index i = 0; i < k; ++i) h[i] = mu + sd * rng.complex_normal();
        break;
    }
    case channel::FadingFamily::Nakagami: {
        const double mf = model.param;
        for (Eigen::Index i = 0; i < k; ++i) {
            const double w = rng.gamma_draw(mf) / mf; // unit-mean power
            const double phi = two_pi * rng.uniform01();
            h[i] = std::polar(std::sqrt(w), phi);
        }
        break;
    }
    case channel::FadingFamily::Weibull: {
        const double kappa = model.param;
        const double lam = 1.0 / std::sqrt(std::tgamma(1.0 + 2.0 / kappa));
        for (Eigen::Index i = 0; i < k; ++i) {
            const double u = rng.uniform01();
            const double amp = lam * std::pow(-std::log(u), 1.0 / kappa);
            const double phi = two_pi * rng.uniform01();
            h[i] = std::polar(amp, phi);
        }
        break;
    }
    }
}

std::optional<Eigen::MatrixXcd> link_factor(const std::optional<channel::CorrelationMatrix>& corr) {
    if (corr && !corr->is_identity()) return channel::sampling_factor(*corr);
    return std::nullopt;
}

void check_run_params(double rate_nats, double gamma, std::uint64_t trials, int partitions) {
    if (!(rate_nats > 0.0) || !std::isfinite(rate_nats))
        throw validation_error("rate must be positive and finite");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw validation_error("snr must be positive and finite");
    if (trials == 0) throw validation_error("trials must be positive");
    if (partitions < 1 || static_cast<std::uint64_t>(partitions) > trials)
        throw validation_error("partitions must lie in [1, trials]");
}

McEstimate finish(std::uint64_t events, std::uint64_t trials, std::uint64_t seed, int partitions) {
    McEstimate est;
    est.trials = trials;
    est.outage_events = events;
    est.seed = seed;
    est.partitions = partitions;
    est.p_hat = static_cast<double>(events) / static_cast<double>(trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(trials));
    return est;
}

} // namespace

std::uint64_t mix64(std::uint64_t v) {
    std::uint64_t z = v + golden_step;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::pair<double, double> RngStream::normal_pair() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double rad = std::sqrt(-2.0 * std::log(u1));
    return {rad * std::cos(two_pi * u2), rad * std::sin(two_pi * u2)};
}

std::complex<double> RngStream::complex_normal() {
    const auto [z0, z1] = normal_pair();
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    return {z0 * inv_sqrt2, z1 * inv_sqrt2};
}

double RngStream::gamma_draw(double shape) {
    if (!(shape > 0.0)) throw validation_error("gamma shape must be positive");
    if (shape < 1.0) {
        // Boost-and-scale: Gamma(a) = Gamma(a+1) * U^(1/a).
        const double g = gamma_draw(shape + 1.0);
        return g * std::pow(uniform01(), 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze; expected < 1.04 iterations per draw.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = 0.0;
        double v = 0.0;
        do {
            x = normal_pair().first;
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
    }
}

Eigen::VectorXcd draw_channel(const channel::FadingModel& model, int k,
                              const Eigen::MatrixXcd* factor, RngStream& rng) {
    if (k < 1) throw validation_error("antenna count must be positive");
    if (factor != nullptr && (factor->rows() != k || factor->cols() != k))
        throw validation_error("correlation factor dimension mismatch");
    Eigen::VectorXcd h(k);
    Eigen::VectorXcd scratch(k);
    draw_into(model, factor, rng, h, scratch);
    return h;
}

double snr_af(const Eigen::VectorXcd& h_sr, const Eigen::VectorXcd& h_rd, double alpha,
              double gamma, bool csi_at_source) {
    const double g_s = h_sr.squaredNorm();
    const double g_d = h_rd.squaredNorm();
    double snr = g_s * g_d * gamma / (1.0 + alpha * g_d);
    if (!csi_at_source) snr /= static_cast<double>(h_sr.size());
    return snr;
}

McEstimate estimate_outage(const channel::ChannelConfig& cfg, double rate_nats, double gamma,
                           std::uint64_t trials, std::uint64_t seed, McProtocol proto,
                           int partitions) {
    cfg.validate();
    check_run_params(rate_nats, gamma, trials, partitions);
    if (proto == McProtocol::af_selection || proto == McProtocol::df_selection)
        throw validation_error("selection protocols require a relay set");

    const double thr = std::expm1(rate_nats); // threshold on the end-to-end SNR
    const double x = thr / gamma;             // threshold on the per-hop gain (decode-and-forward)

    const auto fs = link_factor(cfg.corr_sr);
    const auto fd = link_factor(cfg.corr_rd);
    const Eigen::MatrixXcd* fs_p = fs ? &*fs : nullptr;
    const Eigen::MatrixXcd* fd_p = fd ? &*fd : nullptr;

    Eigen::VectorXcd hs(cfg.m);
    Eigen::VectorXcd hd(cfg.n);
    Eigen::VectorXcd scratch(std::max(cfg.m, cfg.n));

    std::uint64_t events = 0;
    const std::uint64_t base = trials / static_cast<std::uint64_t>(partitions);
    const std::uint64_t rem = trials % static_cast<std::uint64_t>(partitions);
    std::uint64_t t0 = 0;
    for (int p = 0; p < partitions; ++p) {
        const std::uint64_t len = base + (static_cast<std::uint64_t>(p) < rem ? 1 : 0);
        std::uint64_t sub = 0;
        for (std::uint64_t t = t0; t < t0 + len; ++t) {
            RngStream rng(seed, t);
            draw_into(cfg.fading_sr, fs_p, rng, hs, scratch);
            draw_into(cfg.fading_rd, fd_p, rng, hd, scratch);
            bool out = false;
            if (proto == McProtocol::af) {
                out = snr_af(hs, hd, cfg.alpha, gamma, cfg.csi_at_source) < thr;
            } else {
                out = std::min(hs.squaredNorm(), hd.squaredNorm()) < x;
            }
            sub += out ? 1u : 0u;
        }
        events += sub;
        t0 += len;
    }
    return finish(events, trials, seed, partitions);
}

McEstimate estimate_outage(const multirelay::RelaySet& set, double rate_nats, double gamma,
                           std::uint64_t trials, std::uint64_t seed, McProtocol proto,
                           int partitions) {
    set.validate();
    check_run_params(rate_nats, gamma, trials, partitions);
    const bool df = (proto == McProtocol::df || proto == McProtocol::df_selection);

    const double thr = std::expm1(rate_nats);
    const double x = thr / gamma;
    const std::size_t n_links = set.links.size();

    std::vector<std::optional<Eigen::MatrixXcd>> fs(n_links);
    std::vector<std::optional<Eigen::MatrixXcd>> fd(n_links);
    Eigen::Index max_dim = 1;
    for (std::size_t l = 0; l < n_links; ++l) {
        fs[l] = link_factor(set.links[l].corr_sr);
        fd[l] = link_factor(set.links[l].corr_rd);
        max_dim = std::max<Eigen::Index>(max_dim, std::max(set.links[l].m, set.links[l].n));
    }

    std::vector<Eigen::VectorXcd> hs(n_links);
    std::vector<Eigen::VectorXcd> hd(n_links);
    for (std::size_t l = 0; l < n_links; ++l) {
        hs[l].resize(set.links[l].m);
        hd[l].resize(set.links[l].n);
    }
    Eigen::VectorXcd scratch(max_dim);

    std::uint64_t events = 0;
    const std::uint64_t base = trials / static_cast<std::uint64_t>(partitions);
    const std::uint64_t rem = trials % static_cast<std::uint64_t>(partitions);
    std::uint64_t t0 = 0;
    for (int p = 0; p < partitions; ++p) {
        const std::uint64_t len = base + (static_cast<std::uint64_t>(p) < rem ? 1 : 0);
        std::uint64_t sub = 0;
        for (std::uint64_t t = t0; t < t0 + len; ++t) {
            RngStream rng(seed, t);
            // Picking the best relay fails exactly when every relay fails, so
            // the selection indicator is the all-links-out event.
            bool all_out = true;
            for (std::size_t l = 0; l < n_links; ++l) {
                const auto& link = set.links[l];
                draw_into(link.fading_sr, fs[l] ? &*fs[l] : nullptr, rng, hs[l], scratch);
                draw_into(link.fading_rd, fd[l] ? &*fd[l] : nullptr, rng, hd[l], scratch);
                bool link_out = false;
                if (df) {
                    link_out = std::min(hs[l].squaredNorm(), hd[l].squaredNorm()) < x;
                } else {
                    link_out =
                        snr_af(hs[l], hd[l], link.alpha, gamma, link.csi_at_source) < thr;
                }
                all_out = all_out && link_out;
            }
            bool out = all_out;
            if (set.direct_link_outage) {
                // Independent direct path, drawn last as a Bernoulli event so
                // p_hat keeps a binomial standard error.
                const bool direct_out = rng.uniform01() < *set.direct_link_outage;
                out = out && direct_out;
            }
            sub += out ? 1u : 0u;
        }
        events += sub;
        t0 += len;
    }
    return finish(events, trials, seed, partitions);
}

SlopeResult diversity_slope(const channel::ChannelConfig& cfg, double r,
                            const std::vector<double>& gamma_list_db, std::uint64_t trials,
                            std::uint64_t seed, McProtocol proto) {
    if (!(r >= 0.0 && r <= 1.0)) throw validation_error("multiplexing gain must lie in [0, 1]");
    if (proto == McProtocol::af_selection || proto == McProtocol::df_selection)
        throw validation_error("selection protocols require a relay set");
    if (gamma_list_db.empty()) throw validation_error("need at least one SNR point");

    SlopeResult res;
    res.points.reserve(gamma_list_db.size());
    std::vector<double> lg;
    std::vector<double> y;
    for (const double db : gamma_list_db) {
        const double gamma = std::pow(10.0, db / 10.0);
        if (!(gamma > 1.0)) throw validation_error("diversity slope needs snr above 0 dB");
        const double rate = std::log1p(std::pow(gamma, r));
        // Common random numbers across SNR points: same seed for every run.
        const McEstimate est = estimate_outage(cfg, rate, gamma, trials, seed, proto);
        SlopePoint pt;
        pt.gamma_db = db;
        pt.p_hat = est.p_hat;
        pt.outage_events = est.outage_events;
        pt.qualified = est.outage_events >= 100;
        res.points.push_back(pt);
        if (pt.qualified) {
            lg.push_back(std::log(gamma));
            y.push_back(-std::log(est.p_hat));
        }
    }
    if (lg.size() < 4)
        throw insufficient_data_error("fewer than 4 SNR points with at least 100 outage events");

    const double n = static_cast<double>(lg.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < lg.size(); ++i) {
        mx += lg[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < lg.size(); ++i) {
        sxx += (lg[i] - mx) * (lg[i] - mx);
        sxy += (lg[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0)) throw insufficient_data_error("SNR points are degenerate");
    res.slope = sxy / sxx;
    return res;
}

} // namespace relaydmt::mcsim
