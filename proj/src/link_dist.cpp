/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/link_dist.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace relaydmt::dist {

GammaDist::GammaDist(double shape, double scale) : shape_(shape), scale_(scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw validation_error("gamma distribution needs positive shape and scale");
    log_norm_ = -std::lgamma(shape) - shape * std::log(scale);
}

double GammaDist::pdf(double t) const {
    if (t < 0.0) return 0.0;
    if (t == 0.0) {
        if (shape_ > 1.0) return 0.0;
        if (shape_ == 1.0) return 1.0 / scale_;
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_norm_ + (shape_ - 1.0) * std::log(t) - t / scale_);
}

double GammaDist::cdf(double t) const {
    if (t <= 0.0) return 0.0;
    return specfun::gamma_p(shape_, t / scale_);
}

std::string GammaDist::describe() const {
    std::ostringstream os;
    os << "gamma(shape=" << shape_ << ", scale=" << scale_ << ")";
    return os.str();
}

GenChi2Dist::GenChi2Dist(channel::Eigenspectrum eigs) : eigs_(std::move(eigs)) {}

double GenChi2Dist::pdf(double t) const { return channel::gen_chi2_pdf(t, eigs_); }
double GenChi2Dist::cdf(double t) const { return channel::gen_chi2_cdf(t, eigs_); }

std::string GenChi2Dist::describe() const {
    std::ostringstream os;
    os << "genchi2(eigs=";
    for (int i = 0; i < eigs_.size(); ++i) os << (i ? "," : "") << eigs_.values[i];
    os << ")";
    return os.str();
}

RicianSumDist::RicianSumDist(double k_factor, int antennas)
    : k_factor_(k_factor), k_(antennas) {
    if (!(k_factor >= 0.0)) throw validation_error("Rician K-factor must be >= 0");
    if (antennas < 1) throw validation_error("antenna count must be >= 1");
    // Poisson(nu) weights until the remaining tail is negligible.
    const double nu = k_ * k_factor_;
    double w = std::exp(-nu);
    double acc = w;
    weights_.push_back(w);
    for (int j = 1; j < 20000; ++j) {
        w *= nu / j;
        weights_.push_back(w);
        acc += w;
        if (j > nu && 1.0 - acc < 1e-17) break;
    }
}

double RicianSumDist::pdf(double t) const {
    if (t <= 0.0) {
        if (t < 0.0) return 0.0;
        return k_ == 1 ? (1.0 + k_factor_) * weights_[0] : 0.0;
    }
    const double s = 1.0 + k_factor_; // w = t.(K+1) is standard Gamma-mixture distributed
    const double w = t * s;
    const double lw = std::log(w);
    double p = 0.0;
    for (size_t j = 0; j < weights_.size(); ++j) {
        const double a = k_ + static_cast<double>(j);
        p += weights_[j] * std::exp((a - 1.0) * lw - w - std::lgamma(a));
    }
    return p * s;
}

double RicianSumDist::cdf(double t) const {
    if (t <= 0.0) return 0.0;
    const double w = t * (1.0 + k_factor_);
    double f = 0.0;
    for (size_t j = 0; j < weights_.size(); ++j)
        f += weights_[j] * specfun::gamma_p(k_ + static_cast<double>(j), w);
    return std::min(f, 1.0);
}

std::string RicianSumDist::describe() const {
    std::ostringstream os;
    os << "rician(K=" << k_factor_ << ", antennas=" << k_ << ")";
    return os.str();
}

WeibullGainDist::WeibullGainDist(double kappa) : kappa_(kappa) {
    if (!(kappa > 0.0)) throw validation_error("Weibull shape must be > 0");
    c_ = std::tgamma(1.0 + 2.0 / kappa_); // unit mean-square amplitude
}

double WeibullGainDist::pdf(double t) const {
    if (t <= 0.0) return 0.0;
    const double h = kappa_ / 2.0;
    const double u = std::pow(c_ * t, h);
    return h * c_ * std::pow(c_ * t, h - 1.0) * std::exp(-u);
}

double WeibullGainDist::cdf(double t) const {
    if (t <= 0.0) return 0.0;
    return -std::expm1(-std::pow(c_ * t, kappa_ / 2.0));
}

std::string WeibullGainDist::describe() const {
    std::ostringstream os;
    os << "weibull(kappa=" << kappa_ << ")";
    return os.str();
}

std::unique_ptr<LinkDist> link_gain_dist(const channel::FadingModel& fading, int antennas,
                                         const channel::Eigenspectrum* spectrum) {
    if (antennas < 1) throw validation_error("antenna count must be >= 1");
    if (spectrum && fading.family != channel::FadingFamily::Rayleigh && !spectrum->all_unit())
        throw validation_error("correlation spectra are only supported for Rayleigh links");
    switch (fading.family) {
    case channel::FadingFamily::Rayleigh:
        if (spectrum && !spectrum->all_unit())
            return std::make_unique<GenChi2Dist>(*spectrum);
        return std::make_unique<GammaDist>(antennas, 1.0);
    case channel::FadingFamily::Rician:
        return std::make_unique<RicianSumDist>(fading.param, antennas);
    case channel::FadingFamily::Nakagami:
        return std::make_unique<GammaDist>(antennas * fading.param, 1.0 / fading.param);
    case channel::FadingFamily::Weibull:
        if (antennas != 1)
            throw validation_error(
                "multi-antenna Weibull links have no closed-form gain distribution; "
                "use the Monte-Carlo path");
        return std::make_unique<WeibullGainDist>(fading.param);
    }
    throw validation_error("unknown fading family");
}

} // namespace relaydmt::dist
