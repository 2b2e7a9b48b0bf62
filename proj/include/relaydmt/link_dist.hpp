/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_LINK_DIST_HPP
#define RELAYDMT_LINK_DIST_HPP

#include "relaydmt/channel.hpp"

#include <memory>
#include <string>
#include <vector>

namespace relaydmt::dist {

// Distribution of a link's combined power gain g = |h|^2 over its antennas.
// Every implementation has unit mean power per antenna.
class LinkDist {
public:
    virtual ~LinkDist() = default;
    virtual double pdf(double t) const = 0;
    virtual double cdf(double t) const = 0;
    virtual double mean() const = 0;
    // e such that cdf(t) ~ c.t^e as t -> 0; the link's diversity order.
    virtual double near_zero_exponent() const = 0;
    virtual std::string describe() const = 0;
};

// Gamma(shape, scale). Covers Rayleigh over k antennas (shape k, scale 1) and
// Nakagami-m_f over k antennas (shape k.m_f, scale 1/m_f).
class GammaDist final : public LinkDist {
public:
    GammaDist(double shape, double scale);
    double pdf(double t) const override;
    double cdf(double t) const override;
    double mean() const override { return shape_ * scale_; }
    double near_zero_exponent() const override { return shape_; }
    std::string describe() const override;

private:
    double shape_, scale_, log_norm_;
};

// Correlated Rayleigh link: quadratic form with the given eigenvalue spectrum.
class GenChi2Dist final : public LinkDist {
public:
    explicit GenChi2Dist(channel::Eigenspectrum eigs);
    double pdf(double t) const override;
    double cdf(double t) const override;
    double mean() const override { return eigs_.sum(); }
    double near_zero_exponent() const override { return eigs_.size(); }
    std::string describe() const override;

private:
    channel::Eigenspectrum eigs_;
};

// Rician over k antennas: noncentral quadratic form, expanded as a Poisson
// mixture of Gamma(k + j, 1) in units of 1/(K+1).
class RicianSumDist final : public LinkDist {
public:
    RicianSumDist(double k_factor, int antennas);
    double pdf(double t) const override;
    double cdf(double t) const override;
    double mean() const override { return k_; }
    double near_zero_exponent() const override { return k_; }
    std::string describe() const override;

private:
    double k_factor_;
    int k_;
    std::vector<double> weights_; // Poisson(nu = k.K) weights, truncated
};

// Weibull power gain for a single antenna: cdf = 1 - exp(-(c.t)^{kappa/2})
// with c = Gamma(1 + 2/kappa) so that the mean is 1.
class WeibullGainDist final : public LinkDist {
public:
    explicit WeibullGainDist(double kappa);
    double pdf(double t) const override;
    double cdf(double t) const override;
    double mean() const override { return 1.0; }
    double near_zero_exponent() const override { return kappa_ / 2.0; }
    std::string describe() const override;

private:
    double kappa_, c_;
};

// Distribution of one link's gain given its fading model, antenna count and
// (Rayleigh only) correlation spectrum. Multi-antenna Weibull has no closed
// form and is rejected; the Monte-Carlo path covers it.
std::unique_ptr<LinkDist> link_gain_dist(const channel::FadingModel& fading, int antennas,
                                         const channel::Eigenspectrum* spectrum = nullptr);

} // namespace relaydmt::dist

#endif
