/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_MCSIM_HPP
#define RELAYDMT_MCSIM_HPP

#include "relaydmt/channel.hpp"
#include "relaydmt/multirelay.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace relaydmt::mcsim {

// Counter-based generator: every draw is a pure function of (seed, trial,
// counter), so serial and partitioned runs produce bit-identical results.
inline constexpr std::uint64_t golden_step = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; the documented mixing function of the whole simulator.
std::uint64_t mix64(std::uint64_t v);

class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t trial)
        : key_(mix64(seed + (trial + 1) * golden_step)) {}

    // Uniform on (0, 1); never returns an endpoint.
    double uniform01() {
        const std::uint64_t z = mix64(key_ + (++counter_) * golden_step);
        return static_cast<double>(z >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }
    // Box-Muller pair of independent standard normals; consumes two uniforms.
    std::pair<double, double> normal_pair();
    // CN(0, 1): unit-power circular-symmetric complex Gaussian.
    std::complex<double> complex_normal();
    // Gamma(shape, 1) via rejection; draw count varies per call.
    double gamma_draw(double shape);

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct McEstimate {
    double p_hat = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t outage_events = 0;
    double std_err = 0.0; // sqrt(p_hat (1 - p_hat) / trials)
    std::uint64_t seed = 0;
    int partitions = 1;
};

enum class McProtocol { af, df, af_selection, df_selection };

// One channel vector of length k with unit mean power per antenna.
// Rayleigh accepts an optional correlation factor F (h = F.u); other families
// are i.i.d. across antennas, amplitude law per family, uniform phase.
Eigen::VectorXcd draw_channel(const channel::FadingModel& model, int k,
                              const Eigen::MatrixXcd* factor, RngStream& rng);

// Effective relayed SNR for one draw; the no-CSI penalty divides by the
// source antenna count.
double snr_af(const Eigen::VectorXcd& h_sr, const Eigen::VectorXcd& h_rd, double alpha,
              double gamma, bool csi_at_source);

McEstimate estimate_outage(const channel::ChannelConfig& cfg, double rate_nats, double gamma,
                           std::uint64_t trials, std::uint64_t seed,
                           McProtocol proto = McProtocol::af, int partitions = 1);

McEstimate estimate_outage(const multirelay::RelaySet& set, double rate_nats, double gamma,
                           std::uint64_t trials, std::uint64_t seed, McProtocol proto,
                           int partitions = 1);

struct SlopePoint {
    double gamma_db = 0.0;
    double p_hat = 0.0;
    std::uint64_t outage_events = 0;
    bool qualified = false; // at least 100 outage events
};

struct SlopeResult {
    double slope = 0.0;
    std::vector<SlopePoint> points;
};

// Empirical diversity: least-squares slope of -ln p_hat against ln gamma over
// the SNR points with enough outage events; the rate tracks R = ln(1+gamma^r).
// Fewer than 4 qualifying points raise insufficient_data_error.
SlopeResult diversity_slope(const channel::ChannelConfig& cfg, double r,
                            const std::vector<double>& gamma_list_db, std::uint64_t trials,
                            std::uint64_t seed, McProtocol proto = McProtocol::af);

} // namespace relaydmt::mcsim

#endif
