/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_OUTAGE_HPP
#define RELAYDMT_OUTAGE_HPP

#include "relaydmt/channel.hpp"
#include "relaydmt/link_dist.hpp"

#include <vector>

namespace relaydmt::outage {

// Rate/SNR pair with the derived outage threshold x = (e^R - 1)/gamma.
// The only place this conversion happens.
struct OutageQuery {
    double rate_nats = 0.0;
    double snr_linear = 1.0;

    OutageQuery(double rate, double snr);
    double x() const { return x_; }

private:
    double x_;
};

// Ground-truth oracle: P = int_0^inf f_d(t) F_s(x(1+alpha t)/t) dt by adaptive
// quadrature. Valid for any fading family with a pdf/cdf pair.
double outage_af_quadrature(double x, double alpha, const dist::LinkDist& dist_s,
                            const dist::LinkDist& dist_d, double abs_tol = 1e-10);

// Closed form for i.i.d. Rayleigh links, m source and n destination antennas:
// finite double sum of Bessel K terms.
double outage_af_iid(double x, double alpha, int m, int n);

// Closed form for correlated Rayleigh links via both eigen-spectra: a double
// mixture of z.K_1(z) terms with partial-fraction weights; the relay-noise
// exponential carries the source-side eigenvalue. Repeated eigenvalues are
// handled by the perturbation policy (see degeneracy_policy below).
double outage_af_correlated(double x, double alpha, const channel::Eigenspectrum& eigs_sr,
                            const channel::Eigenspectrum& eigs_rd);

// Power-series coefficients of P around x = 0: term l contributes
// (f[l] + g[l].ln x) x^{l + leading_power}.
struct SeriesTable {
    int leading_power = 1;       // min(m, n)
    std::vector<double> f, g;    // indexed by l = 0..truncation_order
    int truncation_order() const { return static_cast<int>(f.size()) - 1; }
    double evaluate(double x) const;
};

struct SeriesResult {
    double value = 0.0;
    SeriesTable table;
};

// Small-x power series of the i.i.d. closed form; valid for x <= 0.5.
// Truncates when a term falls below 1e-12 of the partial sum or at l_max.
SeriesResult outage_series_iid(double x, double alpha, int m, int n, int l_max = 60);

// Leading-order expansion P ~ ((a + b ln(1/x)) x^p)^N; b nonzero only when
// the two antenna counts are equal, N > 1 only for identical-relay selection.
struct LowOutageExpansion {
    int leading_power = 1;   // p = min(m, n), per link
    double coeff_poly = 0.0; // a
    double coeff_log = 0.0;  // b
    int repetition = 1;      // N
    double validity_x_max = 0.1;
    double evaluate(double x) const;
};

LowOutageExpansion lowout_iid(double alpha, int m, int n);
LowOutageExpansion lowout_correlated(double alpha, const channel::Eigenspectrum& eigs_sr,
                                     const channel::Eigenspectrum& eigs_rd);

// Decode-and-forward: the weakest link dominates, relay noise plays no role.
// Computed as F_s + F_d - F_s.F_d to stay exact at tiny probabilities.
double outage_df(double x, const dist::LinkDist& dist_s, const dist::LinkDist& dist_d);

// Degeneracy policy for repeated eigenvalues: all-unit spectra take the i.i.d.
// route; otherwise each repeated cluster gets a symmetric, sum-preserving
// multiplicative perturbation of at most 1e-4 and the closed form is verified
// against the quadrature oracle to 1e-6 absolute.
channel::Eigenspectrum perturb_degenerate(const channel::Eigenspectrum& eigs);

// Exact analytic outage for a full configuration (dispatches i.i.d., correlated
// or general-fading quadrature; AF or DF). Switches to the series path when the
// closed form would lose the result to cancellation near P = 0.
enum class Protocol { af, df };
double outage_analytic(double x, const channel::ChannelConfig& cfg, Protocol proto = Protocol::af);

} // namespace relaydmt::outage

#endif
