/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/outage.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/quadrature.hpp"
#include "relaydmt/specfun.hpp"

#include <algorithm>
#include <cmath>

namespace relaydmt::outage {

using specfun::factorial;

namespace {

// Closed form drops below this: 1 - sum loses the value to cancellation, so
// the dispatcher reroutes to a direct small-x summation.
constexpr double cancellation_floor = 1e-10;

// Point beyond which a link's CDF is 1 to double precision (with headroom).
double upper_tail_point(const dist::LinkDist& d, double start) {
    double t = std::max(start, 1.0);
    while (d.cdf(t) < 1.0 - 1e-14 && t < 1e15) t *= 2.0;
    return 4.0 * t;
}

void check_xa(double x, double alpha) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw validation_error("threshold x must be finite and >= 0");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw validation_error("relay noise ratio alpha must be finite and >= 0");
}

} // namespace

OutageQuery::OutageQuery(double rate, double snr) : rate_nats(rate), snr_linear(snr) {
    if (!(rate >= 0.0) || !std::isfinite(rate))
        throw validation_error("rate must be finite and >= 0");
    if (!(snr > 0.0) || !std::isfinite(snr))
        throw validation_error("SNR must be finite and > 0");
    x_ = std::expm1(rate) / snr;
}

double outage_af_quadrature(double x, double alpha, const dist::LinkDist& dist_s,
                            const dist::LinkDist& dist_d, double abs_tol) {
    check_xa(x, alpha);
    if (x == 0.0) return 0.0;

    // P = int_0^inf f_d(t).F_s(x(1+alpha t)/t) dt, in three pieces:
    //   [0, s0]   F_s is 1 to machine precision there -> F_d(s0) exactly;
    //   [s0, T]   direct panel;
    //   [T, inf)  u = 1/t, integrand f_d(1/u).F_s(x(u+alpha))/u^2 on (0, 1/T].
    // The first piece also removes the t -> 0 density singularity of
    // sub-unit-shape links from the quadrature's path.
    const double tail_s = upper_tail_point(dist_s, dist_s.mean());
    double s0 = x / tail_s;
    double t_split = std::max(1.0, dist_d.mean());
    if (s0 >= t_split / 2.0) t_split = 4.0 * s0;

    const double head = dist_d.cdf(s0);
    const auto mid = quad::integrate(
        [&](double t) { return dist_d.pdf(t) * dist_s.cdf(x * (1.0 + alpha * t) / t); },
        s0, t_split, abs_tol / 2.0, 1e-9);
    const auto tail = quad::integrate(
        [&](double u) {
            const double fd = dist_d.pdf(1.0 / u);
            if (fd == 0.0) return 0.0;
            return fd / (u * u) * dist_s.cdf(x * (u + alpha));
        },
        0.0, 1.0 / t_split, abs_tol / 2.0, 1e-9);

    double p = head + mid.value + tail.value;
    if (p < 0.0) {
        if (p < -10.0 * abs_tol) throw numeric_error("quadrature produced a negative probability");
        p = 0.0;
    }
    return std::min(p, 1.0);
}

double outage_af_iid(double x, double alpha, int m, int n) {
    check_xa(x, alpha);
    if (m < 1 || n < 1) throw validation_error("antenna counts must be >= 1");
    if (x == 0.0) return 0.0;

    // P = 1 - (2 e^{-alpha x}/(n-1)!) sum_{k<m} sum_{i<=k}
    //         alpha^i x^{(k+i+n)/2} / (i!(k-i)!) K_{|n+i-k|}(2 sqrt x).
    // All terms positive; each is assembled in log space to dodge spurious
    // under/overflow of the x-power against the Bessel growth.
    const double lx = std::log(x);
    const double la = alpha > 0.0 ? std::log(alpha) : 0.0;
    const double root = 2.0 * std::sqrt(x);
    double s = 0.0;
    for (int k = 0; k < m; ++k) {
        for (int i = 0; i <= k; ++i) {
            if (alpha == 0.0 && i > 0) continue;
            const double kv = specfun::bessel_k(std::abs(n + i - k), root);
            if (!std::isfinite(kv))
                throw numeric_error("Bessel overflow; closed form outside double range");
            const double lt = i * la + 0.5 * (k + i + n) * lx -
                              std::lgamma(i + 1.0) - std::lgamma(k - i + 1.0);
            s += std::exp(lt) * kv;
        }
    }
    const double p = 1.0 - 2.0 * std::exp(-alpha * x - std::lgamma(n)) * s;
    if (!std::isfinite(p) || p < -1e-9 || p > 1.0 + 1e-9)
        throw numeric_error("closed-form outage left [0,1]");
    return std::clamp(p, 0.0, 1.0);
}

channel::Eigenspectrum perturb_degenerate(const channel::Eigenspectrum& eigs) {
    const auto& v = eigs.values;
    std::vector<double> out(v.begin(), v.end());
    size_t i = 0;
    while (i < out.size()) {
        size_t j = i;
        while (j + 1 < out.size() &&
               (v[j] - v[j + 1]) / v[j] <= channel::Eigenspectrum::distinct_gap)
            ++j;
        const size_t c = j - i + 1;
        if (c >= 2) {
            double mean = 0.0;
            for (size_t t = i; t <= j; ++t) mean += v[t];
            mean /= static_cast<double>(c);
            // Symmetric, sum-preserving spread of at most +-1e-4 per value.
            const double step = 2e-4 / static_cast<double>(c - 1);
            for (size_t t = 0; t < c; ++t) {
                const double delta = (static_cast<double>(c - 1) / 2.0 - static_cast<double>(t)) * step;
                out[i + t] = mean * (1.0 + delta);
            }
        }
        i = j + 1;
    }
    auto res = channel::Eigenspectrum::from_values(std::move(out));
    if (!res.distinct)
        throw degeneracy_error("eigenvalue perturbation failed to separate the spectrum");
    return res;
}

namespace {

double eq_mixture(double x, double alpha, const channel::PartialFraction& pf_s,
                  const channel::PartialFraction& pf_d) {
    double s = 0.0;
    for (size_t k = 0; k < pf_s.eigenvalues.size(); ++k) {
        const double lam = pf_s.eigenvalues[k];
        const double ek = std::exp(-alpha * x / lam);
        for (size_t j = 0; j < pf_d.eigenvalues.size(); ++j) {
            const double eta = pf_d.eigenvalues[j];
            const double z = std::sqrt(4.0 * x / (lam * eta));
            const double zk1 = z * specfun::bessel_k(1, z);
            s += pf_s.coefficients[k] * pf_d.coefficients[j] * ek * zk1;
        }
    }
    return 1.0 - s;
}

} // namespace

double outage_af_correlated(double x, double alpha, const channel::Eigenspectrum& eigs_sr,
                            const channel::Eigenspectrum& eigs_rd) {
    check_xa(x, alpha);
    if (eigs_sr.size() < 1 || eigs_rd.size() < 1)
        throw validation_error("eigenspectra must be non-empty");
    if (x == 0.0) return 0.0;
    if (eigs_sr.all_unit() && eigs_rd.all_unit())
        return outage_af_iid(x, alpha, eigs_sr.size(), eigs_rd.size());

    const bool perturbed = !eigs_sr.distinct || !eigs_rd.distinct;
    const auto sr = eigs_sr.distinct ? eigs_sr : perturb_degenerate(eigs_sr);
    const auto rd = eigs_rd.distinct ? eigs_rd : perturb_degenerate(eigs_rd);

    const auto pf_s = channel::partial_fraction_coeffs(sr);
    const auto pf_d = channel::partial_fraction_coeffs(rd);
    double p = eq_mixture(x, alpha, pf_s, pf_d);

    if (perturbed) {
        // The perturbed spectrum is the model actually evaluated; make sure the
        // near-degenerate partial fractions did not destroy the result.
        const dist::GenChi2Dist ds(sr), dd(rd);
        const double q = outage_af_quadrature(x, alpha, ds, dd, 1e-10);
        if (std::abs(p - q) > 1e-6)
            throw degeneracy_error("perturbed closed form disagrees with the quadrature oracle");
    }
    if (!std::isfinite(p) || p < -1e-7 || p > 1.0 + 1e-7)
        throw numeric_error("correlated closed-form outage left [0,1]");
    return std::clamp(p, 0.0, 1.0);
}

double LowOutageExpansion::evaluate(double x) const {
    if (x == 0.0) return 0.0;
    const double one_link = (coeff_poly + coeff_log * std::log(1.0 / x)) *
                            std::pow(x, static_cast<double>(leading_power));
    return repetition == 1 ? one_link : std::pow(one_link, repetition);
}

LowOutageExpansion lowout_iid(double alpha, int m, int n) {
    if (m < 1 || n < 1) throw validation_error("antenna counts must be >= 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw validation_error("relay noise ratio alpha must be finite and >= 0");
    LowOutageExpansion lo;
    lo.leading_power = std::min(m, n);
    if (m < n) {
        double a = 0.0;
        for (int k = 0; k <= m; ++k)
            a += std::pow(alpha, k) * factorial(n - m + k - 1) /
                 (factorial(m - k) * factorial(k));
        lo.coeff_poly = a / factorial(n - 1);
    } else if (m > n) {
        lo.coeff_poly = factorial(m - n - 1) / (factorial(n) * factorial(m - 1));
    } else {
        const double bm = 1.0 / m + 2.0 * specfun::digamma_int(1);
        double a = bm / factorial(m);
        for (int k = 1; k <= m; ++k)
            a += std::pow(alpha, k) / (factorial(m - k) * factorial(k));
        lo.coeff_poly = a / factorial(m - 1);
        lo.coeff_log = 1.0 / (factorial(m) * factorial(m - 1));
        // Keep the evaluation nonneg: need a + b ln(1/x) >= 0.
        lo.validity_x_max = std::min(0.1, std::exp(lo.coeff_poly / lo.coeff_log));
    }
    return lo;
}

namespace {

// D(k, l, alpha) helper of the correlated leading-order coefficients.
double d_coef(int k, int l, double alpha) {
    const double sgn = ((l - k) % 2 == 0) ? 1.0 : -1.0;
    return sgn * std::pow(alpha, l - k) /
           (factorial(l - k) * factorial(k - 1) * factorial(k));
}

} // namespace

LowOutageExpansion lowout_correlated(double alpha, const channel::Eigenspectrum& eigs_sr,
                                     const channel::Eigenspectrum& eigs_rd) {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw validation_error("relay noise ratio alpha must be finite and >= 0");
    if (eigs_sr.all_unit() && eigs_rd.all_unit())
        return lowout_iid(alpha, eigs_sr.size(), eigs_rd.size());
    const auto sr = eigs_sr.distinct ? eigs_sr : perturb_degenerate(eigs_sr);
    const auto rd = eigs_rd.distinct ? eigs_rd : perturb_degenerate(eigs_rd);
    const int m = sr.size(), n = rd.size();
    const auto A = channel::partial_fraction_coeffs(sr);
    const auto B = channel::partial_fraction_coeffs(rd);
    const double det_s = sr.product(), det_d = rd.product();

    // Destination-spectrum log sum that feeds the m <= n coefficients.
    const auto dest_log_sum = [&] {
        double s = 0.0;
        for (int q = 1; q <= m; ++q)
            for (int i = 0; i < n; ++i)
                s += B.coefficients[i] * std::log(B.eigenvalues[i]) /
                     std::pow(B.eigenvalues[i], q) * d_coef(q, m, alpha);
        return s;
    };
    const double sign_m1 = (m % 2 == 0) ? -1.0 : 1.0; // (-1)^{m+1}

    LowOutageExpansion lo;
    lo.leading_power = std::min(m, n);
    if (m < n) {
        lo.coeff_poly = std::pow(alpha, m) / (factorial(m) * det_s) +
                        sign_m1 / det_s * dest_log_sum();
    } else if (m > n) {
        double s = 0.0;
        for (int k = 0; k < m; ++k)
            s += A.coefficients[k] * std::log(A.eigenvalues[k]) /
                 std::pow(A.eigenvalues[k], n);
        const double sign_n1 = (n % 2 == 0) ? -1.0 : 1.0;
        lo.coeff_poly = sign_n1 / (factorial(n) * factorial(n - 1) * det_d) * s;
    } else {
        double src_log = 0.0;
        for (int k = 0; k < m; ++k)
            src_log += A.coefficients[k] * std::log(A.eigenvalues[k]) /
                       std::pow(A.eigenvalues[k], m);
        const double b3 = 1.0 / (factorial(m) * factorial(m - 1) * det_s * det_d);
        const double psi_pair_m = specfun::psi_pair(m);
        lo.coeff_poly = std::pow(alpha, m) / (factorial(m) * det_s) +
                        sign_m1 / (factorial(m) * factorial(m - 1) * det_d) * src_log +
                        b3 * psi_pair_m + sign_m1 / det_s * dest_log_sum();
        lo.coeff_log = b3;
        lo.validity_x_max = std::min(0.1, std::exp(lo.coeff_poly / lo.coeff_log));
    }
    return lo;
}

double outage_df(double x, const dist::LinkDist& dist_s, const dist::LinkDist& dist_d) {
    if (!(x >= 0.0) || !std::isfinite(x))
        throw validation_error("threshold x must be finite and >= 0");
    if (x == 0.0) return 0.0;
    const double fs = dist_s.cdf(x), fd = dist_d.cdf(x);
    return fs + fd - fs * fd;
}

namespace {

double outage_af_iid_robust(double x, double alpha, int m, int n) {
    const double p = outage_af_iid(x, alpha, m, n);
    // Below the floor the 1-sum form has no significant digits left; the
    // series sums the same quantity directly and keeps full relative accuracy.
    if (p >= cancellation_floor || x == 0.0 || x > 0.5) return p;
    return outage_series_iid(x, alpha, m, n).value;
}

} // namespace

double outage_analytic(double x, const channel::ChannelConfig& cfg, Protocol proto) {
    cfg.validate();
    check_xa(x, cfg.alpha);
    if (proto == Protocol::df) {
        const auto sr = cfg.spectrum_sr();
        const auto rd = cfg.spectrum_rd();
        const auto ds = dist::link_gain_dist(cfg.fading_sr, cfg.m, &sr);
        const auto dd = dist::link_gain_dist(cfg.fading_rd, cfg.n, &rd);
        return outage_df(x, *ds, *dd);
    }
    if (cfg.iid_rayleigh()) return outage_af_iid_robust(x, cfg.alpha, cfg.m, cfg.n);
    if (cfg.fading_sr.is_rayleigh() && cfg.fading_rd.is_rayleigh()) {
        const auto sr = cfg.spectrum_sr();
        const auto rd = cfg.spectrum_rd();
        if (sr.all_unit() && rd.all_unit())
            return outage_af_iid_robust(x, cfg.alpha, cfg.m, cfg.n);
        const double p = outage_af_correlated(x, cfg.alpha, sr, rd);
        // Near the cancellation floor the mixture cannot resolve P; the
        // leading-order expansion is accurate to O(x) relative there.
        if (p < cancellation_floor && x > 0.0)
            return lowout_correlated(cfg.alpha, sr, rd).evaluate(x);
        return p;
    }
    const auto sr = cfg.spectrum_sr();
    const auto rd = cfg.spectrum_rd();
    const auto ds = dist::link_gain_dist(cfg.fading_sr, cfg.m, &sr);
    const auto dd = dist::link_gain_dist(cfg.fading_rd, cfg.n, &rd);
    const double p = outage_af_quadrature(x, cfg.alpha, *ds, *dd);
    if (p < 1e-8 && x > 0.0)
        throw numeric_error("outage below the quadrature oracle's resolution; "
                            "no closed form exists for this fading family");
    return p;
}

} // namespace relaydmt::outage
