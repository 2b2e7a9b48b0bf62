/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_CHANNEL_HPP
#define RELAYDMT_CHANNEL_HPP

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace relaydmt::channel {

// Unit-diagonal Hermitian PSD matrix describing antenna correlation of one link.
// Fading power is normalized out (trace = dim); the link budget carries it.
class CorrelationMatrix {
public:
    // Validates Hermitian symmetry, unit diagonal and positive semi-definiteness.
    explicit CorrelationMatrix(Eigen::MatrixXcd entries);

    static CorrelationMatrix identity(int dim);
    // 2x2 [[1, rho], [conj(rho), 1]], |rho| < 1.
    static CorrelationMatrix two_antenna(std::complex<double> rho);
    // dim x dim exponential profile, entry(i,j) = rho^{|i-j|}, |rho| < 1.
    static CorrelationMatrix exponential(int dim, double rho);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& entries() const { return mat_; }
    bool is_identity() const;

private:
    Eigen::MatrixXcd mat_;
};

// Eigenvalues of one correlation matrix, descending, zero eigenvalues pruned.
struct Eigenspectrum {
    std::vector<double> values;  // positive, descending
    bool distinct = true;        // min relative gap > distinct_gap

    static constexpr double distinct_gap = 1e-6;

    int size() const { return static_cast<int>(values.size()); }
    double sum() const;
    double product() const;

    // Build directly from raw eigenvalues (validated, sorted, pruned).
    static Eigenspectrum from_values(std::vector<double> vals);
    static Eigenspectrum all_ones(int dim);
    bool all_unit() const; // every eigenvalue equal to 1 within the gap threshold
};

Eigenspectrum eigenvalues(const CorrelationMatrix& R);

// Partial-fraction weights A_k = prod_{i != k} lambda_k / (lambda_k - lambda_i).
struct PartialFraction {
    std::vector<double> eigenvalues;
    std::vector<double> coefficients;
};

// Requires a distinct spectrum; throws degeneracy_error otherwise.
PartialFraction partial_fraction_coeffs(const Eigenspectrum& eigs);

// Density and CDF of g = |h|^2 for a zero-mean complex Gaussian vector with the
// given spectrum: exponential mixture when distinct, central chi-square when all
// eigenvalues are equal. Partially repeated spectra raise degeneracy_error.
double gen_chi2_pdf(double x, const Eigenspectrum& eigs);
double gen_chi2_cdf(double x, const Eigenspectrum& eigs);

// Factor F with F F^H = R for sampling correlated Gaussian vectors.
// Requires strictly positive definite R; rank-deficient input is rejected.
Eigen::MatrixXcd sampling_factor(const CorrelationMatrix& R);

// Fading families. Parameters are validated; mean power is 1 per antenna for
// every family so the SNR keeps its link-budget meaning.
enum class FadingFamily { Rayleigh, Rician, Nakagami, Weibull };

struct FadingModel {
    FadingFamily family = FadingFamily::Rayleigh;
    double param = 0.0; // Rician K >= 0, Nakagami m_f >= 0.5, Weibull kappa > 0

    static FadingModel rayleigh() { return {FadingFamily::Rayleigh, 0.0}; }
    static FadingModel rician(double k_factor);
    static FadingModel nakagami(double m_f);
    static FadingModel weibull(double kappa);
    static FadingModel parse(const std::string& text); // "rayleigh", "rician:5", ...

    // Exponent of the near-zero polynomial law of the |h|^2 density over k
    // antennas; equals the link's diversity order.
    double near_zero_exponent(int k) const;
    std::string describe() const;
    bool is_rayleigh() const { return family == FadingFamily::Rayleigh; }
};

// Full single-relay scenario: antenna counts, relay-noise ratio, per-link
// correlation and fading. The single source of truth for a configuration.
struct ChannelConfig {
    int m = 1; // source antennas (source-relay link)
    int n = 1; // destination antennas (relay-destination link)
    double alpha = 0.0;
    std::optional<CorrelationMatrix> corr_sr; // absent = identity
    std::optional<CorrelationMatrix> corr_rd;
    FadingModel fading_sr = FadingModel::rayleigh();
    FadingModel fading_rd = FadingModel::rayleigh();
    bool csi_at_source = true;

    void validate() const; // dimension and parameter checks

    Eigenspectrum spectrum_sr() const;
    Eigenspectrum spectrum_rd() const;
    bool iid_rayleigh() const; // both links Rayleigh with identity correlation

    static ChannelConfig make_iid(int m, int n, double alpha) {
        ChannelConfig cfg;
        cfg.m = m;
        cfg.n = n;
        cfg.alpha = alpha;
        return cfg;
    }
};

// Physical link budget: relay gain, path gains (dB) and noise/signal powers.
// Returns (alpha, gamma).
struct LinkBudget {
    double alpha;
    double gamma;
};
LinkBudget link_budget(double k_r_db, double g_rd_db, double g_sr_db,
                       double sigma_r2, double sigma_0_2, double sigma_x2);

} // namespace relaydmt::channel

#endif
