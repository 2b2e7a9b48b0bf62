/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/channel.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/specfun.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace relaydmt::channel {

namespace {

constexpr double herm_tol = 1e-12;
constexpr double eig_prune = 1e-12; // scaled by dim before pruning

} // namespace

CorrelationMatrix::CorrelationMatrix(Eigen::MatrixXcd entries) : mat_(std::move(entries)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() < 1)
        throw validation_error("correlation matrix must be square and non-empty");
    const int d = static_cast<int>(mat_.rows());
    for (int i = 0; i < d; ++i) {
        if (std::abs(mat_(i, i).imag()) > herm_tol || std::abs(mat_(i, i).real() - 1.0) > 1e-9)
            throw validation_error("correlation matrix diagonal must be 1");
        mat_(i, i) = 1.0;
        for (int j = i + 1; j < d; ++j) {
            if (std::abs(mat_(i, j) - std::conj(mat_(j, i))) > 1e-9)
                throw validation_error("correlation matrix must be Hermitian");
            mat_(j, i) = std::conj(mat_(i, j)); // enforce exactly
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(mat_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-9 * d)
        throw validation_error("correlation matrix must be positive semi-definite");
}

CorrelationMatrix CorrelationMatrix::identity(int dim) {
    if (dim < 1) throw validation_error("dimension must be >= 1");
    return CorrelationMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

CorrelationMatrix CorrelationMatrix::two_antenna(std::complex<double> rho) {
    if (std::abs(rho) >= 1.0)
        throw validation_error("correlation coefficient must satisfy |rho| < 1");
    Eigen::MatrixXcd r(2, 2);
    r << 1.0, rho, std::conj(rho), 1.0;
    return CorrelationMatrix(std::move(r));
}

CorrelationMatrix CorrelationMatrix::exponential(int dim, double rho) {
    if (dim < 1) throw validation_error("dimension must be >= 1");
    if (std::abs(rho) >= 1.0)
        throw validation_error("correlation coefficient must satisfy |rho| < 1");
    Eigen::MatrixXcd r(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            r(i, j) = std::pow(rho, std::abs(i - j));
    return CorrelationMatrix(std::move(r));
}

bool CorrelationMatrix::is_identity() const {
    const int d = dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (std::abs(mat_(i, j) - (i == j ? 1.0 : 0.0)) > herm_tol) return false;
    return true;
}

double Eigenspectrum::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

double Eigenspectrum::product() const {
    double p = 1.0;
    for (double v : values) p *= v;
    return p;
}

Eigenspectrum Eigenspectrum::from_values(std::vector<double> vals) {
    if (vals.empty()) throw validation_error("eigenspectrum must be non-empty");
    const int d = static_cast<int>(vals.size());
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    for (double v : vals)
        if (!(v > -1e-9 * d) || !std::isfinite(v))
            throw validation_error("eigenvalues must be finite and non-negative");
    Eigenspectrum out;
    const double cut = eig_prune * d;
    for (double v : vals)
        if (v > cut) out.values.push_back(v);
    if (out.values.empty()) throw validation_error("all eigenvalues are numerically zero");
    for (size_t i = 0; i + 1 < out.values.size(); ++i) {
        const double a = out.values[i], b = out.values[i + 1];
        if ((a - b) / a <= distinct_gap) { out.distinct = false; break; }
    }
    return out;
}

Eigenspectrum Eigenspectrum::all_ones(int dim) {
    Eigenspectrum out;
    out.values.assign(static_cast<size_t>(dim), 1.0);
    out.distinct = dim <= 1;
    return out;
}

bool Eigenspectrum::all_unit() const {
    for (double v : values)
        if (std::abs(v - 1.0) > distinct_gap) return false;
    return true;
}

Eigenspectrum eigenvalues(const CorrelationMatrix& R) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(R.entries(), Eigen::EigenvaluesOnly);
    std::vector<double> vals(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    for (double& v : vals) v = std::max(v, 0.0); // clamp tiny negative round-off
    return Eigenspectrum::from_values(std::move(vals));
}

PartialFraction partial_fraction_coeffs(const Eigenspectrum& eigs) {
    if (!eigs.distinct)
        throw degeneracy_error("partial-fraction expansion needs distinct eigenvalues");
    PartialFraction pf;
    pf.eigenvalues = eigs.values;
    const int c = eigs.size();
    pf.coefficients.resize(static_cast<size_t>(c));
    for (int k = 0; k < c; ++k) {
        double a = 1.0;
        for (int i = 0; i < c; ++i)
            if (i != k) a *= pf.eigenvalues[k] / (pf.eigenvalues[k] - pf.eigenvalues[i]);
        pf.coefficients[static_cast<size_t>(k)] = a;
    }
    return pf;
}

// g = sum_k lambda_k |z_k|^2 with z_k ~ CN(0,1): exponential mixture when the
// lambda_k are distinct, Gamma(c, lambda) when all equal.
double gen_chi2_pdf(double x, const Eigenspectrum& eigs) {
    if (x < 0.0) return 0.0;
    const int c = eigs.size();
    if (c == 1 || eigs.values.front() - eigs.values.back() <=
                      Eigenspectrum::distinct_gap * eigs.values.front()) {
        const double lam = eigs.sum() / c; // common eigenvalue
        double logp = -x / lam - std::lgamma(c) - c * std::log(lam);
        if (x > 0.0) logp += (c - 1) * std::log(x);
        else if (c > 1) return 0.0;
        return std::exp(logp);
    }
    if (!eigs.distinct)
        throw degeneracy_error("mixture density needs fully distinct eigenvalues");
    const PartialFraction pf = partial_fraction_coeffs(eigs);
    double p = 0.0;
    for (int k = 0; k < c; ++k)
        p += pf.coefficients[k] / pf.eigenvalues[k] * std::exp(-x / pf.eigenvalues[k]);
    return p;
}

double gen_chi2_cdf(double x, const Eigenspectrum& eigs) {
    if (x <= 0.0) return 0.0;
    const int c = eigs.size();
    if (c == 1 || eigs.values.front() - eigs.values.back() <=
                      Eigenspectrum::distinct_gap * eigs.values.front()) {
        const double lam = eigs.sum() / c;
        return specfun::gamma_p(c, x / lam);
    }
    if (!eigs.distinct)
        throw degeneracy_error("mixture CDF needs fully distinct eigenvalues");
    const PartialFraction pf = partial_fraction_coeffs(eigs);
    double f = 0.0;
    for (int k = 0; k < c; ++k)
        f += pf.coefficients[k] * -std::expm1(-x / pf.eigenvalues[k]);
    // Mixture coefficients alternate in sign; clamp round-off at the edges.
    return std::clamp(f, 0.0, 1.0);
}

Eigen::MatrixXcd sampling_factor(const CorrelationMatrix& R) {
    const int d = R.dim();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(R.entries(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= eig_prune * d)
        throw validation_error("sampling requires a strictly positive definite correlation");
    Eigen::LLT<Eigen::MatrixXcd> llt(R.entries());
    if (llt.info() != Eigen::Success)
        throw numeric_error("Cholesky factorization failed");
    Eigen::MatrixXcd f = llt.matrixL();
    if (((f * f.adjoint()) - R.entries()).norm() > 1e-9 * d)
        throw numeric_error("sampling factor does not reproduce the correlation");
    return f;
}

FadingModel FadingModel::rician(double k_factor) {
    if (!(k_factor >= 0.0) || !std::isfinite(k_factor))
        throw validation_error("Rician K-factor must be finite and >= 0");
    return {FadingFamily::Rician, k_factor};
}

FadingModel FadingModel::nakagami(double m_f) {
    if (!(m_f >= 0.5) || !std::isfinite(m_f))
        throw validation_error("Nakagami shape must be finite and >= 0.5");
    return {FadingFamily::Nakagami, m_f};
}

FadingModel FadingModel::weibull(double kappa) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw validation_error("Weibull shape must be finite and > 0");
    return {FadingFamily::Weibull, kappa};
}

FadingModel FadingModel::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    double param = 0.0;
    bool have_param = false;
    if (colon != std::string::npos) {
        try {
            size_t used = 0;
            param = std::stod(text.substr(colon + 1), &used);
            have_param = used == text.size() - colon - 1;
        } catch (const std::exception&) {
            have_param = false;
        }
        if (!have_param)
            throw validation_error("bad fading parameter in '" + text + "'");
    }
    if (name == "rayleigh") {
        if (have_param) throw validation_error("rayleigh takes no parameter");
        return rayleigh();
    }
    if (name == "rician") {
        if (!have_param) throw validation_error("rician needs a K-factor, e.g. rician:5");
        return rician(param);
    }
    if (name == "nakagami") {
        if (!have_param) throw validation_error("nakagami needs a shape, e.g. nakagami:2");
        return nakagami(param);
    }
    if (name == "weibull") {
        if (!have_param) throw validation_error("weibull needs a shape, e.g. weibull:3");
        return weibull(param);
    }
    throw validation_error("unknown fading family '" + name + "'");
}

double FadingModel::near_zero_exponent(int k) const {
    switch (family) {
    case FadingFamily::Rayleigh:
    case FadingFamily::Rician: // LOS shifts the mean, not the zero-range law
        return static_cast<double>(k);
    case FadingFamily::Nakagami:
        return k * param;
    case FadingFamily::Weibull:
        return k * param / 2.0;
    }
    throw validation_error("unknown fading family");
}

std::string FadingModel::describe() const {
    std::ostringstream os;
    switch (family) {
    case FadingFamily::Rayleigh: return "rayleigh";
    case FadingFamily::Rician: os << "rician:" << param; break;
    case FadingFamily::Nakagami: os << "nakagami:" << param; break;
    case FadingFamily::Weibull: os << "weibull:" << param; break;
    }
    return os.str();
}

void ChannelConfig::validate() const {
    if (m < 1 || n < 1) throw validation_error("antenna counts must be >= 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw validation_error("relay noise ratio alpha must be finite and >= 0");
    if (corr_sr && corr_sr->dim() != m)
        throw validation_error("source correlation matrix must be m x m");
    if (corr_rd && corr_rd->dim() != n)
        throw validation_error("destination correlation matrix must be n x n");
    if (corr_sr && !fading_sr.is_rayleigh() && !corr_sr->is_identity())
        throw validation_error("antenna correlation is only supported for Rayleigh links");
    if (corr_rd && !fading_rd.is_rayleigh() && !corr_rd->is_identity())
        throw validation_error("antenna correlation is only supported for Rayleigh links");
}

Eigenspectrum ChannelConfig::spectrum_sr() const {
    return corr_sr ? eigenvalues(*corr_sr) : Eigenspectrum::all_ones(m);
}

Eigenspectrum ChannelConfig::spectrum_rd() const {
    return corr_rd ? eigenvalues(*corr_rd) : Eigenspectrum::all_ones(n);
}

bool ChannelConfig::iid_rayleigh() const {
    if (!fading_sr.is_rayleigh() || !fading_rd.is_rayleigh()) return false;
    if (corr_sr && !corr_sr->is_identity()) return false;
    if (corr_rd && !corr_rd->is_identity()) return false;
    return true;
}

LinkBudget link_budget(double k_r_db, double g_rd_db, double g_sr_db,
                       double sigma_r2, double sigma_0_2, double sigma_x2) {
    if (!(sigma_0_2 > 0.0))
        throw validation_error("destination noise power must be > 0");
    if (!(sigma_r2 >= 0.0) || !(sigma_x2 >= 0.0))
        throw validation_error("relay noise and signal powers must be >= 0");
    const double k_r = std::pow(10.0, k_r_db / 10.0);
    const double g_rd = std::pow(10.0, g_rd_db / 10.0);
    const double g_sr = std::pow(10.0, g_sr_db / 10.0);
    LinkBudget lb;
    lb.alpha = k_r * g_rd * sigma_r2 / sigma_0_2;
    lb.gamma = k_r * g_rd * g_sr * sigma_x2 / sigma_0_2;
    return lb;
}

} // namespace relaydmt::channel
