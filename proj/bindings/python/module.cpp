/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/capacity.hpp"
#include "relaydmt/channel.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/mcsim.hpp"
#include "relaydmt/multirelay.hpp"
#include "relaydmt/outage.hpp"
#include "relaydmt/scenario.hpp"
#include "relaydmt/specfun.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace relaydmt;

namespace {

outage::Protocol parse_protocol(const std::string& text) {
    if (text == "af") return outage::Protocol::af;
    if (text == "df") return outage::Protocol::df;
    throw validation_error("protocol must be 'af' or 'df'");
}

channel::ChannelConfig make_config(int m, int n, double alpha, std::optional<double> rho_sr,
                                   std::optional<double> rho_rd,
                                   std::optional<Eigen::MatrixXcd> corr_sr,
                                   std::optional<Eigen::MatrixXcd> corr_rd,
                                   const std::string& fading_sr, const std::string& fading_rd,
                                   bool csi) {
    channel::ChannelConfig cfg;
    cfg.m = m;
    cfg.n = n;
    cfg.alpha = alpha;
    cfg.fading_sr = channel::FadingModel::parse(fading_sr);
    cfg.fading_rd = channel::FadingModel::parse(fading_rd);
    cfg.csi_at_source = csi;
    if (rho_sr && corr_sr) throw validation_error("rho_sr and corr_sr are mutually exclusive");
    if (rho_rd && corr_rd) throw validation_error("rho_rd and corr_rd are mutually exclusive");
    if (rho_sr) cfg.corr_sr = channel::CorrelationMatrix::exponential(m, *rho_sr);
    if (corr_sr) cfg.corr_sr = channel::CorrelationMatrix(*corr_sr);
    if (rho_rd) cfg.corr_rd = channel::CorrelationMatrix::exponential(n, *rho_rd);
    if (corr_rd) cfg.corr_rd = channel::CorrelationMatrix(*corr_rd);
    cfg.validate();
    return cfg;
}

multirelay::RelaySet make_set(const std::vector<channel::ChannelConfig>& links,
                              std::optional<double> direct_p) {
    multirelay::RelaySet set;
    set.links = links;
    set.direct_link_outage = direct_p;
    set.validate();
    return set;
}

} // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Outage, capacity and diversity-multiplexing analysis for MIMO relay links";

    py::register_exception<validation_error>(mod, "ValidationError", PyExc_ValueError);
    py::register_exception<range_error>(mod, "RangeError", PyExc_ValueError);
    py::register_exception<degeneracy_error>(mod, "DegeneracyError", PyExc_RuntimeError);
    py::register_exception<numeric_error>(mod, "NumericError", PyExc_RuntimeError);
    py::register_exception<insufficient_data_error>(mod, "InsufficientDataError",
                                                    PyExc_RuntimeError);

    py::class_<channel::ChannelConfig>(mod, "ChannelConfig")
        .def(py::init(&make_config), py::arg("m") = 1, py::arg("n") = 1, py::arg("alpha") = 0.0,
             py::arg("rho_sr") = py::none(), py::arg("rho_rd") = py::none(),
             py::arg("corr_sr") = py::none(), py::arg("corr_rd") = py::none(),
             py::arg("fading_sr") = "rayleigh", py::arg("fading_rd") = "rayleigh",
             py::arg("csi") = true)
        .def_readonly("m", &channel::ChannelConfig::m)
        .def_readonly("n", &channel::ChannelConfig::n)
        .def_readonly("alpha", &channel::ChannelConfig::alpha)
        .def_readonly("csi", &channel::ChannelConfig::csi_at_source)
        .def("__repr__", [](const channel::ChannelConfig& c) {
            return "ChannelConfig(m=" + std::to_string(c.m) + ", n=" + std::to_string(c.n) +
                   ", alpha=" + std::to_string(c.alpha) + ")";
        });

    py::class_<outage::LowOutageExpansion>(mod, "LowOutageExpansion")
        .def_readonly("leading_power", &outage::LowOutageExpansion::leading_power)
        .def_readonly("coeff_poly", &outage::LowOutageExpansion::coeff_poly)
        .def_readonly("coeff_log", &outage::LowOutageExpansion::coeff_log)
        .def_readonly("repetition", &outage::LowOutageExpansion::repetition)
        .def_readonly("validity_x_max", &outage::LowOutageExpansion::validity_x_max)
        .def("evaluate", &outage::LowOutageExpansion::evaluate, py::arg("x"));

    py::class_<capacity::OutageCapacity>(mod, "OutageCapacity")
        .def_readonly("x_eps", &capacity::OutageCapacity::x_eps)
        .def_readonly("c_exact", &capacity::OutageCapacity::c_exact)
        .def_readonly("c_high_snr", &capacity::OutageCapacity::c_high_snr)
        .def_readonly("c_low_snr", &capacity::OutageCapacity::c_low_snr);

    py::class_<capacity::SnrLossApprox>(mod, "SnrLossApprox")
        .def_readonly("x_eps_approx", &capacity::SnrLossApprox::x_eps_approx)
        .def_readonly("applicable", &capacity::SnrLossApprox::applicable);

    py::class_<capacity::DmtPoint>(mod, "DmtPoint")
        .def_readonly("r", &capacity::DmtPoint::r)
        .def_readonly("d", &capacity::DmtPoint::d)
        .def_readonly("gamma", &capacity::DmtPoint::gamma)
        .def_readonly("saturated", &capacity::DmtPoint::saturated);

    py::class_<mcsim::McEstimate>(mod, "McEstimate")
        .def_readonly("p_hat", &mcsim::McEstimate::p_hat)
        .def_readonly("trials", &mcsim::McEstimate::trials)
        .def_readonly("outage_events", &mcsim::McEstimate::outage_events)
        .def_readonly("std_err", &mcsim::McEstimate::std_err)
        .def_readonly("seed", &mcsim::McEstimate::seed)
        .def_readonly("partitions", &mcsim::McEstimate::partitions);

    py::class_<mcsim::SlopePoint>(mod, "SlopePoint")
        .def_readonly("gamma_db", &mcsim::SlopePoint::gamma_db)
        .def_readonly("p_hat", &mcsim::SlopePoint::p_hat)
        .def_readonly("outage_events", &mcsim::SlopePoint::outage_events)
        .def_readonly("qualified", &mcsim::SlopePoint::qualified);

    py::class_<mcsim::SlopeResult>(mod, "SlopeResult")
        .def_readonly("slope", &mcsim::SlopeResult::slope)
        .def_readonly("points", &mcsim::SlopeResult::points);

    mod.def(
        "outage_probability",
        [](double x, const channel::ChannelConfig& cfg, const std::string& protocol) {
            return outage::outage_analytic(x, cfg, parse_protocol(protocol));
        },
        py::arg("x"), py::arg("config"), py::arg("protocol") = "af",
        "Exact analytic outage probability at normalized threshold x.");

    mod.def("outage_iid", &outage::outage_af_iid, py::arg("x"), py::arg("alpha"), py::arg("m"),
            py::arg("n"), "Closed-form i.i.d. Rayleigh outage (amplify-and-forward).");

    mod.def(
        "outage_series",
        [](double x, double alpha, int m, int n) {
            return outage::outage_series_iid(x, alpha, m, n).value;
        },
        py::arg("x"), py::arg("alpha"), py::arg("m"), py::arg("n"),
        "Small-x series evaluation of the i.i.d. closed form (x <= 0.5).");

    mod.def(
        "low_outage_approx",
        [](double alpha, const channel::ChannelConfig& cfg) {
            if (cfg.iid_rayleigh()) return outage::lowout_iid(alpha, cfg.m, cfg.n);
            return outage::lowout_correlated(alpha, cfg.spectrum_sr(), cfg.spectrum_rd());
        },
        py::arg("alpha"), py::arg("config"),
        "Leading-order expansion P ~ (a + b ln(1/x)) x^p for a Rayleigh link.");

    mod.def(
        "outage_capacity",
        [](double eps, double snr, const channel::ChannelConfig& cfg,
           const std::string& protocol) {
            return capacity::outage_capacity(eps, snr, cfg, parse_protocol(protocol));
        },
        py::arg("eps"), py::arg("snr"), py::arg("config"), py::arg("protocol") = "af",
        "eps-outage capacity (nats/s/Hz) at linear SNR.");

    mod.def(
        "snr_loss_approx",
        [](double eps, const channel::ChannelConfig& cfg) {
            return capacity::snr_loss_approx(eps, cfg);
        },
        py::arg("eps"), py::arg("config"),
        "Closed-form approximation of the SNR loss factor x_eps.");

    mod.def(
        "finite_snr_dmt",
        [](double snr, double r, const channel::ChannelConfig& cfg, const std::string& protocol) {
            return capacity::finite_snr_dmt(snr, r, cfg, parse_protocol(protocol));
        },
        py::arg("snr"), py::arg("r"), py::arg("config"), py::arg("protocol") = "af",
        "Finite-SNR diversity gain at multiplexing gain r (snr linear, > 1).");

    mod.def(
        "asymptotic_dmt",
        [](const channel::ChannelConfig& cfg, double r) {
            return capacity::asymptotic_dmt(cfg, r);
        },
        py::arg("config"), py::arg("r"), "SNR-asymptotic diversity-multiplexing tradeoff.");

    mod.def(
        "mc_outage",
        [](const channel::ChannelConfig& cfg, double rate_nats, double snr, std::uint64_t trials,
           std::uint64_t seed, const std::string& protocol, int partitions) {
            const auto proto = parse_protocol(protocol) == outage::Protocol::af
                                   ? mcsim::McProtocol::af
                                   : mcsim::McProtocol::df;
            return mcsim::estimate_outage(cfg, rate_nats, snr, trials, seed, proto, partitions);
        },
        py::arg("config"), py::arg("rate_nats"), py::arg("snr"), py::arg("trials") = 1000000,
        py::arg("seed") = 12345, py::arg("protocol") = "af", py::arg("partitions") = 1,
        "Seeded Monte-Carlo outage estimate; bit-reproducible for fixed arguments.");

    mod.def(
        "mc_selection",
        [](const std::vector<channel::ChannelConfig>& links, double rate_nats, double snr,
           std::uint64_t trials, std::uint64_t seed, const std::string& protocol,
           std::optional<double> direct_p) {
            const auto set = make_set(links, direct_p);
            const auto proto = parse_protocol(protocol) == outage::Protocol::af
                                   ? mcsim::McProtocol::af_selection
                                   : mcsim::McProtocol::df_selection;
            return mcsim::estimate_outage(set, rate_nats, snr, trials, seed, proto);
        },
        py::arg("links"), py::arg("rate_nats"), py::arg("snr"), py::arg("trials") = 1000000,
        py::arg("seed") = 12345, py::arg("protocol") = "af", py::arg("direct_p") = py::none(),
        "Monte-Carlo best-relay selection outage over a set of links.");

    mod.def(
        "selection_outage",
        [](double x, const std::vector<channel::ChannelConfig>& links,
           std::optional<double> direct_p, const std::string& protocol) {
            const auto set = make_set(links, direct_p);
            return multirelay::relay_set_outage(x, set, parse_protocol(protocol));
        },
        py::arg("x"), py::arg("links"), py::arg("direct_p") = py::none(),
        py::arg("protocol") = "af",
        "Analytic selection outage: product of per-link outage probabilities.");

    mod.def(
        "diversity_slope",
        [](const channel::ChannelConfig& cfg, double r, const std::vector<double>& gamma_list_db,
           std::uint64_t trials, std::uint64_t seed, const std::string& protocol) {
            const auto proto = parse_protocol(protocol) == outage::Protocol::af
                                   ? mcsim::McProtocol::af
                                   : mcsim::McProtocol::df;
            return mcsim::diversity_slope(cfg, r, gamma_list_db, trials, seed, proto);
        },
        py::arg("config"), py::arg("r"), py::arg("gamma_list_db"), py::arg("trials") = 200000,
        py::arg("seed") = 12345, py::arg("protocol") = "af",
        "Empirical diversity: regression slope of -ln p_hat on ln snr.");

    mod.def(
        "bessel_k",
        [](int order, double x) { return specfun::bessel_k(order, x); }, py::arg("order"),
        py::arg("x"), "Modified Bessel function of the second kind, integer order.");

    mod.def(
        "load_scenario",
        [](const std::string& path) -> py::object {
            const auto sc = scenario::load_file(path);
            if (sc.single) return py::cast(*sc.single);
            py::list links;
            for (const auto& l : sc.relays->links) links.append(py::cast(l));
            py::dict d;
            d["links"] = links;
            d["direct_p"] = sc.relays->direct_link_outage
                                ? py::object(py::float_(*sc.relays->direct_link_outage))
                                : py::object(py::none());
            return d;
        },
        py::arg("path"),
        "Load a scenario file; returns a ChannelConfig or {'links': [...], 'direct_p': ...}.");

    mod.attr("__version__") = "0.1.0";
}
