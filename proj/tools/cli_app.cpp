/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "cli_app.hpp"

#include "figures.hpp"
#include "format.hpp"
#include "relaydmt/capacity.hpp"
#include "relaydmt/channel.hpp"
#include "relaydmt/errors.hpp"
#include "relaydmt/mcsim.hpp"
#include "relaydmt/multirelay.hpp"
#include "relaydmt/outage.hpp"
#include "relaydmt/scenario.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace relaydmt::cli {

namespace {

constexpr double ln2 = 0.69314718055994530942;
constexpr double nan_v = std::numeric_limits<double>::quiet_NaN();

// Channel flags shared by every scenario-driven subcommand.
struct ChannelFlags {
    int m = 1;
    int n = 1;
    double alpha = 0.0;
    double rho_sr = 0.0;
    double rho_rd = 0.0;
    std::string corr_file;
    std::string fading_sr = "rayleigh";
    std::string fading_rd = "rayleigh";
    bool no_csi = false;
};

struct OutputFlags {
    std::string out_path;
    std::string format = "csv";
};

void add_channel_flags(CLI::App* cmd, ChannelFlags& f) {
    cmd->add_option("--m", f.m, "source antennas (source-relay link)");
    cmd->add_option("--n", f.n, "destination antennas (relay-destination link)");
    cmd->add_option("--alpha", f.alpha, "relay-noise ratio");
    cmd->add_option("--rho-sr", f.rho_sr, "exponential correlation on the source-relay link");
    cmd->add_option("--rho-rd", f.rho_rd, "exponential correlation on the relay-destination link");
    cmd->add_option("--corr-file", f.corr_file, "scenario file (JSON schema; excludes inline flags)");
    cmd->add_option("--fading-sr", f.fading_sr, "fading family, e.g. rayleigh, rician:5");
    cmd->add_option("--fading-rd", f.fading_rd, "fading family for the second hop");
    cmd->add_flag("--no-csi", f.no_csi, "drop source CSI (costs the m-fold SNR gain)");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
    cmd->add_option("--out", f.out_path, "output path (default: stdout)");
    cmd->add_option("--format", f.format, "output format (csv)");
}

outage::Protocol parse_protocol(const std::string& text) {
    if (text == "af") return outage::Protocol::af;
    if (text == "df") return outage::Protocol::df;
    throw validation_error("--protocol must be af or df");
}

// Build the scenario from flags or file; applies the single-antenna rho remap
// so `--rho-rd 0.5` on an (m>1) x 1 link lands on the only correlatable side.
scenario::Scenario resolve_scenario(const CLI::App* cmd, const ChannelFlags& f,
                                    std::vector<std::string>& notes) {
    const bool inline_given = cmd->count("--m") || cmd->count("--n") || cmd->count("--alpha") ||
                              cmd->count("--rho-sr") || cmd->count("--rho-rd") ||
                              cmd->count("--fading-sr") || cmd->count("--fading-rd") ||
                              cmd->count("--no-csi");
    if (!f.corr_file.empty()) {
        if (inline_given)
            throw validation_error("--corr-file and inline channel flags are mutually exclusive");
        return scenario::load_file(f.corr_file);
    }

    channel::ChannelConfig cfg;
    cfg.m = f.m;
    cfg.n = f.n;
    cfg.alpha = f.alpha;
    cfg.fading_sr = channel::FadingModel::parse(f.fading_sr);
    cfg.fading_rd = channel::FadingModel::parse(f.fading_rd);
    cfg.csi_at_source = !f.no_csi;

    bool has_sr = cmd->count("--rho-sr") > 0;
    bool has_rd = cmd->count("--rho-rd") > 0;
    double rho_sr = f.rho_sr;
    double rho_rd = f.rho_rd;
    if (has_rd && !has_sr && cfg.n == 1 && cfg.m > 1) {
        has_sr = true;
        rho_sr = rho_rd;
        has_rd = false;
        notes.push_back("--rho-rd names a single-antenna link; applied to the source-relay link");
    }
    if (has_sr && !has_rd && cfg.m == 1 && cfg.n > 1) {
        has_rd = true;
        rho_rd = rho_sr;
        has_sr = false;
        notes.push_back("--rho-sr names a single-antenna link; applied to the relay-destination link");
    }
    if (has_sr && cfg.m > 1) cfg.corr_sr = channel::CorrelationMatrix::exponential(cfg.m, rho_sr);
    if (has_rd && cfg.n > 1) cfg.corr_rd = channel::CorrelationMatrix::exponential(cfg.n, rho_rd);
    cfg.validate();

    scenario::Scenario sc;
    sc.single = cfg;
    return sc;
}

std::string corr_text(const std::optional<channel::CorrelationMatrix>& corr) {
    if (!corr || corr->is_identity()) return "identity";
    const auto eigs = channel::eigenvalues(*corr);
    std::string s = "eigs[";
    for (int i = 0; i < eigs.size(); ++i) {
        if (i) s += ';';
        s += fmtg(eigs.values[static_cast<std::size_t>(i)]);
    }
    return s + "]";
}

void echo_link(std::ostream& out, const channel::ChannelConfig& c, int idx) {
    out << "# ";
    if (idx >= 0) out << "relay" << idx << ": ";
    out << "m=" << c.m << " n=" << c.n << " alpha=" << fmtg(c.alpha) << " csi="
        << (c.csi_at_source ? "true" : "false") << " fading_sr=" << c.fading_sr.describe()
        << " fading_rd=" << c.fading_rd.describe() << " corr_sr=" << corr_text(c.corr_sr)
        << " corr_rd=" << corr_text(c.corr_rd) << "\n";
}

void echo_scenario(std::ostream& out, const scenario::Scenario& sc) {
    if (sc.single) {
        echo_link(out, *sc.single, -1);
    } else {
        for (std::size_t i = 0; i < sc.relays->links.size(); ++i)
            echo_link(out, sc.relays->links[i], static_cast<int>(i));
        if (sc.relays->direct_link_outage)
            out << "# direct_p=" << fmtg(*sc.relays->direct_link_outage) << "\n";
    }
}

void echo_notes(std::ostream& out, const std::vector<std::string>& notes) {
    for (const auto& s : notes) out << "# note: " << s << "\n";
}

const channel::ChannelConfig& single_link(const scenario::Scenario& sc, const char* cmd_name) {
    if (!sc.single)
        throw validation_error(std::string("the ") + cmd_name +
                               " command works on a single link; use `selection` for relay sets");
    return *sc.single;
}

// One resolved evaluation point on the threshold axis.
struct ThresholdRow {
    double snr_db = nan_v;
    double gamma = nan_v;
    double x = nan_v;
    double rate_nats = nan_v;
    bool has_snr = false;
};

// The threshold axis comes either from --x directly or from --rate-bits plus
// --snr-db (x = (e^R - 1)/gamma). With bare --x, runs that need an absolute
// SNR (Monte-Carlo) pin snr = 1 and rate = ln(1+x), which leaves the outage
// event unchanged.
std::vector<ThresholdRow> resolve_thresholds(const CLI::App* cmd, const std::vector<double>& xs,
                                             double rate_bits, const std::vector<double>& snr_db,
                                             bool need_gamma, std::vector<std::string>& notes) {
    const bool has_x = cmd->count("--x") > 0;
    const bool has_rate = cmd->count("--rate-bits") > 0;
    const bool has_snr = cmd->count("--snr-db") > 0;
    if (has_x && has_rate)
        throw validation_error("--x and --rate-bits are mutually exclusive threshold sources");
    if (!has_x && !has_rate)
        throw validation_error("need a threshold: --x, or --rate-bits with --snr-db");
    if (has_rate && !has_snr) throw validation_error("--rate-bits needs --snr-db");

    std::vector<ThresholdRow> rows;
    if (has_x) {
        if (has_snr && xs.size() > 1 && snr_db.size() > 1)
            throw validation_error("only one of --x and --snr-db may take multiple values");
        if (has_snr) {
            for (const double db : snr_db) {
                for (const double x : xs) {
                    ThresholdRow r;
                    r.snr_db = db;
                    r.gamma = std::pow(10.0, db / 10.0);
                    r.x = x;
                    r.rate_nats = std::log1p(r.gamma * x);
                    r.has_snr = true;
                    rows.push_back(r);
                }
            }
        } else {
            if (need_gamma)
                notes.push_back("no --snr-db given; monte-carlo runs at snr=1 with rate=ln(1+x)");
            for (const double x : xs) {
                ThresholdRow r;
                r.gamma = 1.0;
                r.x = x;
                r.rate_nats = std::log1p(x);
                rows.push_back(r);
            }
        }
    } else {
        const double rate_nats = rate_bits * ln2;
        for (const double db : snr_db) {
            ThresholdRow r;
            r.snr_db = db;
            r.gamma = std::pow(10.0, db / 10.0);
            r.x = std::expm1(rate_nats) / r.gamma;
            r.rate_nats = rate_nats;
            r.has_snr = true;
            rows.push_back(r);
        }
    }
    for (const auto& r : rows)
        if (!(r.x > 0.0) || !std::isfinite(r.x))
            throw validation_error("thresholds must be positive and finite");
    return rows;
}

// Buffered emit: nothing reaches the file or stream until the run succeeded.
void deliver(const std::string& payload, const OutputFlags& of, std::ostream& out) {
    if (of.format != "csv") throw validation_error("--format supports only csv");
    if (of.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(of.out_path, std::ios::binary);
    if (!f) throw validation_error("cannot open output file: " + of.out_path);
    f << payload;
}

// ---- subcommand runners ------------------------------------------------

int run_outage(const CLI::App* cmd, const ChannelFlags& cf, const OutputFlags& of,
               const std::vector<double>& xs, double rate_bits, const std::vector<double>& snr_db,
               const std::string& protocol, std::ostream& out) {
    std::vector<std::string> notes;
    const auto sc = resolve_scenario(cmd, cf, notes);
    const auto& cfg = single_link(sc, "outage");
    const auto proto = parse_protocol(protocol);
    const auto rows = resolve_thresholds(cmd, xs, rate_bits, snr_db, false, notes);

    std::ostringstream os;
    os << "# relaydmt outage\n";
    echo_scenario(os, sc);
    os << "# protocol=" << protocol << "\n";
    echo_notes(os, notes);
    const bool with_snr = rows.front().has_snr;
    os << (with_snr ? "snr_db,x,p\n" : "x,p\n");
    for (const auto& r : rows) {
        const double p = outage::outage_analytic(r.x, cfg, proto);
        if (with_snr) os << fmt12(r.snr_db) << ',';
        os << fmt12(r.x) << ',' << fmt12(p) << '\n';
    }
    deliver(os.str(), of, out);
    return 0;
}

int run_capacity(const CLI::App* cmd, const ChannelFlags& cf, const OutputFlags& of,
                 const std::vector<double>& eps, const std::vector<double>& snr_db,
                 const std::string& protocol, std::ostream& out) {
    std::vector<std::string> notes;
    const auto sc = resolve_scenario(cmd, cf, notes);
    const auto& cfg = single_link(sc, "capacity");
    const auto proto = parse_protocol(protocol);
    if (cmd->count("--eps") == 0 || cmd->count("--snr-db") == 0)
        throw validation_error("capacity needs --eps and --snr-db");
    if (eps.size() > 1 && snr_db.size() > 1)
        throw validation_error("only one of --eps and --snr-db may take multiple values");

    std::ostringstream os;
    os << "# relaydmt capacity\n";
    echo_scenario(os, sc);
    os << "# protocol=" << protocol << "\n";
    echo_notes(os, notes);
    os << "eps,snr_db,x_eps,c_nats,c_norm,x_eps_approx\n";
    for (const double e : eps) {
        const auto approx = capacity::snr_loss_approx(e, cfg);
        for (const double db : snr_db) {
            const double gamma = std::pow(10.0, db / 10.0);
            const auto cap = capacity::outage_capacity(e, gamma, cfg, proto);
            const double c_norm = cap.c_exact / std::log1p(gamma);
            os << fmt12(e) << ',' << fmt12(db) << ',' << fmt12(cap.x_eps) << ','
               << fmt12(cap.c_exact) << ',' << fmt12(c_norm) << ','
               << fmt12(approx.applicable ? approx.x_eps_approx : nan_v) << '\n';
        }
    }
    deliver(os.str(), of, out);
    return 0;
}

int run_dmt(const CLI::App* cmd, const ChannelFlags& cf, const OutputFlags& of,
            const std::vector<double>& rs, const std::vector<double>& snr_db,
            const std::string& protocol, std::ostream& out) {
    std::vector<std::string> notes;
    const auto sc = resolve_scenario(cmd, cf, notes);
    const auto& cfg = single_link(sc, "dmt");
    const auto proto = parse_protocol(protocol);
    if (cmd->count("--snr-db") == 0) throw validation_error("dmt needs --snr-db");

    std::vector<double> r_grid = rs;
    if (cmd->count("--r") == 0) {
        r_grid.clear();
        for (int i = 0; i <= 50; ++i) r_grid.push_back(i / 50.0);
    }
    if (r_grid.size() > 1 && snr_db.size() > 1)
        throw validation_error("only one of --r and --snr-db may take multiple values");

    std::ostringstream os;
    os << "# relaydmt dmt\n";
    echo_scenario(os, sc);
    os << "# protocol=" << protocol << "\n";
    echo_notes(os, notes);
    os << "snr_db,r,d_finite,d_asymptotic,saturated\n";
    for (const double db : snr_db) {
        const double gamma = std::pow(10.0, db / 10.0);
        for (const double r : r_grid) {
            const auto pt = capacity::finite_snr_dmt(gamma, r, cfg, proto);
            const double d_inf = capacity::asymptotic_dmt(cfg, r);
            os << fmt12(db) << ',' << fmt12(r) << ',' << fmt12(pt.d) << ',' << fmt12(d_inf)
               << ',' << (pt.saturated ? 1 : 0) << '\n';
        }
    }
    deliver(os.str(), of, out);
    return 0;
}

int run_mc(const CLI::App* cmd, const ChannelFlags& cf, const OutputFlags& of,
           const std::vector<double>& xs, double rate_bits, const std::vector<double>& snr_db,
           std::uint64_t trials, std::uint64_t seed, int partitions, int relays, bool selection,
           double direct_p, const std::string& protocol, std::ostream& out) {
    std::vector<std::string> notes;
    const auto sc = resolve_scenario(cmd, cf, notes);
    const auto proto_an = parse_protocol(protocol);
    const auto rows = resolve_thresholds(cmd, xs, rate_bits, snr_db, true, notes);

    // --selection turns the single-link config (or scenario file) into a
    // relay-set run; --relays N replicates an inline link N times.
    std::optional<multirelay::RelaySet> set;
    if (sc.relays) {
        set = *sc.relays;
        if (!selection && cmd->count("--relays") == 0)
            throw validation_error("scenario file holds a relay set; pass --selection");
    } else if (selection || cmd->count("--relays") > 0) {
        multirelay::RelaySet s;
        const int n_rel = cmd->count("--relays") > 0 ? relays : 2;
        if (n_rel < 1) throw validation_error("--relays must be >= 1");
        for (int i = 0; i < n_rel; ++i) s.links.push_back(*sc.single);
        if (cmd->count("--direct-p") > 0) s.direct_link_outage = direct_p;
        set = std::move(s);
    }
    const auto proto_mc =
        set ? (proto_an == outage::Protocol::af ? mcsim::McProtocol::af_selection
                                                : mcsim::McProtocol::df_selection)
            : (proto_an == outage::Protocol::af ? mcsim::McProtocol::af : mcsim::McProtocol::df);

    std::ostringstream os;
    os << "# relaydmt mc\n";
    if (set) {
        scenario::Scenario tmp;
        tmp.relays = *set;
        echo_scenario(os, tmp);
    } else {
        echo_scenario(os, sc);
    }
    os << "# protocol=" << protocol << (set ? " selection=true" : "") << " trials=" << trials
       << " seed=" << seed << " partitions=" << partitions << "\n";
    echo_notes(os, notes);
    os << "snr_db,x,p_mc,std_err\n";
    for (const auto& r : rows) {
        const auto est = set ? mcsim::estimate_outage(*set, r.rate_nats, r.gamma, trials, seed,
                                                      proto_mc, partitions)
                             : mcsim::estimate_outage(*sc.single, r.rate_nats, r.gamma, trials,
                                                      seed, proto_mc, partitions);
        os << fmt12(r.has_snr ? r.snr_db : 0.0) << ',' << fmt12(r.x) << ',' << fmt12(est.p_hat)
           << ',' << fmt12(est.std_err) << '\n';
    }
    deliver(os.str(), of, out);
    return 0;
}

int run_selection(const CLI::App* cmd, const ChannelFlags& cf, const OutputFlags& of,
                  const std::vector<double>& xs, double rate_bits,
                  const std::vector<double>& snr_db, int relays, double direct_p,
                  std::uint64_t trials, std::uint64_t seed, const std::string& protocol,
                  std::ostream& out) {
    std::vector<std::string> notes;
    const auto sc = resolve_scenario(cmd, cf, notes);
    const auto proto = parse_protocol(protocol);
    const bool with_mc = cmd->count("--trials") > 0;
    const auto rows = resolve_thresholds(cmd, xs, rate_bits, snr_db, with_mc, notes);

    multirelay::RelaySet set;
    if (sc.relays) {
        if (cmd->count("--relays") > 0 || cmd->count("--direct-p") > 0)
            throw validation_error("--relays/--direct-p conflict with a relay-set scenario file");
        set = *sc.relays;
    } else {
        const int n_rel = cmd->count("--relays") > 0 ? relays : 2;
        if (n_rel < 1) throw validation_error("--relays must be >= 1");
        for (int i = 0; i < n_rel; ++i) set.links.push_back(*sc.single);
        if (cmd->count("--direct-p") > 0) set.direct_link_outage = direct_p;
    }
    set.validate();

    std::ostringstream os;
    os << "# relaydmt selection\n";
    scenario::Scenario tmp;
    tmp.relays = set;
    echo_scenario(os, tmp);
    os << "# protocol=" << protocol << " relays=" << set.links.size();
    if (with_mc) os << " trials=" << trials << " seed=" << seed;
    os << "\n";
    echo_notes(os, notes);
    os << (with_mc ? "x,p_selection,p_mc,std_err\n" : "x,p_selection\n");
    const auto proto_mc = proto == outage::Protocol::af ? mcsim::McProtocol::af_selection
                                                        : mcsim::McProtocol::df_selection;
    for (const auto& r : rows) {
        const double p = multirelay::relay_set_outage(r.x, set, proto);
        os << fmt12(r.x) << ',' << fmt12(p);
        if (with_mc) {
            const auto est =
                mcsim::estimate_outage(set, r.rate_nats, r.gamma, trials, seed, proto_mc);
            os << ',' << fmt12(est.p_hat) << ',' << fmt12(est.std_err);
        }
        os << '\n';
    }
    deliver(os.str(), of, out);
    return 0;
}

int run_figure(const OutputFlags& of, const std::string& name, std::uint64_t trials,
               std::uint64_t seed, std::ostream& out) {
    std::ostringstream os;
    write_figure(name, trials, seed, os);
    deliver(os.str(), of, out);
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"outage, capacity and diversity-multiplexing analysis for MIMO relay links"};
    app.name("relaydmt");
    app.require_subcommand(1);

    int exit_code = 0;

    // outage
    auto* c_out = app.add_subcommand("outage", "analytic outage probability");
    ChannelFlags f_out;
    OutputFlags o_out;
    std::vector<double> out_xs, out_snr;
    double out_rate = 1.0;
    std::string out_proto = "af";
    add_channel_flags(c_out, f_out);
    add_output_flags(c_out, o_out);
    c_out->add_option("--x", out_xs, "normalized threshold(s) (e^R - 1)/snr");
    c_out->add_option("--rate-bits", out_rate, "target rate, bits/s/Hz");
    c_out->add_option("--snr-db", out_snr, "average SNR(s), dB");
    c_out->add_option("--protocol", out_proto, "af or df");
    c_out->callback([&] {
        exit_code = run_outage(c_out, f_out, o_out, out_xs, out_rate, out_snr, out_proto, out);
    });

    // capacity
    auto* c_cap = app.add_subcommand("capacity", "eps-outage capacity and SNR loss");
    ChannelFlags f_cap;
    OutputFlags o_cap;
    std::vector<double> cap_eps, cap_snr;
    std::string cap_proto = "af";
    add_channel_flags(c_cap, f_cap);
    add_output_flags(c_cap, o_cap);
    c_cap->add_option("--eps", cap_eps, "outage level(s)");
    c_cap->add_option("--snr-db", cap_snr, "average SNR(s), dB");
    c_cap->add_option("--protocol", cap_proto, "af or df");
    c_cap->callback(
        [&] { exit_code = run_capacity(c_cap, f_cap, o_cap, cap_eps, cap_snr, cap_proto, out); });

    // dmt
    auto* c_dmt = app.add_subcommand("dmt", "finite-SNR diversity-multiplexing tradeoff");
    ChannelFlags f_dmt;
    OutputFlags o_dmt;
    std::vector<double> dmt_r, dmt_snr;
    std::string dmt_proto = "af";
    add_channel_flags(c_dmt, f_dmt);
    add_output_flags(c_dmt, o_dmt);
    c_dmt->add_option("--r", dmt_r, "multiplexing gain(s) in [0,1]; default grid 0..1 step 0.02");
    c_dmt->add_option("--snr-db", dmt_snr, "average SNR(s), dB (must exceed 0 dB)");
    c_dmt->add_option("--protocol", dmt_proto, "af or df");
    c_dmt->callback(
        [&] { exit_code = run_dmt(c_dmt, f_dmt, o_dmt, dmt_r, dmt_snr, dmt_proto, out); });

    // mc
    auto* c_mc = app.add_subcommand("mc", "seeded Monte-Carlo outage estimate");
    ChannelFlags f_mc;
    OutputFlags o_mc;
    std::vector<double> mc_xs, mc_snr;
    double mc_rate = 1.0, mc_direct = 0.0;
    std::uint64_t mc_trials = 1000000, mc_seed = 12345;
    int mc_parts = 1, mc_relays = 2;
    bool mc_sel = false;
    std::string mc_proto = "af";
    add_channel_flags(c_mc, f_mc);
    add_output_flags(c_mc, o_mc);
    c_mc->add_option("--x", mc_xs, "normalized threshold(s)");
    c_mc->add_option("--rate-bits", mc_rate, "target rate, bits/s/Hz");
    c_mc->add_option("--snr-db", mc_snr, "average SNR(s), dB");
    c_mc->add_option("--trials", mc_trials, "Monte-Carlo trials");
    c_mc->add_option("--seed", mc_seed, "RNG seed");
    c_mc->add_option("--partitions", mc_parts, "worker partitions (result-invariant)");
    c_mc->add_option("--relays", mc_relays, "relay count for --selection");
    c_mc->add_flag("--selection", mc_sel, "simulate best-relay selection over --relays links");
    c_mc->add_option("--direct-p", mc_direct, "independent direct-link outage probability");
    c_mc->add_option("--protocol", mc_proto, "af or df");
    c_mc->callback([&] {
        exit_code = run_mc(c_mc, f_mc, o_mc, mc_xs, mc_rate, mc_snr, mc_trials, mc_seed, mc_parts,
                           mc_relays, mc_sel, mc_direct, mc_proto, out);
    });

    // selection
    auto* c_sel = app.add_subcommand("selection", "N-relay selection outage (analytic + MC)");
    ChannelFlags f_sel;
    OutputFlags o_sel;
    std::vector<double> sel_xs, sel_snr;
    double sel_rate = 1.0, sel_direct = 0.0;
    std::uint64_t sel_trials = 1000000, sel_seed = 12345;
    int sel_relays = 2;
    std::string sel_proto = "af";
    add_channel_flags(c_sel, f_sel);
    add_output_flags(c_sel, o_sel);
    c_sel->add_option("--x", sel_xs, "normalized threshold(s)");
    c_sel->add_option("--rate-bits", sel_rate, "target rate, bits/s/Hz");
    c_sel->add_option("--snr-db", sel_snr, "average SNR(s), dB");
    c_sel->add_option("--relays", sel_relays, "number of identical relays (inline scenario)");
    c_sel->add_option("--direct-p", sel_direct, "independent direct-link outage probability");
    c_sel->add_option("--trials", sel_trials, "also run MC with this many trials");
    c_sel->add_option("--seed", sel_seed, "RNG seed for the MC columns");
    c_sel->add_option("--protocol", sel_proto, "af or df");
    c_sel->callback([&] {
        exit_code = run_selection(c_sel, f_sel, o_sel, sel_xs, sel_rate, sel_snr, sel_relays,
                                  sel_direct, sel_trials, sel_seed, sel_proto, out);
    });

    // figure
    auto* c_fig = app.add_subcommand("figure", "emit a canned data series (fig2..fig6)");
    OutputFlags o_fig;
    std::string fig_name;
    std::uint64_t fig_trials = 1000000, fig_seed = 12345;
    add_output_flags(c_fig, o_fig);
    c_fig->add_option("name", fig_name, "fig2, fig3, fig4, fig5 or fig6")->required();
    c_fig->add_option("--trials", fig_trials, "Monte-Carlo trials for fig3/fig5");
    c_fig->add_option("--seed", fig_seed, "RNG seed for fig3/fig5");
    c_fig->callback([&] { exit_code = run_figure(o_fig, fig_name, fig_trials, fig_seed, out); });

    std::vector<std::string> argv_s;
    argv_s.reserve(args.size() + 1);
    argv_s.push_back("relaydmt");
    for (const auto& a : args) argv_s.push_back(a);
    std::vector<const char*> argv;
    argv.reserve(argv_s.size());
    for (const auto& a : argv_s) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const range_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const degeneracy_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const insufficient_data_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}

} // namespace relaydmt::cli
