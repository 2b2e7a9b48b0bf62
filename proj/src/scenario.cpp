/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/scenario.hpp"

#include "relaydmt/errors.hpp"

#include <json.hpp>

#include <complex>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace relaydmt::scenario {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (allowed.count(it.key()) == 0)
            throw validation_error(std::string("unknown ") + what + " key: " + it.key());
    }
}

int read_dim(const json& j, const char* key) {
    if (!j.contains(key)) return 1;
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        throw validation_error(std::string(key) + " must be a positive integer");
    return v.get<int>();
}

std::complex<double> read_entry(const json& v, const char* key) {
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw validation_error(std::string(key) + " entries must be numbers or [re, im] pairs");
}

channel::CorrelationMatrix read_matrix(const json& v, int dim, const char* key) {
    if (!v.is_array() || static_cast<int>(v.size()) != dim)
        throw validation_error(std::string(key) + " must be a " + std::to_string(dim) + "x" +
                               std::to_string(dim) + " matrix");
    Eigen::MatrixXcd r(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const json& row = v[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw validation_error(std::string(key) + " rows must have length " +
                                   std::to_string(dim));
        for (int c = 0; c < dim; ++c) r(i, c) = read_entry(row[static_cast<std::size_t>(c)], key);
    }
    return channel::CorrelationMatrix(r);
}

std::optional<channel::CorrelationMatrix> read_correlation(const json& j, int dim,
                                                           const char* rho_key,
                                                           const char* mat_key) {
    const bool has_rho = j.contains(rho_key);
    const bool has_mat = j.contains(mat_key);
    if (has_rho && has_mat)
        throw validation_error(std::string(rho_key) + " and " + mat_key +
                               " are mutually exclusive");
    if (has_rho) {
        const json& v = j.at(rho_key);
        if (!v.is_number()) throw validation_error(std::string(rho_key) + " must be a number");
        return channel::CorrelationMatrix::exponential(dim, v.get<double>());
    }
    if (has_mat) return read_matrix(j.at(mat_key), dim, mat_key);
    return std::nullopt;
}

channel::FadingModel read_fading(const json& j, const char* key) {
    if (!j.contains(key)) return channel::FadingModel::rayleigh();
    const json& v = j.at(key);
    if (!v.is_string()) throw validation_error(std::string(key) + " must be a string");
    return channel::FadingModel::parse(v.get<std::string>());
}

channel::ChannelConfig read_link(const json& j) {
    if (!j.is_object()) throw validation_error("link must be a JSON object");
    require_keys(j,
                 {"m", "n", "alpha", "csi", "fading_sr", "fading_rd", "rho_sr", "rho_rd",
                  "corr_sr", "corr_rd"},
                 "link");
    channel::ChannelConfig cfg;
    cfg.m = read_dim(j, "m");
    cfg.n = read_dim(j, "n");
    if (j.contains("alpha")) {
        if (!j.at("alpha").is_number()) throw validation_error("alpha must be a number");
        cfg.alpha = j.at("alpha").get<double>();
    }
    if (j.contains("csi")) {
        if (!j.at("csi").is_boolean()) throw validation_error("csi must be a boolean");
        cfg.csi_at_source = j.at("csi").get<bool>();
    }
    cfg.fading_sr = read_fading(j, "fading_sr");
    cfg.fading_rd = read_fading(j, "fading_rd");
    cfg.corr_sr = read_correlation(j, cfg.m, "rho_sr", "corr_sr");
    cfg.corr_rd = read_correlation(j, cfg.n, "rho_rd", "corr_rd");
    cfg.validate();
    return cfg;
}

} // namespace

Scenario load_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("scenario is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw validation_error("scenario must be a JSON object");

    Scenario sc;
    if (j.contains("relays")) {
        require_keys(j, {"relays", "direct_p"}, "scenario");
        const json& arr = j.at("relays");
        if (!arr.is_array() || arr.empty())
            throw validation_error("relays must be a non-empty array of links");
        multirelay::RelaySet set;
        for (const json& link : arr) set.links.push_back(read_link(link));
        if (j.contains("direct_p")) {
            const json& v = j.at("direct_p");
            if (!v.is_number()) throw validation_error("direct_p must be a number");
            set.direct_link_outage = v.get<double>();
        }
        set.validate();
        sc.relays = std::move(set);
    } else {
        sc.single = read_link(j);
    }
    return sc;
}

Scenario load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_json(buf.str());
}

} // namespace relaydmt::scenario
