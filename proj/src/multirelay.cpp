/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#include "relaydmt/multirelay.hpp"
#include "relaydmt/capacity.hpp"
#include "relaydmt/errors.hpp"

#include <cmath>

namespace relaydmt::multirelay {

void RelaySet::validate() const {
    if (links.empty()) throw validation_error("relay set needs at least one link");
    for (const auto& cfg : links) cfg.validate();
    if (direct_link_outage &&
        (!(*direct_link_outage >= 0.0) || !(*direct_link_outage <= 1.0)))
        throw validation_error("direct-link outage must lie in [0, 1]");
}

double selection_outage(const std::vector<double>& per_link_p, std::optional<double> direct_p) {
    if (per_link_p.empty()) throw validation_error("need at least one relay outage value");
    double p = 1.0;
    for (double pi : per_link_p) {
        if (!(pi >= 0.0) || !(pi <= 1.0) || !std::isfinite(pi))
            throw validation_error("per-link outage must lie in [0, 1]");
        p *= pi;
    }
    if (direct_p) {
        if (!(*direct_p >= 0.0) || !(*direct_p <= 1.0) || !std::isfinite(*direct_p))
            throw validation_error("direct-link outage must lie in [0, 1]");
        p *= *direct_p;
    }
    return p;
}

double relay_set_outage(double x, const RelaySet& set, outage::Protocol proto) {
    set.validate();
    std::vector<double> per_link;
    per_link.reserve(set.links.size());
    for (const auto& cfg : set.links)
        per_link.push_back(outage::outage_analytic(x, cfg, proto));
    return selection_outage(per_link, set.direct_link_outage);
}

outage::LowOutageExpansion selection_lowout(double alpha, int m, int n, int n_relays) {
    if (n_relays < 1) throw validation_error("relay count must be >= 1");
    auto lo = outage::lowout_iid(alpha, m, n);
    lo.repetition = n_relays;
    return lo;
}

double relay_set_asymptotic_dmt(const RelaySet& set, double r) {
    set.validate();
    std::vector<std::pair<double, double>> orders;
    orders.reserve(set.links.size());
    for (const auto& cfg : set.links) orders.push_back(capacity::link_diversity_orders(cfg));
    return capacity::asymptotic_dmt(orders, r);
}

} // namespace relaydmt::multirelay
