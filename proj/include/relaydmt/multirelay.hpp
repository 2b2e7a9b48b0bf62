/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_MULTIRELAY_HPP
#define RELAYDMT_MULTIRELAY_HPP

#include "relaydmt/channel.hpp"
#include "relaydmt/outage.hpp"

#include <optional>
#include <vector>

namespace relaydmt::multirelay {

// N independent relay links plus an optional direct source-destination path
// that multiplies into the overall outage.
struct RelaySet {
    std::vector<channel::ChannelConfig> links;
    std::optional<double> direct_link_outage;

    int size() const { return static_cast<int>(links.size()); }
    void validate() const;
};

// Selection relaying is in outage only when every relay link is; independent
// links multiply, and so does the direct path if present.
double selection_outage(const std::vector<double>& per_link_p,
                        std::optional<double> direct_p = std::nullopt);

// Exact analytic outage of a relay set at threshold x: per-link closed forms
// composed through the product rule.
double relay_set_outage(double x, const RelaySet& set,
                        outage::Protocol proto = outage::Protocol::af);

// Low-outage power form for N identical i.i.d. relays:
// P ~ (per-link leading term)^N.
outage::LowOutageExpansion selection_lowout(double alpha, int m, int n, int n_relays);

// Asymptotic selection DMT: per-relay min diversity orders add up.
double relay_set_asymptotic_dmt(const RelaySet& set, double r);

} // namespace relaydmt::multirelay

#endif
