/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_SCENARIO_HPP
#define RELAYDMT_SCENARIO_HPP

#include "relaydmt/channel.hpp"
#include "relaydmt/multirelay.hpp"

#include <optional>
#include <string>

namespace relaydmt::scenario {

// A scenario file describes either one relay link or a relay set; exactly one
// of the two members is populated.
struct Scenario {
    std::optional<channel::ChannelConfig> single;
    std::optional<multirelay::RelaySet> relays;
};

// Link keys: m, n, alpha, csi, fading_sr, fading_rd ("family" or
// "family:param"), rho_sr/rho_rd (scalar exponential correlation) or
// corr_sr/corr_rd (explicit Hermitian matrix; entries are reals or [re, im]
// pairs). A relay-set file instead holds "relays": [link, ...] plus an
// optional "direct_p". Unknown keys are rejected.
Scenario load_json(const std::string& text);
Scenario load_file(const std::string& path);

} // namespace relaydmt::scenario

#endif
