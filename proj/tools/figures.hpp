/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_TOOLS_FIGURES_HPP
#define RELAYDMT_TOOLS_FIGURES_HPP

#include <cstdint>
#include <ostream>
#include <string>

namespace relaydmt::cli {

// Emit one of the canned data series (fig2..fig6) as CSV. trials and seed
// only matter for the series that carry Monte-Carlo columns (fig3, fig5).
// Unknown names raise validation_error.
void write_figure(const std::string& name, std::uint64_t trials, std::uint64_t seed,
                  std::ostream& out);

} // namespace relaydmt::cli

#endif
