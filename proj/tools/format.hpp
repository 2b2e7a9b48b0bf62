/* SPDX-License-Identifier: Apache-2.0
 *
 * relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
 * Copyright (c) 2026 relaydmt contributors
 */

#ifndef RELAYDMT_TOOLS_FORMAT_HPP
#define RELAYDMT_TOOLS_FORMAT_HPP

#include <cstdio>
#include <string>

namespace relaydmt::cli {

// CSV cell: scientific notation, 12 significant digits, locale-independent.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

// Header echo: shortest round-trip-safe decimal for config scalars.
inline std::string fmtg(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace relaydmt::cli

#endif
