# SPDX-License-Identifier: Apache-2.0
#
# relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
# Copyright (c) 2026 relaydmt contributors

"""Outage, capacity and diversity-multiplexing analysis for MIMO relay links.

The heavy lifting lives in the compiled extension ``relaydmt._core``; this
package re-exports its public surface.
"""

from ._core import (
    ChannelConfig,
    DegeneracyError,
    DmtPoint,
    InsufficientDataError,
    LowOutageExpansion,
    McEstimate,
    NumericError,
    OutageCapacity,
    RangeError,
    SlopePoint,
    SlopeResult,
    SnrLossApprox,
    ValidationError,
    __version__,
    asymptotic_dmt,
    bessel_k,
    diversity_slope,
    finite_snr_dmt,
    load_scenario,
    low_outage_approx,
    mc_outage,
    mc_selection,
    outage_capacity,
    outage_iid,
    outage_probability,
    outage_series,
    selection_outage,
    snr_loss_approx,
)

__all__ = [
    "ChannelConfig",
    "DegeneracyError",
    "DmtPoint",
    "InsufficientDataError",
    "LowOutageExpansion",
    "McEstimate",
    "NumericError",
    "OutageCapacity",
    "RangeError",
    "SlopePoint",
    "SlopeResult",
    "SnrLossApprox",
    "ValidationError",
    "__version__",
    "asymptotic_dmt",
    "bessel_k",
    "diversity_slope",
    "finite_snr_dmt",
    "load_scenario",
    "low_outage_approx",
    "mc_outage",
    "mc_selection",
    "outage_capacity",
    "outage_iid",
    "outage_probability",
    "outage_series",
    "selection_outage",
    "snr_loss_approx",
]
