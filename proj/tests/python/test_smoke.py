# SPDX-License-Identifier: Apache-2.0
#
# relaydmt - outage and diversity-multiplexing analysis for MIMO relay links
# Copyright (c) 2026 relaydmt contributors

import json
import math

import numpy as np
import pytest

import relaydmt


def test_version():
    assert relaydmt.__version__ == "0.1.0"


def test_outage_reference_values():
    cfg = relaydmt.ChannelConfig(m=1, n=1, alpha=0.0)
    assert relaydmt.outage_probability(0.01, cfg) == pytest.approx(
        0.0448054913559056, rel=1e-12
    )
    assert relaydmt.outage_iid(0.01, 0.0, 2, 1) == pytest.approx(
        0.00975141424534263, rel=1e-12
    )
    assert relaydmt.outage_series(0.01, 0.0, 2, 1) == pytest.approx(
        relaydmt.outage_iid(0.01, 0.0, 2, 1), abs=1e-10
    )

    corr = relaydmt.ChannelConfig(m=2, n=1, alpha=0.0, rho_sr=0.5)
    assert relaydmt.outage_probability(0.01, corr) == pytest.approx(
        0.0106704696035279, rel=1e-10
    )

    df = relaydmt.outage_probability(0.01, cfg, protocol="df")
    assert df == pytest.approx(0.0198013266932447, rel=1e-12)


def test_numpy_correlation_matrix():
    rho = 0.5
    mat = np.array([[1.0, rho], [rho, 1.0]], dtype=complex)
    cfg = relaydmt.ChannelConfig(m=2, n=1, alpha=0.0, corr_sr=mat)
    assert relaydmt.outage_probability(0.01, cfg) == pytest.approx(
        0.0106704696035279, rel=1e-10
    )


def test_low_outage_expansion():
    lo = relaydmt.low_outage_approx(0.0, relaydmt.ChannelConfig(m=1, n=3))
    assert lo.leading_power == 1
    assert lo.coeff_poly == pytest.approx(0.5, rel=1e-12)
    assert lo.coeff_log == 0.0
    assert lo.evaluate(1e-4) == pytest.approx(0.5e-4, rel=1e-3)


def test_monte_carlo_is_deterministic_and_calibrated():
    cfg = relaydmt.ChannelConfig(m=1, n=1)
    a = relaydmt.mc_outage(cfg, math.log(2.0), 100.0, trials=50000, seed=42)
    b = relaydmt.mc_outage(cfg, math.log(2.0), 100.0, trials=50000, seed=42)
    assert a.p_hat == b.p_hat
    assert a.outage_events == b.outage_events
    assert abs(a.p_hat - 0.0448054913559056) <= 4.0 * a.std_err

    parts = relaydmt.mc_outage(
        cfg, math.log(2.0), 100.0, trials=50000, seed=42, partitions=7
    )
    assert parts.p_hat == a.p_hat


def test_capacity_and_dmt():
    cfg = relaydmt.ChannelConfig(m=2, n=1)
    cap = relaydmt.outage_capacity(1e-3, 10.0, cfg)
    assert cap.x_eps == pytest.approx(0.00100365281543, rel=1e-8)
    assert cap.c_exact == pytest.approx(math.log1p(10.0 * cap.x_eps), rel=1e-12)

    ap = relaydmt.snr_loss_approx(1e-3, cfg)
    assert ap.applicable

    pt = relaydmt.finite_snr_dmt(1e4, 0.0, relaydmt.ChannelConfig(m=2, n=1, alpha=1.0))
    assert pt.d == pytest.approx(0.9999589898, rel=1e-7)
    assert not pt.saturated
    assert relaydmt.asymptotic_dmt(relaydmt.ChannelConfig(m=2, n=3), 0.5) == pytest.approx(1.0)


def test_selection():
    link = relaydmt.ChannelConfig(m=1, n=1)
    p1 = relaydmt.outage_probability(0.01, link)
    p3 = relaydmt.selection_outage(0.01, [link, link, link])
    assert p3 == pytest.approx(p1**3, rel=1e-12)
    assert p3 == pytest.approx(8.99484601659e-5, rel=1e-9)

    est = relaydmt.mc_selection(
        [link, link], math.log(2.0), 100.0, trials=200000, seed=7, direct_p=0.5
    )
    assert abs(est.p_hat - 0.5 * p1**2) <= 4.0 * max(est.std_err, 1e-12)


def test_scenario_roundtrip(tmp_path):
    single = tmp_path / "single.json"
    single.write_text(json.dumps({"m": 2, "n": 2, "alpha": 1, "rho_sr": 0.5, "rho_rd": 0.3}))
    cfg = relaydmt.load_scenario(str(single))
    assert isinstance(cfg, relaydmt.ChannelConfig)
    assert relaydmt.outage_probability(0.05, cfg) == pytest.approx(
        0.00825493436009234, rel=1e-9
    )

    relays = tmp_path / "relays.json"
    relays.write_text(
        json.dumps({"relays": [{"m": 1, "n": 1}, {"m": 2, "n": 1}], "direct_p": 0.25})
    )
    sc = relaydmt.load_scenario(str(relays))
    assert isinstance(sc, dict)
    assert len(sc["links"]) == 2
    assert sc["direct_p"] == pytest.approx(0.25)


def test_bessel_k():
    assert relaydmt.bessel_k(1, 0.2) == pytest.approx(4.7759725432204722, rel=1e-13)
    assert relaydmt.bessel_k(0, 0.2) == pytest.approx(1.7527038555281459, rel=1e-13)


def test_error_mapping():
    with pytest.raises(ValueError):
        relaydmt.ChannelConfig(m=0, n=1)
    with pytest.raises(ValueError):
        relaydmt.outage_iid(-0.1, 0.0, 1, 1)
    with pytest.raises(ValueError):
        relaydmt.outage_probability(0.01, relaydmt.ChannelConfig(), protocol="xx")
    with pytest.raises(RuntimeError):
        relaydmt.diversity_slope(
            relaydmt.ChannelConfig(), 0.0, [40.0, 44.0, 48.0, 52.0], trials=200, seed=1
        )
