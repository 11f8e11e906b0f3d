#!/usr/bin/env python3
"""Regenerate the frontend test fixtures from the backend.

Produces the DL-high/HPADC chart document exactly as the CLI/API emit it,
plus a validation fixture of request bodies with the server's actual
verdicts, so the client-side validator can be held to 422 parity.
"""

import json
from pathlib import Path

from fastapi.testclient import TestClient

from mmwrx.app.service import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"

TINY = {"n_trials": 1, "bit_range": [1], "nrf_set": [2], "architectures": ["DC"]}

VALIDATION_CASES = [
    ("preset strings", {"scenario": {"preset": "UL-high", **TINY}, "components": "HPADC"}),
    ("preset with overrides", {"scenario": {"preset": "DL-high", **TINY, "snr_db": -5.0},
                               "components": {"preset": "LPADC", "p_ps_w": 0.001}}),
    ("full custom scenario", {"scenario": {"name": "mine", "n_tx": 4, "n_rx": 8,
                                           "snr_db": 0.0, "bandwidth_hz": 1e9, **TINY},
                              "components": "IPADC"}),
    ("full custom components", {"scenario": {"preset": "UL-high", **TINY},
                                "components": {"name": "mine", "p_lna_w": 0.02,
                                               "p_sp_w": 0.01, "p_c_w": 0.01,
                                               "p_ps_w": 0.0, "p_m_w": 0.01,
                                               "p_lo_w": 0.005, "p_lpf_w": 0.01,
                                               "p_bb_amp_w": 0.005,
                                               "adc_fom_j_per_step_hz": 6.5e-14}}),
    ("iso power lines", {"scenario": {"preset": "UL-high", **TINY},
                         "components": "HPADC", "iso_power_w": [1.0, 3.0]}),
    ("unknown scenario preset", {"scenario": "nope", "components": "HPADC"}),
    ("unknown component preset", {"scenario": {"preset": "UL-high", **TINY},
                                  "components": "nope"}),
    ("nrf above n_rx", {"scenario": {"preset": "UL-high", "nrf_set": [128]},
                        "components": "HPADC"}),
    ("zero rf chains", {"scenario": {"preset": "UL-high", "nrf_set": [0]},
                        "components": "HPADC"}),
    ("zero trials", {"scenario": {"preset": "UL-high", "n_trials": 0},
                     "components": "HPADC"}),
    ("zero tx antennas", {"scenario": {"preset": "UL-high", "n_tx": 0},
                          "components": "HPADC"}),
    ("empty bit range", {"scenario": {"preset": "UL-high", "bit_range": []},
                         "components": "HPADC"}),
    ("zero bits", {"scenario": {"preset": "UL-high", "bit_range": [0]},
                   "components": "HPADC"}),
    ("empty architectures", {"scenario": {"preset": "UL-high", "architectures": []},
                             "components": "HPADC"}),
    ("bogus architecture", {"scenario": {"preset": "UL-high", "architectures": ["AC", "XX"]},
                            "components": "HPADC"}),
    ("negative lna power", {"scenario": {"preset": "UL-high", **TINY},
                            "components": {"preset": "HPADC", "p_lna_w": -0.1}}),
    ("zero adc figure of merit", {"scenario": {"preset": "UL-high", **TINY},
                                  "components": {"preset": "HPADC",
                                                 "adc_fom_j_per_step_hz": 0.0}}),
    ("custom scenario missing fields", {"scenario": {"name": "partial", "n_tx": 8},
                                        "components": "HPADC"}),
    ("custom components missing fields", {"scenario": {"preset": "UL-high", **TINY},
                                          "components": {"name": "partial", "p_lna_w": 0.02}}),
    ("nonpositive iso power", {"scenario": {"preset": "UL-high", **TINY},
                               "components": "HPADC", "iso_power_w": [0.0]}),
    ("unknown scenario field", {"scenario": {"preset": "UL-high", "bogus": 3},
                                "components": "HPADC"}),
    ("zero bandwidth", {"scenario": {"preset": "UL-high", "bandwidth_hz": 0.0},
                        "components": "HPADC"}),
]


def main():
    client = TestClient(create_app())
    FIXTURES.mkdir(parents=True, exist_ok=True)

    resp = client.post("/api/v1/sweep", json={"scenario": "DL-high", "components": "HPADC"})
    resp.raise_for_status()
    (FIXTURES / "dl_high_hpadc.json").write_bytes(resp.content)
    print(f"dl_high_hpadc.json: {len(resp.content)} bytes, "
          f"{len(resp.json()['points'])} points")

    cases = []
    for name, body in VALIDATION_CASES:
        resp = client.post("/api/v1/sweep", json=body)
        entry = {"name": name, "body": body, "status": resp.status_code}
        if resp.status_code != 200:
            entry["error"] = resp.json()
        cases.append(entry)
        print(f"{resp.status_code} {name}" +
              (f" -> {entry['error']['field']}" if resp.status_code != 200 else ""))
    (FIXTURES / "validation_cases.json").write_text(json.dumps(cases, indent=2) + "\n")

    resp = client.get("/api/v1/presets")
    (FIXTURES / "presets.json").write_bytes(resp.content)
    print("presets.json written")


if __name__ == "__main__":
    main()
