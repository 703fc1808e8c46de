#!/usr/bin/env python3
# Copyright 2026 The kzsim Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Writes the schedule CSVs under data/schedules.

The device-like files are APPROXIMATE: smooth synthetic curves with the
qualitative shape of a DW2KQ schedule (A decays to zero, B grows to B(1))
whose only calibrated number is B(1). They are not digitized measurements.
"""

import argparse
from pathlib import Path

import numpy as np

DEVICES = {
    # name: (A(0) GHz, B(1) GHz, A decay rate, B growth power)
    "nasa": (6.2, 2 * 6.344, 2.0, 1.8),
    "burnaby": (6.0, 2 * 5.930, 2.2, 1.7),
}


def device_curves(a0, b1, decay, power, knots=51):
    s = np.linspace(0.0, 1.0, knots)
    a = a0 * (1.0 - s) ** 2 * np.exp(-decay * s)
    b = b1 * s**power + 0.05 * (1.0 - s)  # small residual B(0) > 0
    b = np.maximum.accumulate(b)
    a[-1] = 0.0
    return s, a, b


def write(path, header, s, a, b):
    with open(path, "w", encoding="ascii") as f:
        f.write("# Copyright 2026 The kzsim Authors. SPDX-License-Identifier: Apache-2.0\n")
        for line in header:
            f.write(f"# {line}\n")
        f.write("s,A_GHz,B_GHz\n")
        for row in zip(s, a, b):
            f.write(",".join(f"{v:.6f}" for v in row) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[2] / "data" / "schedules")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    half_scale = 6.344
    write(
        args.out / "linear_nasa.csv",
        ["exact linear schedule A(s)/2 = c (1 - s), B(s)/2 = c s with c = 6.344 GHz (NASA B(1)/2)"],
        np.array([0.0, 1.0]),
        np.array([2 * half_scale, 0.0]),
        np.array([0.0, 2 * half_scale]),
    )
    for name, (a0, b1, decay, power) in DEVICES.items():
        s, a, b = device_curves(a0, b1, decay, power)
        write(
            args.out / f"{name}_approx.csv",
            [
                f"APPROXIMATE {name} DW2KQ-like schedule: synthetic curves, not digitized data",
                f"only B(1) = {b1:.3f} GHz is calibrated; the shape of A(s), B(s) is illustrative",
            ],
            s,
            a,
            b,
        )


if __name__ == "__main__":
    main()
