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
"""Synthetic hardware-style sample file for the ingestion pipeline.

Each anneal time gets an exact Boltzmann kink distribution: every bond of an
antiferromagnetic free chain is a kink independently with probability
1 / (1 + exp(2 beta')), with beta'(t) chosen so that the density follows
rho(t) = rho1 * t^-alpha. Spins are then reconstructed from the kink pattern
starting from a random first spin.
"""

import argparse
from pathlib import Path

import numpy as np


def beta_for_density(length, rho):
    return 0.5 * np.log((1.0 - 1.0 / length) / rho - 1.0)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--length", type=int, default=64)
    parser.add_argument("--times", type=float, nargs="+", default=[1, 2, 5, 10, 20, 50, 100])
    parser.add_argument("--rho1", type=float, default=0.12)
    parser.add_argument("--alpha", type=float, default=0.3)
    parser.add_argument("--instances", type=int, default=2)
    parser.add_argument("--samples", type=int, default=100, help="per instance and time")
    parser.add_argument("--seed", type=int, default=20260101)
    parser.add_argument(
        "--out",
        type=Path,
        default=Path(__file__).resolve().parents[2] / "data" / "samples" / "synthetic_L64.csv",
    )
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    L = args.length
    rows = [
        "# Copyright 2026 The kzsim Authors. SPDX-License-Identifier: Apache-2.0",
        "instance_id,anneal_time,spins",
    ]
    for inst in range(args.instances):
        for t in args.times:
            rho = args.rho1 * t ** (-args.alpha)
            p_kink = 1.0 / (1.0 + np.exp(2.0 * beta_for_density(L, rho)))
            for _ in range(args.samples):
                kinks = rng.random(L - 1) < p_kink
                spins = np.empty(L, dtype=int)
                spins[0] = 1 if rng.random() < 0.5 else -1
                for i in range(L - 1):
                    # antiferro bond: a kink is a pair of equal neighbours
                    spins[i + 1] = spins[i] if kinks[i] else -spins[i]
                text = "".join("+" if s > 0 else "-" for s in spins)
                rows.append(f"inst{inst},{t:g},{text}")
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(rows) + "\n", encoding="ascii")


if __name__ == "__main__":
    main()
