# Copyright 2026 The qcut Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled reference circuits and their probability tables.

The tables come from a dense numpy simulation that shares no code with the
C++ library, so they serve as an external check on `qcut simulate`.
"""

import itertools
import json
import math
import sys
from pathlib import Path

import numpy as np


def reference_circuit(dims):
    n = len(dims)
    gates = [{"name": "H", "target": q} for q in range(n)]
    gates.append({"name": "CSUM", "control": n // 2 - 1, "target": n // 2})
    for q in range(n):
        gates.append({"name": "RY", "target": q, "theta": math.pi / (3 + 2 * q)})
        gates.append({"name": "RZ", "target": q, "theta": math.pi / (4 + 2 * q)})
    return {"dims": dims, "gates": gates}


def local_op(name, d, theta=0.0):
    if name == "H":
        j, k = np.meshgrid(range(d), range(d), indexing="ij")
        return np.exp(2j * np.pi * ((j * k) % d) / d) / math.sqrt(d)
    u = np.eye(d, dtype=complex)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    if name == "RY":
        u[:2, :2] = [[c, -s], [s, c]]
    else:
        u[0, 0], u[1, 1] = np.exp(-0.5j * theta), np.exp(0.5j * theta)
    return u


def simulate(circuit):
    dims = circuit["dims"]
    psi = np.zeros(dims, dtype=complex)
    psi[(0,) * len(dims)] = 1
    for g in circuit["gates"]:
        t = g["target"]
        if g["name"] == "CSUM":
            c = g["control"]
            out = np.zeros_like(psi)
            for idx in itertools.product(*map(range, dims)):
                dst = list(idx)
                dst[t] = (idx[t] + idx[c]) % dims[t]
                out[tuple(dst)] = psi[idx]
            psi = out
        else:
            u = local_op(g["name"], dims[t], g.get("theta", 0.0))
            psi = np.moveaxis(np.tensordot(u, psi, axes=([1], [t])), 0, t)
    return psi


def table(psi):
    sep = "," if max(psi.shape) >= 11 else ""
    lines = []
    for idx in sorted(itertools.product(*map(range, psi.shape)), key=lambda i: sep.join(map(str, i))):
        lines.append("%s %.5f" % (sep.join(map(str, idx)), abs(psi[idx]) ** 2))
    return "\n".join(lines) + "\n"


def main(out_dir):
    for dims in ([2, 2, 2, 2], [2, 2, 3, 3]):
        name = "dummy_" + "".join(map(str, dims))
        circuit = reference_circuit(dims)
        (out_dir / (name + ".json")).write_text(json.dumps(circuit, indent=2) + "\n")
        (out_dir / (name + ".probs.txt")).write_text(table(simulate(circuit)))


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent)
