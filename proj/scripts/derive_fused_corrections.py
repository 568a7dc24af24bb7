#!/usr/bin/env python3
# Copyright 2026 The cohsim Authors
# SPDX-License-Identifier: Apache-2.0
"""Independent re-derivation of the compiler's core rewrite.

Checks, with numpy only, that for every phase phi

    CPHASE(phi) . SWAP
        = exp(-i pi/2) . XY(pi) . CPHASE(pi + phi) . (RZ(-pi/2) (x) RZ(-pi/2))

where the RZ pair acts first.  This is the identity the native-gate compiler
relies on to route-and-couple with two 2-qubit gates per step; the deferred
RZ(-pi/2) corrections and the accumulated global phase come from here.

Exits nonzero if the identity fails for any sampled phase.
"""

import sys

import numpy as np


def rz(a: float) -> np.ndarray:
    return np.diag([np.exp(-1j * a / 2), np.exp(1j * a / 2)])


def cphase(p: float) -> np.ndarray:
    return np.diag([1, 1, 1, np.exp(1j * p)])


def xy(beta: float) -> np.ndarray:
    c, s = np.cos(beta / 2), 1j * np.sin(beta / 2)
    return np.array(
        [[1, 0, 0, 0], [0, c, s, 0], [0, s, c, 0], [0, 0, 0, 1]],
        dtype=complex,
    )


SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def main() -> int:
    rng = np.random.default_rng(20260825)
    phis = np.concatenate(
        [[0.0, np.pi / 2, np.pi, -np.pi / 2], rng.uniform(-np.pi, np.pi, 16)]
    )
    worst = 0.0
    for phi in phis:
        lhs = cphase(phi) @ SWAP
        rhs = (
            np.exp(-1j * np.pi / 2)
            * xy(np.pi)
            @ cphase(np.pi + phi)
            @ np.kron(rz(-np.pi / 2), rz(-np.pi / 2))
        )
        dev = np.max(np.abs(lhs - rhs))
        worst = max(worst, dev)
        print(f"phi = {phi:+.6f}  max |lhs - rhs| = {dev:.3e}")
    print(f"worst deviation over {len(phis)} phases: {worst:.3e}")
    if worst > 1e-12:
        print("FAIL: fused rewrite identity does not hold", file=sys.stderr)
        return 1
    print("OK: fused rewrite identity holds")
    return 0


if __name__ == "__main__":
    sys.exit(main())
