#!/usr/bin/env python3
"""Generate Chebyshev tables for the Riemann-Siegel remainder terms.

The critical-line functional Z(t) satisfies

    Z(t) = 2 * sum_{n<=N} n^{-1/2} cos(theta(t) - t log n) + R(t),
    R(t) ~ (-1)^{N-1} (t/2pi)^{-1/4} * [ C0(p) + C1(p)/tau + C2(p)/tau^2 + ... ],

with tau = sqrt(t/2pi), N = floor(tau), p = tau - N.  C0 has the classical
closed form  psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p);  the higher
terms are smooth functions of p which we recover numerically: at each
Chebyshev node p we evaluate the exact remainder R at several heights
t = 2 pi (K + p)^2 with mpmath, solve the small Vandermonde system for
C0..C6, and fit Chebyshev series (domain p in [0,1]) to C0..C4.

Output: ../include/zetalab/rs_coeffs.hpp (committed; regeneration is only
needed if the degree/height configuration changes).

Usage:  python3 gen_rs_coeffs.py [out.hpp]
"""

import sys
import time

import mpmath as mp
import numpy as np
from numpy.polynomial import chebyshev as C

mp.mp.dps = 38

HEIGHTS = [60, 85, 120, 170, 240, 340, 480]   # K:  tau = K + p
NUNK = 7                                      # solve C0..C6, keep C0..C4
NNODES = 81
DEGREE = 64
TRIM = 1e-15


def psi_closed(p):
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def remainder_scaled(p, K):
    """R(t) * (-1)^{N-1} * tau^{1/2}  at  tau = K + p."""
    tau = K + p
    t = 2 * mp.pi * tau * tau
    theta = mp.siegeltheta(t)
    main = mp.mpf(0)
    for n in range(1, K + 1):
        main += mp.cos(theta - t * mp.log(n)) / mp.sqrt(n)
    main *= 2
    R = mp.siegelz(t) - main
    sign = 1 if (K - 1) % 2 == 0 else -1
    return R * sign * mp.sqrt(tau)


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else "../include/zetalab/rs_coeffs.hpp"
    nodes = [(1 - mp.cos(mp.pi * i / (NNODES - 1))) / 2 for i in range(NNODES)]
    coeffs = [[] for _ in range(NUNK)]
    t0 = time.time()
    for idx, p in enumerate(nodes):
        rhs = mp.matrix([remainder_scaled(p, K) for K in HEIGHTS])
        A = mp.matrix(len(HEIGHTS), NUNK)
        for i, K in enumerate(HEIGHTS):
            tau = K + p
            for j in range(NUNK):
                A[i, j] = mp.mpf(1) / tau ** j
        sol = mp.lu_solve(A, rhs)
        for j in range(NUNK):
            coeffs[j].append(float(sol[j]))
        if idx % 16 == 0:
            err0 = float(abs(sol[0] - psi_closed(p)))
            print(f"node {idx:3d}/{NNODES} p={float(p):.6f}  C0 vs closed form: {err0:.3e}  "
                  f"[{time.time()-t0:.0f}s]", flush=True)

    x = np.array([float(v) for v in nodes])
    series = []
    for j in range(5):
        y = np.array(coeffs[j])
        fit = C.Chebyshev.fit(x, y, DEGREE, domain=[0.0, 1.0])
        c = fit.coef.copy()
        scale = np.max(np.abs(c))
        keep = len(c)
        while keep > 1 and abs(c[keep - 1]) < TRIM * scale:
            keep -= 1
        c = c[:keep]
        resid = np.max(np.abs(fit(x) - y))
        print(f"C{j}: degree {keep-1}, max |coef| {scale:.3e}, node residual {resid:.3e}")
        series.append(c)

    with open(out, "w") as f:
        f.write("// Chebyshev tables for the Riemann-Siegel remainder terms C0..C4,\n")
        f.write("// domain p in [0,1].  Generated by scripts/gen_rs_coeffs.py; do not edit.\n")
        f.write("#pragma once\n\n#include <array>\n\nnamespace zetalab::detail {\n\n")
        for j, c in enumerate(series):
            f.write(f"inline constexpr std::array<double, {len(c)}> kRsC{j} = {{\n")
            for v in c:
                f.write(f"    {float(v)!r},\n")
            f.write("};\n\n")
        f.write("} // namespace zetalab::detail\n")
    print("wrote", out)

    # end-to-end validation against mp.zeta at fresh heights
    print("validation vs mp.zeta (abs error of Z with m correction terms):")
    rng = np.random.default_rng(7)
    for t in sorted(rng.uniform(2000, 650000, 8)):
        t = mp.mpf(float(t))
        tau = mp.sqrt(t / (2 * mp.pi))
        N = int(mp.floor(tau))
        p = tau - N
        theta = mp.siegeltheta(t)
        main = 2 * mp.fsum(mp.cos(theta - t * mp.log(n)) / mp.sqrt(n) for n in range(1, N + 1))
        Zref = mp.siegelz(t)
        sign = 1 if (N - 1) % 2 == 0 else -1
        row = f"  t={float(t):>10.1f}: "
        for m in range(1, 5):
            corr = sum(C.Chebyshev(series[j], domain=[0.0, 1.0])(float(p)) / float(tau) ** j
                       for j in range(m))
            Zm = main + sign * float(tau) ** mp.mpf(-0.5) * corr
            row += f" m={m}:{float(abs(Zm - Zref)):.2e}"
        print(row, flush=True)


if __name__ == "__main__":
    main()
