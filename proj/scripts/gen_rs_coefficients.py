#!/usr/bin/env python3
"""Emit Taylor tables for the Riemann-Siegel correction functions C0..C4.

Each C_k(p) is expanded in z = p - 1/2 and written as a long double array.
Run from the repo root:  python3 scripts/gen_rs_coefficients.py > src/rs_coefficients.inc
"""
import mpmath as mp

mp.mp.dps = 60
PI = mp.pi
DEGREE = 80
KEEP = 56


def psi_centered(z):
    return -mp.cos(2 * PI * (z * z - mp.mpf(5) / 16)) / mp.cos(2 * PI * z)


def deriv(c, k):
    out = list(c)
    for _ in range(k):
        out = [out[i + 1] * (i + 1) for i in range(len(out) - 1)]
    return out


def combo(*terms):
    n = min(len(s) for s, _ in terms)
    return [mp.fsum(s[i] * a for s, a in terms) for i in range(n)]


ps = mp.taylor(psi_centered, mp.mpf(0), DEGREE)
tables = [
    ps,
    combo((deriv(ps, 3), -1 / (96 * PI**2))),
    combo((deriv(ps, 2), 1 / (64 * PI**2)), (deriv(ps, 6), 1 / (18432 * PI**4))),
    combo((deriv(ps, 1), -1 / (64 * PI**2)), (deriv(ps, 5), -1 / (3840 * PI**4)),
          (deriv(ps, 9), -1 / (5308416 * PI**6))),
    combo((ps, 1 / (128 * PI**2)), (deriv(ps, 4), mp.mpf(19) / (24576 * PI**4)),
          (deriv(ps, 8), mp.mpf(11) / (5898240 * PI**6)),
          (deriv(ps, 12), 1 / (2038431744 * PI**8))),
]

print("// Generated by scripts/gen_rs_coefficients.py. Do not edit.")
print(f"inline constexpr int kRsTaylorLength = {KEEP};")
print(f"inline constexpr long double kRsTaylor[{len(tables)}][{KEEP}] = {{")
for k, c in enumerate(tables):
    print(f"    // C{k}")
    print("    {")
    for i in range(KEEP):
        v = c[i] if abs(c[i]) > mp.mpf(10) ** -40 else mp.mpf(0)
        print(f"        {mp.nstr(v, 24, strip_zeros=False)}L,")
    print("    },")
print("};")
