#!/usr/bin/env python3
"""Reference values for the test suite, computed with mpmath at 40 digits.

Run from the repo root:  python3 scripts/gen_reference_values.py > tests/reference_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40
PI = mp.pi


def ld(x):
    return mp.nstr(x, 30, strip_zeros=False) + "L"


def theta_shifted(n):
    target = n * PI + PI / 2
    return mp.findroot(lambda t: mp.siegeltheta(t) - target, mp.grampoint(n) + PI / mp.log(mp.grampoint(n) / (2 * PI)) / 2)


def z_squared_integral(T):
    f = lambda t: abs(mp.zeta(mp.mpf(1) / 2 + 1j * t)) ** 2
    pieces = int(T) * 2
    with mp.workdps(20):
        return mp.quad(f, mp.linspace(0, T, pieces + 1), method="gauss-legendre")


def table(name, rows, cols):
    print(f"inline constexpr {name}[] = {{")
    for r in rows:
        print("    {" + ", ".join(r) + "},")
    print("};")


theta_t = ["10", "50", "100", "1000", "12345.678", "100000", "1000000", "10000000"]
z_t = ["100", "1000", "5000", "12345.678", "100000.25"]
zp_t = ["1000", "10000.5", "100000.25"]
gram_nu = [1, 2, 100, 10000, 100000]

print("#pragma once")
print("// Generated by scripts/gen_reference_values.py. Do not edit.")
print()
print("namespace ref {")
print()
print("struct ThetaRow { double t; long double theta; double dtheta; };")
table("ThetaRow kTheta", [[t, ld(mp.siegeltheta(mp.mpf(t))), ld(mp.diff(mp.siegeltheta, mp.mpf(t)))] for t in theta_t], 3)
print()
print("struct ZRow { double t; double z; };")
table("ZRow kZ", [[t, ld(mp.siegelz(mp.mpf(t)))] for t in z_t], 2)
print()
print("struct ZPrimeRow { double t; double zprime; };")
table("ZPrimeRow kZPrime", [[t, ld(mp.siegelz(mp.mpf(t), derivative=1))] for t in zp_t], 2)
print()
print("struct GramRow { long nu; double classical; double shifted; };")
table("GramRow kGram", [[str(n), ld(mp.grampoint(n)), ld(theta_shifted(n))] for n in gram_nu], 3)
print()
print("// Ordinates of the first zeros of zeta on the critical line.")
print("inline constexpr double kZetaZeros[] = {")
for n in range(1, 11):
    print(f"    {ld(mp.zetazero(n).imag)},")
print("};")
print()
print("struct IntegralRow { double T; double value; };")
table("IntegralRow kZSquaredIntegral", [[str(T), ld(z_squared_integral(T))] for T in (100, 300, 1000)], 2)
print()
print("}  // namespace ref")
