#!/usr/bin/env python3
"""Candidate routes for 1F1(50;20;-100) at double-emulated precision."""
import mpmath as mp

mp.mp.dps = 60
ref = mp.hyp1f1(50, 20, -100)
refM13 = mp.hyp1f1(-60, 1, 10)
print("ref 1F1(50;20;-100)  =", mp.nstr(ref, 25))
print("ref 1F1(-60;1;10)    =", mp.nstr(refM13, 25))

def report(name, val):
    mp.mp.dps = 60
    e = abs(mp.mpf(val) - ref) / abs(ref)
    print(f"{name}: value = {mp.nstr(mp.mpf(val), 16)}  relerr = {mp.nstr(e, 5)}")
    mp.mp.dps = 16

mp.mp.dps = 16

# T3: Kummer then forward recursion in a-chain y_k = 1F1(-k;20;100)
a, b, z = mp.mpf(50), mp.mpf(20), mp.mpf(-100)
zp = -z          # +100
y0 = mp.mpf(1)                      # 1F1(0;20;100)
y1 = 1 - zp / b                     # 1F1(-1;20;100) exact 2-term
ym, yk = y0, y1
for k in range(1, 30):
    ak = mp.mpf(-k)
    ynext = (ak * ym - (2 * ak - b + zp) * yk) / (b - ak)
    ym, yk = yk, ynext
val = mp.e ** z * yk
report("T3 Kummer+forward-a (30 steps)", val)

# T2: asym3 terminating
S = mp.mpf(0)
t = mp.mpf(1)
for j in range(0, 31):
    S += t
    t *= (b - a + j) * (1 - a + j) / ((j + 1) * z)
val = mp.e ** z * mp.power(abs(z), a - b) * ((-1) ** (a - b)).real * S / mp.gamma(a)
# z^{a-b} for z=-100, a-b=30: (-100)^30 = 100^30 positive real
val = mp.e ** z * mp.mpf(100) ** (a - b) * S / mp.gamma(a)
report("T2 asym3 terminating", val)

# T1: Buchholz D_j on (50,20,-100)
w2 = z * (2 * b - 4 * a)   # -100*(40-200)=16000
w = mp.sqrt(w2)
D = [mp.mpf(1), mp.mpf(0), b / 2]
s = mp.mpf(0)
zj = mp.mpf(1)
nconv = 0
for j in range(500):
    if j >= 3:
        D.append(((j - 2 + b) * D[j - 2] + (2 * a - b) * D[j - 3]) / j)
    term = D[j] * zj * mp.besselj(b - 1 + j, w) / w ** (b - 1 + j)
    s += term
    zj *= z
    if j > 5 and abs(term) < mp.mpf("1e-17") * abs(s):
        nconv = j
        break
val = mp.e ** (z / 2) * 2 ** (b - 1) * s
report(f"T1 Buchholz ({nconv} terms)", val)

# forward-a route for case 13: 1F1(-60;1;10)
b13, z13 = mp.mpf(1), mp.mpf(10)
y0 = mp.mpf(1)
y1 = 1 - z13 / b13
ym, yk = y0, y1
for k in range(1, 60):
    ak = mp.mpf(-k)
    ynext = (ak * ym - (2 * ak - b13 + z13) * yk) / (b13 - ak)
    ym, yk = yk, ynext
mp.mp.dps = 60
e = abs(mp.mpf(yk) - refM13) / abs(refM13)
print(f"case13 forward-a: relerr = {mp.nstr(e, 5)}")
mp.mp.dps = 16

# Buchholz for case 13 at dps16
a, b, z = mp.mpf(-60), mp.mpf(1), mp.mpf(10)
w2 = z * (2 * b - 4 * a)
w = mp.sqrt(w2)
D = [mp.mpf(1), mp.mpf(0), b / 2]
s = mp.mpf(0)
zj = mp.mpf(1)
for j in range(500):
    if j >= 3:
        D.append(((j - 2 + b) * D[j - 2] + (2 * a - b) * D[j - 3]) / j)
    term = D[j] * zj * mp.besselj(b - 1 + j, w) / w ** (b - 1 + j)
    s += term
    zj *= z
    if j > 5 and abs(term) < mp.mpf("1e-17") * abs(s):
        break
val13 = mp.e ** (z / 2) * 2 ** (b - 1) * s
mp.mp.dps = 60
e = abs(mp.mpf(val13) - refM13 / mp.gamma(1)) / abs(refM13)
print(f"case13 Buchholz ({j} terms): relerr = {mp.nstr(e, 5)}")
