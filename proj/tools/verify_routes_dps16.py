#!/usr/bin/env python3
"""Emulate double precision (dps=16) for the two recurrence-based rescue routes."""
import mpmath as mp

def taylor_1f1(a, b, z, tol=mp.mpf("2.3e-16"), cap=2000):
    s = mp.mpf(1) if not isinstance(z, mp.mpc) else mp.mpc(1)
    t = s
    for j in range(cap):
        t = t * (a + j) / (b + j) * z / (j + 1)
        s += t
        if abs(t) < tol * abs(s):
            u = t * (a + j + 1) / (b + j + 1) * z / (j + 2)
            if abs(u) < tol * abs(s):
                return s, j + 1
    return s, cap

def taylor_2f1(a, b, c, z, tol=mp.mpf("2.3e-16"), cap=3000):
    s = mp.mpf(1) if not isinstance(z, mp.mpc) else mp.mpc(1)
    t = s
    for j in range(cap):
        t = t * (a + j) * (b + j) / (c + j) * z / (j + 1)
        s += t
        if abs(t) < tol * abs(s):
            return s, j + 1
    return s, cap

print("=== route: 1F1(50;20;-100), Kummer first then direct? ===")
mp.mp.dps = 60
ref = mp.hyp1f1(50, 20, -100)
print("ref =", mp.nstr(ref, 25))

mp.mp.dps = 16
# Option A (paper I(B)): shift b up, Taylor at large b, recurse down in 1F1 scaling.
a, b, z = mp.mpf(50), mp.mpf(20), mp.mpf(-100)
for N in [150, 220, 300]:
    hi1, n1 = taylor_1f1(a, b + N + 1, z)
    hi0, n0 = taylor_1f1(a, b + N, z)
    yn1, yn = hi1, hi0
    for k in range(N, 0, -1):
        bk = b + k
        # M(a;bk-1;z) = -[bk(1-bk-z) M(a;bk;z) + z(bk-a) M(a;bk+1;z)] / (bk(bk-1))
        ynm1 = -(bk * (1 - bk - z) * yn + z * (bk - a) * yn1) / (bk * (bk - 1))
        yn1, yn = yn, ynm1
    mp.mp.dps = 60
    err = abs(mp.mpf(yn) - ref) / abs(ref)
    mp.mp.dps = 16
    print(f"N={N}: terms({n0},{n1}) 1F1-scaling downward relerr = {mp.nstr(err, 5)}")

print()
print("=== route: F case 18  F(5,-300;10;0.5) via Euler + (00+) downward ===")
mp.mp.dps = 60
ref2 = mp.hyp2f1(5, -300, 10, mp.mpf("0.5"))
print("ref 2F1 =", mp.nstr(ref2, 25))
mp.mp.dps = 16
a, b, c, z = mp.mpf(5), mp.mpf(-300), mp.mpf(10), mp.mpf("0.5")
# Euler: 2F1(a,b;c;z) = (1-z)^(c-a-b) 2F1(c-a,c-b;c;z); compute the RHS with c-shifts.
a2, b2 = c - a, c - b  # 5, 310
for N in [400, 500]:
    hi1, n1 = taylor_2f1(a2, b2, c + N + 1, z)
    hi0, n0 = taylor_2f1(a2, b2, c + N, z)
    yn1, yn = hi1, hi0
    for k in range(N, 0, -1):
        ck = c + k
        # (ck)(ck-1)(z-1) y_{k-1} + ck[ck-1-(2ck-a-b-1)z] y_k + (c-a+k)(c-b+k) z y_{k+1} = 0
        ynm1 = -(ck * (ck - 1 - (2 * ck - a2 - b2 - 1) * z) * yn + (c - a2 + k) * (c - b2 + k) * z * yn1) / (ck * (ck - 1) * (z - 1))
        yn1, yn = yn, ynm1
    val = mp.power(1 - z, c - a - b) * yn
    mp.mp.dps = 60
    err = abs(mp.mpf(val) - ref2) / abs(ref2)
    mp.mp.dps = 16
    print(f"N={N}: terms({n0},{n1}) Euler+(00+) downward relerr = {mp.nstr(err, 5)}")

print()
print("=== (+0) forward for case 12: M(100;1.5;2.5) from small a ===")
mp.mp.dps = 60
ref3 = mp.hyp1f1(100, mp.mpf("1.5"), mp.mpf("2.5"))
print("ref 1F1 =", mp.nstr(ref3, 25))
mp.mp.dps = 16
b, z = mp.mpf("1.5"), mp.mpf("2.5")
# forward recursion on a: (b-a) M(a-1) + (2a-b+z) M(a) - a M(a+1) = 0
y0, _ = taylor_1f1(mp.mpf(1), b, z)
y1, _ = taylor_1f1(mp.mpf(2), b, z)
ym, yk = y0, y1
for k in range(2, 101):
    ak = mp.mpf(k - 1)  # current a in relation connecting a-1, a, a+1
    ynext = ((2 * ak - b + z) * yk + (b - ak) * ym) / ak
    ym, yk = yk, ynext
mp.mp.dps = 60
err = abs(mp.mpf(yk) - ref3) / abs(ref3)
print("(+0) forward 99 steps relerr =", mp.nstr(err, 5))

print()
print("=== digits achievable: direct Taylor on 1F1(50;20;-100) in dps16 ===")
mp.mp.dps = 16
v, nt = taylor_1f1(mp.mpf(50), mp.mpf(20), mp.mpf(-100))
mp.mp.dps = 60
print("direct Taylor:", mp.nstr(mp.mpf(v), 10), " relerr =", mp.nstr(abs(mp.mpf(v) - ref) / abs(ref), 5))
