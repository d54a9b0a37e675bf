#!/usr/bin/env python3
"""Third round: (++-) and (+0-) recurrence hypotheses; case-18 route in low precision."""
import mpmath as mp

mp.mp.dps = 40
a, b, c, z = mp.mpf("1.2"), mp.mpf("0.7"), mp.mpf("2.1"), mp.mpc("0.3", "0.2")

def yF(n, rel):
    if rel == "++-": return mp.hyp2f1(a + n, b + n, c - n, z)
    if rel == "+0-": return mp.hyp2f1(a + n, b, c - n, z)

print("=== (++-) with coefficient polys at shifted params A=a+n,B=b+n,C=c-n ===")
for n in [mp.mpf(2), mp.mpf(3)]:
    A, B, C = a + n, b + n, c - n
    U = z * (A + B - C + 1) * (A + B - C + 2) + A * B * (1 - z)
    V = (1 - z) * (1 - A - B - A * B) + z * (A + B - C - 1) * (A + B - C - 2)
    c1 = (1 - z) * (B - C) * (B - 1) * (A - 1 + z * (B - C - 1))
    c2 = B * (B + 1 - C) * (1 - z) * (A + z * (B - C + 2))
    c3 = C - 2 * B - (A - B) * z
    t1 = -(A - C) * (A - C - 1) * (B - C - 1) * (B - C) * z * U * yF(n - 1, "++-")
    t2 = C * (c1 * U + c2 * V + c3 * U * V) * yF(n, "++-")
    t3 = A * B * C * (C - 1) * (1 - z) ** 3 * V * yF(n + 1, "++-")
    print(f"n={n}: residual scale = {mp.nstr(abs(t1+t2+t3)/max(abs(t1),abs(t2),abs(t3)), 5)}")

print()
print("=== (+0-) hypotheses ===")
for n in [mp.mpf(2), mp.mpf(3)]:
    A, B, C = a + n, b, c - n
    t1 = z * (A - C) * (A - C - 1) * (B - C) * (A + z * (B - C + 1)) * yF(n - 1, "+0-")
    t3 = -A * C * (A - 1 + z * (B - C)) * (1 - z) ** 2 * yF(n + 1, "+0-")
    # H-a: as printed (sum of mixed-degree terms)
    mid_a = C * ((A - 1) * (C - 1) * (B - C) + A * (A - 1) + (A + 3 * B - 4 * C + 2) * z
                 + (B - C) * (B - C + 1) * (4 * A - C - 1) * z ** 2 - (A - B) * (B - C) * (B - C + 1) * z ** 3)
    # H-b: product form for the z^1 coefficient
    mid_b = C * ((A - 1) * (C - 1) * (B - C) + A * (A - 1) * (A + 3 * B - 4 * C + 2) * z
                 + (B - C) * (B - C + 1) * (4 * A - C - 1) * z ** 2 - (A - B) * (B - C) * (B - C + 1) * z ** 3)
    for name, mid in [("printed-sum", mid_a), ("product-z1", mid_b)]:
        t2 = mid * yF(n, "+0-")
        print(f"n={n} {name}: residual scale = {mp.nstr(abs(t1+t2+t3)/max(abs(t1),abs(t2),abs(t3)), 5)}")

print()
print("=== GST 2007 (+0-) reference form (for comparison) ===")
# Gil-Segura-Temme give (+0-) as: A_n y_{n-1} + B_n y_n + C_n y_{n+1} = 0 with
# y_n = 2F1(a+n, b; c-n; z). Try deriving B_n by solving for it numerically, then factor.
for n in [mp.mpf(2)]:
    A, B, C = a + n, b, c - n
    t1 = z * (A - C) * (A - C - 1) * (B - C) * (A + z * (B - C + 1)) * yF(n - 1, "+0-")
    t3 = -A * C * (A - 1 + z * (B - C)) * (1 - z) ** 2 * yF(n + 1, "+0-")
    needed_mid = -(t1 + t3) / yF(n, "+0-")
    print("needed middle coefficient:", mp.nstr(needed_mid, 25))
    print("  /C =", mp.nstr(needed_mid / C, 25))
    # compare against z-polynomial with unknown coefficients: fit with 4 z values
    zs = [mp.mpc("0.3","0.2"), mp.mpc("-0.4","0.1"), mp.mpc("0.15","-0.6"), mp.mpc("0.8","0.35")]
    rows = []
    rhs = []
    for zz in zs:
        y0 = mp.hyp2f1(a+n-1, b, c-n+1, zz)
        y1 = mp.hyp2f1(a+n, b, c-n, zz)
        y2 = mp.hyp2f1(a+n+1, b, c-n-1, zz)
        tt1 = zz * (A - C) * (A - C - 1) * (B - C) * (A + zz * (B - C + 1)) * y0
        tt3 = -A * C * (A - 1 + zz * (B - C)) * (1 - zz) ** 2 * y2
        nm = -(tt1 + tt3) / y1 / C
        rows.append([1, zz, zz**2, zz**3])
        rhs.append(nm)
    sol = mp.lu_solve(mp.matrix(rows), mp.matrix(rhs))
    print("  fitted poly coeffs (z^0..z^3):", [mp.nstr(s, 20) for s in sol])
    print("  candidates: z0 =", mp.nstr((A-1)*(C-1)*(B-C), 20),
          " z1(prod) =", mp.nstr(A*(A-1)*(A+3*B-4*C+2), 20),
          " z2 =", mp.nstr((B-C)*(B-C+1)*(4*A-C-1), 20),
          " z3 =", mp.nstr(-(A-B)*(B-C)*(B-C+1), 20))

print()
print("=== case 18 route at dps=16 (double emulation) ===")
mp.mp.dps = 16
a, b, c, z = mp.mpf(5), mp.mpf(-300), mp.mpf(10), mp.mpf("0.5")
def boldF(aa, bb, cc, zz):
    # Taylor series in double-emulated precision, bold F
    s = mp.mpf(1); t = mp.mpf(1)
    for j in range(2000):
        t *= (aa + j) * (bb + j) / (cc + j) * zz / (j + 1)
        s += t
        if abs(t) < mp.mpf("1e-17") * abs(s):
            break
    return s * mp.rgamma(cc)
N = 200
hi1 = boldF(a, b, c + N + 1, z)
hi0 = boldF(a, b, c + N, z)
yn1, yn = hi1, hi0
for n in range(N, 0, -1):
    cn = c + n
    # (z-1) bF_{n-1} + (cn-1-(2cn-a-b-1)z) bF_n + (c-a+n)(c-b+n) z bF_{n+1}... careful index:
    # relation at index n: (z-1) bF_{n-1} + (c+n-1-(2(c+n)-a-b-1)z) bF_n + (c-a+n)(c-b+n)z bF_{n+1} = 0
    ynm1 = -((c + n - 1 - (2 * (c + n) - a - b - 1) * z) * yn + (c - a + n) * (c - b + n) * z * yn1) / (z - 1)
    yn1, yn = yn, ynm1
mp.mp.dps = 40
ref = mp.hyp2f1(a, b, c, z) * mp.rgamma(c)
print("downward (00+) from c+200, dps16: relerr =", mp.nstr(abs(mp.mpf(repr(yn.real)) - ref) / abs(ref), 5))
